#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace liewidth {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const {
    for (const auto& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
};

/// Bracket hook for the identity suites. Tests inject sign errors through it
/// to confirm the suite actually detects broken structure constants.
using BracketFn = std::function<Elem(const Elem&, const Elem&)>;

/// Runs the algebraic invariant suites on seeded random elements of the given
/// algebras: bracket axioms, Killing identities, the rank/centralizer
/// equivalence, orthogonality of images and centralizers, and the symplectic
/// membership identity.
inline SelftestReport run_invariant_suite(
    const std::vector<std::pair<Family, std::size_t>>& algebras, std::size_t trials,
    std::uint64_t seed, const BracketFn& br_hook = {}) {
  const BracketFn br =
      br_hook ? br_hook : [](const Elem& x, const Elem& y) { return bracket(x, y); };

  SuiteResult antisymmetry{"antisymmetry"};
  SuiteResult jacobi{"jacobi"};
  SuiteResult killing_invariance{"killing_invariance"};
  SuiteResult killing_nondegenerate{"killing_nondegenerate"};
  SuiteResult lemma5{"image_sum_vs_common_centralizer"};
  SuiteResult orthogonality{"killing_orthogonality"};
  SuiteResult sp_form{"symplectic_membership"};

  for (const auto& [family, n] : algebras) {
    const LieAlg L = LieAlg::build(family, n);
    SeededRng rng = SeededRng::substream(seed, (static_cast<std::uint64_t>(family) << 32) | n);

    for (std::size_t t = 0; t < trials; ++t) {
      const Elem x = random_elem(L, 3, rng), y = random_elem(L, 3, rng),
                 z = random_elem(L, 3, rng);

      ++antisymmetry.checks;
      if (!(br(x, y) == -br(y, x)) || !br(x, x).is_zero()) ++antisymmetry.failures;

      ++jacobi.checks;
      if (!(br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero()) ++jacobi.failures;

      ++killing_invariance.checks;
      if (!(killing(br(x, y), z) + killing(y, br(x, z))).is_zero()) ++killing_invariance.failures;
    }

    ++killing_nondegenerate.checks;
    if (rank_of(L.killing_gram()) != L.dim()) ++killing_nondegenerate.failures;

    const std::size_t pair_trials = trials / 4 + 1;
    for (std::size_t t = 0; t < pair_trials; ++t) {
      const Elem a = random_elem(L, 3, rng), b = random_elem(L, 3, rng);
      ++lemma5.checks;
      const std::size_t rank = image_sum_rank(a, b);
      const std::size_t cc = common_centralizer(a, b).dim();
      if (rank != L.dim() - cc || (rank == L.dim()) != (cc == 0)) ++lemma5.failures;
      ++orthogonality.checks;
      if (!(killing_orthogonal_complement(image_subspace(a)) == centralizer(a)))
        ++orthogonality.failures;
    }

    if (family == Family::SP) {
      const MatrixRat& omega = *L.omega();
      for (std::size_t i = 0; i < L.dim(); ++i) {
        ++sp_form.checks;
        if (!(L.basis(i).transpose() * omega + omega * L.basis(i)).is_zero()) ++sp_form.failures;
      }
    }
  }

  return SelftestReport{{antisymmetry, jacobi, killing_invariance, killing_nondegenerate, lemma5,
                         orthogonality, sp_form}};
}

/// Default selftest algebra set.
inline std::vector<std::pair<Family, std::size_t>> selftest_algebras() {
  return {{Family::SL, 2}, {Family::SL, 3}, {Family::SL, 4}, {Family::SP, 1}, {Family::SP, 2}};
}

}  // namespace liewidth
