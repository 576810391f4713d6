#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "current.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace liewidth {

// ---------------------------------------------------------------------------
// Spanning pairs: w1, w2 with g = [w1, g] + [w2, g].
// ---------------------------------------------------------------------------

struct SpanningPair {
  Elem w1, w2;
  std::size_t certificate_rank;  // rank [ad w1 | ad w2], equals dim g
  bool from_fallback = false;    // true when the principal candidate failed
};

/// Principal nilpotent, built from the simple root vectors: sum of E_{i,i+1}
/// for sl_n; for sp_2n additionally the long-root vector E_{n,2n}.
inline Elem principal_nilpotent(const LieAlg& L) {
  MatrixRat m(L.matrix_size(), L.matrix_size());
  switch (L.family()) {
    case Family::SL:
      for (std::size_t i = 0; i + 1 < L.matrix_size(); ++i) m(i, i + 1) = 1;
      break;
    case Family::SP: {
      const std::size_t n = L.n();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = 1;
        m(n + i + 1, n + i) = -1;
      }
      m(n - 1, 2 * n - 1) = 1;
      break;
    }
    case Family::SO:
      throw std::invalid_argument("principal_nilpotent: unsupported family so");
  }
  return Elem::from_matrix(L, m);
}

/// Searches for a spanning pair. The deterministic candidate is the principal
/// nilpotent and its transpose; if its rank certificate fails, seeded random
/// pairs are tried. Nullopt after `attempts` failed trials is inconclusive,
/// never a disproof.
inline std::optional<SpanningPair> spanning_pair(const LieAlg& L, std::size_t attempts,
                                                 std::uint64_t seed) {
  if (attempts < 1) throw std::invalid_argument("spanning_pair: attempts must be >= 1");
  if (L.family() != Family::SO) {
    const Elem w1 = principal_nilpotent(L);
    const Elem w2 = Elem::from_matrix(L, w1.matrix().transpose());
    const std::size_t rank = image_sum_rank(w1, w2);
    if (rank == L.dim()) return SpanningPair{w1, w2, rank, false};
  }
  SeededRng rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    const Elem w1 = random_elem(L, 3, rng);
    const Elem w2 = random_elem(L, 3, rng);
    const std::size_t rank = image_sum_rank(w1, w2);
    if (rank == L.dim()) return SpanningPair{w1, w2, rank, true};
  }
  return std::nullopt;
}

/// Writes z = [w1 (x) 1, X] + [w2 (x) 1, Y] degree by degree: coefficient k is
/// the free-variables-zero solution of [ad w1 | ad w2] (x_k; y_k) = z_k. The
/// system is consistent for every right-hand side by the spanning certificate.
inline std::pair<Current, Current> two_bracket_decompose(const Current& z,
                                                         const SpanningPair& p) {
  const LieAlg& L = z.algebra();
  if (!same_algebra(L, p.w1.algebra()))
    throw std::invalid_argument("two_bracket_decompose: pair from a different algebra");
  const MatrixRat sys = MatrixRat::hstack(ad_matrix(p.w1), ad_matrix(p.w2));
  Current x(L, z.order()), y(L, z.order());
  for (std::size_t k = 0; k < z.order(); ++k) {
    if (z.coeff(k).is_zero()) continue;
    auto sol = solve_particular(sys, z.coeff(k).coords());
    if (!sol) throw std::logic_error("two_bracket_decompose: spanning certificate violated");
    VectorRat xs(L.dim()), ys(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
      xs[i] = (*sol)[i];
      ys[i] = (*sol)[L.dim() + i];
    }
    x.set_coeff(k, Elem(L, std::move(xs)));
    y.set_coeff(k, Elem(L, std::move(ys)));
  }
  return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------------
// Condition (*) seeds: c = [a, b] with vanishing common centralizer.
// ---------------------------------------------------------------------------

struct StarSeed {
  Elem a, b, target;

  /// Validates both halves of the certificate on construction: the bracket
  /// identity and the full image-sum rank (equivalently zero common centralizer).
  static StarSeed make(Elem a, Elem b, Elem target) {
    if (!(bracket(a, b) == target)) throw std::logic_error("StarSeed: bracket(a,b) != target");
    if (image_sum_rank(a, b) != a.algebra().dim())
      throw std::logic_error("StarSeed: images of ad a, ad b do not span");
    return StarSeed{std::move(a), std::move(b), std::move(target)};
  }
};

struct StarSeedSearch {
  std::optional<StarSeed> seed;  // nullopt: not found, inconclusive over Q
  std::size_t attempts_used = 0;
};

namespace detail {

inline std::optional<StarSeed> try_seed(const Elem& a, const Elem& b, const Elem& c) {
  if (!(bracket(a, b) == c)) return std::nullopt;
  if (common_centralizer(a, b).dim() != 0) return std::nullopt;
  return StarSeed::make(a, b, c);
}

}  // namespace detail

/// Randomized search for a condition-(*) witness of c: draw a, test
/// c in im(ad a) by solving [a, b] = c directly, accept when the common
/// centralizer of (a, b) vanishes. For sl_2 the explicit normal-position
/// witnesses (h/2, c) and (e, gamma f) are tried first. Attempt t draws
/// uniform integer coordinates at height 1 + (t-1) mod height_cap, so small
/// witnesses are sampled densely before the lattice widens.
inline StarSeedSearch star_seed(const Elem& c, std::size_t attempts, std::uint64_t seed,
                                std::int64_t height_cap = 4) {
  if (c.is_zero()) throw std::invalid_argument("star_seed: zero target");
  if (height_cap < 1) throw std::invalid_argument("star_seed: height_cap must be >= 1");
  const LieAlg& L = c.algebra();

  if (L.family() == Family::SL && L.matrix_size() == 2) {
    const Elem e = Elem::basis(L, 0), f = Elem::basis(L, 1), h = Elem::basis(L, 2);
    const Elem half_h = Rational(1, 2) * h;
    for (const Elem& a : {half_h, -half_h})
      if (auto s = detail::try_seed(a, c, c)) return {std::move(s), 0};
    if (c.coords()[0].is_zero() && c.coords()[1].is_zero())
      if (auto s = detail::try_seed(e, c.coords()[2] * f, c)) return {std::move(s), 0};
  }

  SeededRng rng(seed);
  for (std::size_t t = 1; t <= attempts; ++t) {
    const auto height = 1 + static_cast<std::int64_t>((t - 1) % static_cast<std::size_t>(height_cap));
    const Elem a = random_elem(L, height, rng);
    if (a.is_zero()) continue;
    auto sol = solve_particular(ad_matrix(a), c.coords());
    if (!sol) continue;
    const Elem b(L, *std::move(sol));
    if (common_centralizer(a, b).dim() != 0) continue;
    return {StarSeed::make(a, b, c), t};
  }
  return {std::nullopt, attempts};
}

// ---------------------------------------------------------------------------
// Single-bracket decomposition: z = [x, y] in g (x) k[t]/(t^N).
// ---------------------------------------------------------------------------

struct SingleBracketResult {
  std::optional<std::pair<Current, Current>> factors;  // nullopt: seed not found
  std::size_t seed_attempts = 0;
};

/// Solves z = [x, y] degree by degree. The lowest degree m of z is split off
/// first (z = t^m z'), the seed (x_0, y_0) comes from star_seed on z'_0, and
/// each higher degree k solves the linear system
///   [x_0, y_k] + [x_k, y_0] = z'_k - sum_{i=1}^{k-1} [x_i, y_{k-i}]
/// whose matrix [-ad y_0 | ad x_0] is onto by the seed certificate. The second
/// factor is returned multiplied by t^m.
inline SingleBracketResult single_bracket_solve(const Current& z, std::size_t attempts,
                                                std::uint64_t seed) {
  const LieAlg& L = z.algebra();
  const auto maybe_m = lowest_degree(z);
  if (!maybe_m) return {std::pair{Current(L, z.order()), Current(L, z.order())}, 0};
  const std::size_t m = *maybe_m;
  const Current zp = shifted_down(z, m);

  StarSeedSearch found = star_seed(zp.coeff(0), attempts, seed);
  if (!found.seed) return {std::nullopt, found.attempts_used};
  const Elem& x0 = found.seed->a;
  const Elem& y0 = found.seed->b;

  Current x(L, zp.order()), y(L, zp.order());
  x.set_coeff(0, x0);
  y.set_coeff(0, y0);
  const MatrixRat sys = MatrixRat::hstack(-ad_matrix(y0), ad_matrix(x0));
  for (std::size_t k = 1; k < zp.order(); ++k) {
    Elem rhs = zp.coeff(k);
    for (std::size_t i = 1; i < k; ++i) rhs -= bracket(x.coeff(i), y.coeff(k - i));
    auto sol = solve_particular(sys, rhs.coords());
    if (!sol) throw std::logic_error("single_bracket_solve: seed certificate violated");
    VectorRat xs(L.dim()), ys(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
      xs[i] = (*sol)[i];
      ys[i] = (*sol)[L.dim() + i];
    }
    x.set_coeff(k, Elem(L, std::move(xs)));
    y.set_coeff(k, Elem(L, std::move(ys)));
  }
  return {std::pair{shifted(x, 0, z.order()), shifted(y, m, z.order())}, found.attempts_used};
}

// ---------------------------------------------------------------------------
// Obstruction campaigns: sampling evidence that every [a, b] = c forces a
// nonzero common centralizer.
// ---------------------------------------------------------------------------

struct SampleRecord {
  std::uint64_t draw_index;          // substream index; regenerates the sample
  std::size_t common_centralizer_dim;
  bool solvable;                     // subalgebra generated by (a, b)
};

struct ObstructionReport {
  Family family;
  std::size_t n;
  VectorRat target_coords;
  std::size_t samples_requested = 0;
  std::size_t samples_accepted = 0;
  std::uint64_t draws_total = 0;
  std::uint64_t skipped = 0;  // inconsistent draws, not counted as accepted
  std::optional<std::size_t> min_common_centralizer_dim;
  std::size_t zero_centralizer_samples = 0;
  std::size_t solvable_failures = 0;
  std::uint64_t seed = 0;
  std::int64_t height = 0;
  std::vector<SampleRecord> samples;

  bool no_samples_accepted() const { return samples_accepted == 0; }
};

namespace detail {

/// One campaign draw, fully determined by (seed, index): random a, then b
/// solving [a, b] = c with free variables zero. Nullopt when c is outside
/// im(ad a).
inline std::optional<SampleRecord> campaign_draw(const LieAlg& L, const Elem& c,
                                                 std::int64_t height, std::uint64_t seed,
                                                 std::uint64_t index) {
  SeededRng rng = SeededRng::substream(seed, index);
  const Elem a = random_elem(L, height, rng);
  auto sol = solve_particular(ad_matrix(a), c.coords());
  if (!sol) return std::nullopt;
  const Elem b(L, *std::move(sol));
  SampleRecord rec;
  rec.draw_index = index;
  rec.common_centralizer_dim = common_centralizer(a, b).dim();
  rec.solvable = is_solvable(generated_subalgebra(L, {a, b}));
  return rec;
}

}  // namespace detail

/// Draws seeded random a until `samples` pairs with [a, b] = c have been
/// accepted (or max_draws is exhausted), recording the common-centralizer
/// dimension and solvability of each accepted pair. Sample index k always
/// draws from substream(seed, k), so splitting the index range across workers
/// reproduces the sequential report exactly.
inline ObstructionReport obstruction_campaign(const LieAlg& L, const Elem& c,
                                              std::size_t samples, std::int64_t height,
                                              std::uint64_t seed, std::size_t workers = 1,
                                              std::uint64_t max_draws = 2'000'000) {
  if (c.is_zero()) throw std::invalid_argument("obstruction_campaign: zero target");
  if (!same_algebra(c.algebra(), L))
    throw std::invalid_argument("obstruction_campaign: target from a different algebra");
  if (samples < 1) throw std::invalid_argument("obstruction_campaign: samples must be >= 1");
  if (workers < 1) workers = 1;

  ObstructionReport rep;
  rep.family = L.family();
  rep.n = L.n();
  rep.target_coords = c.coords();
  rep.samples_requested = samples;
  rep.seed = seed;
  rep.height = height;

  constexpr std::uint64_t kBlock = 256;
  std::uint64_t next = 0;
  while (rep.samples_accepted < samples && next < max_draws) {
    const std::uint64_t block = std::min<std::uint64_t>(kBlock, max_draws - next);
    std::vector<std::optional<SampleRecord>> results(block);
    if (workers == 1) {
      for (std::uint64_t i = 0; i < block; ++i)
        results[i] = detail::campaign_draw(L, c, height, seed, next + i);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = block * w / workers, hi = block * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
          for (std::uint64_t i = lo; i < hi; ++i)
            results[i] = detail::campaign_draw(L, c, height, seed, next + i);
        });
      }
      for (auto& t : pool) t.join();
    }
    // Merge in index order; stop exactly where a sequential run would.
    for (std::uint64_t i = 0; i < block && rep.samples_accepted < samples; ++i) {
      rep.draws_total = next + i + 1;
      if (!results[i]) continue;
      const SampleRecord& rec = *results[i];
      ++rep.samples_accepted;
      rep.samples.push_back(rec);
      if (!rep.min_common_centralizer_dim ||
          rec.common_centralizer_dim < *rep.min_common_centralizer_dim)
        rep.min_common_centralizer_dim = rec.common_centralizer_dim;
      if (rec.common_centralizer_dim == 0) ++rep.zero_centralizer_samples;
      if (!rec.solvable) ++rep.solvable_failures;
    }
    next += block;
  }
  rep.skipped = rep.draws_total - rep.samples_accepted;
  return rep;
}

/// Exactness check shared by every decomposition path: does [x, y] re-expand
/// to z degree by degree?
inline bool reexpands_exactly(const Current& x, const Current& y, const Current& z) {
  return cbracket(x, y) == z;
}

}  // namespace liewidth
