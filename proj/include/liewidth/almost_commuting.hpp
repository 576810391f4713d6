#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace liewidth {

enum class ACFlavor { A, C };

inline std::string_view flavor_name(ACFlavor f) { return f == ACFlavor::A ? "A" : "C"; }

/// (e (x) e) Omega viewed inside sp_2n: the rank-one matrix i i^T Omega.
/// Antisymmetry of Omega makes it satisfy M^T Omega + Omega M = 0 identically.
inline Elem sp_square(const LieAlg& sp, const VectorRat& i) {
  if (sp.family() != Family::SP) throw std::invalid_argument("sp_square: algebra must be sp");
  if (i.size() != sp.matrix_size()) throw std::invalid_argument("sp_square: vector length != 2n");
  const MatrixRat m = MatrixRat::outer(i, i) * *sp.omega();
  return Elem::from_matrix(sp, m);
}

/// An almost-commuting tuple: (x, y, i, j) with [x,y] + ij = 0 for type A,
/// (x, y, i) with [x,y] + i^2 = 0 for type C. Construction validates shapes
/// (x, y in the algebra, vector lengths); the defining identity itself is
/// checked by ac_member, so non-member tuples can be represented and diagnosed.
struct ACTuple {
  ACFlavor flavor;
  Elem x, y;
  VectorRat i;
  std::optional<VectorRat> j;  // present iff flavor A (a covector, row position)

  static ACTuple type_a(Elem x, Elem y, VectorRat i, VectorRat j) {
    const LieAlg& L = x.algebra();
    if (L.family() != Family::SL) throw std::invalid_argument("ACTuple: type A needs sl_n");
    x.check_parent(y);
    if (i.size() != L.matrix_size() || j.size() != L.matrix_size())
      throw std::invalid_argument("ACTuple: i/j length != n");
    return ACTuple{ACFlavor::A, std::move(x), std::move(y), std::move(i), std::move(j)};
  }

  static ACTuple type_c(Elem x, Elem y, VectorRat i) {
    const LieAlg& L = x.algebra();
    if (L.family() != Family::SP) throw std::invalid_argument("ACTuple: type C needs sp_2n");
    x.check_parent(y);
    if (i.size() != L.matrix_size())
      throw std::invalid_argument("ACTuple: i length != 2n");
    return ACTuple{ACFlavor::C, std::move(x), std::move(y), std::move(i), std::nullopt};
  }

  const LieAlg& algebra() const { return x.algebra(); }
};

struct MembershipCheck {
  bool member;
  MatrixRat residual;  // [x,y] + ij  resp.  [x,y] + i^2
};

inline MembershipCheck ac_member(const ACTuple& t) {
  MatrixRat residual = commutator(t.x.matrix(), t.y.matrix());
  if (t.flavor == ACFlavor::A) {
    residual += MatrixRat::outer(t.i, *t.j);
  } else {
    residual += sp_square(t.algebra(), t.i).matrix();
  }
  return {residual.is_zero(), std::move(residual)};
}

/// g . (x,y,i,j) = (g x g^-1, g y g^-1, g i, j g^-1); type C drops j and
/// requires g symplectic (g^T Omega g = Omega). Membership is preserved:
/// g[x,y]g^-1 + (gi)(jg^-1) = g([x,y] + ij)g^-1.
inline ACTuple group_act(const MatrixRat& g, const ACTuple& t) {
  const LieAlg& L = t.algebra();
  const std::size_t s = L.matrix_size();
  if (g.rows() != s || g.cols() != s) throw std::invalid_argument("group_act: size mismatch");
  if (t.flavor == ACFlavor::C) {
    if (!(g.transpose() * *L.omega() * g == *L.omega()))
      throw std::invalid_argument("group_act: g is not symplectic");
  }
  MatrixRat ginv;
  try {
    ginv = inverse(g);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("group_act: singular g");
  }
  Elem x = Elem::from_matrix(L, g * t.x.matrix() * ginv);
  Elem y = Elem::from_matrix(L, g * t.y.matrix() * ginv);
  VectorRat i = g * t.i;
  if (t.flavor == ACFlavor::A) {
    VectorRat j = ginv.transpose() * *t.j;  // row covector: j g^-1
    return ACTuple{ACFlavor::A, std::move(x), std::move(y), std::move(i), std::move(j)};
  }
  return ACTuple{ACFlavor::C, std::move(x), std::move(y), std::move(i), std::nullopt};
}

/// Existence of a common Borel subalgebra, tested through the extension-
/// invariant criterion: the subalgebra generated by a and b is solvable.
inline bool sim_triangularizable(const Elem& a, const Elem& b) {
  a.check_parent(b);
  return is_solvable(generated_subalgebra(a.algebra(), {a, b}));
}

struct DivergentEntry {
  std::string component;            // "x", "y", "i" or "j"
  std::size_t row = 0;              // vector index for i/j
  std::optional<std::size_t> col;   // present for matrix components
  std::int64_t exponent = 0;
};

struct TorusLimit {
  bool converges = false;
  std::optional<ACTuple> limit;
  std::vector<DivergentEntry> divergent_positions;
};

/// Conjugation/scaling by the one-parameter torus diag(t^{n-1}, t^{n-3}, ...,
/// t^{-n+1}) as exponent bookkeeping: entry (p,q) of x,y scales by t^{2(q-p)},
/// i_p by t^{n+1-2p}, j_q by t^{2q-n-1} (1-based p,q). If no nonzero entry has
/// a negative exponent the t->0 limit exists: positive-exponent entries vanish,
/// zero-exponent entries (the diagonals of x and y, and for odd n the middle
/// slot of i or j) survive. Divergent positions are reported otherwise.
inline TorusLimit torus_limit(const ACTuple& t) {
  const LieAlg& L = t.algebra();
  const std::size_t n = L.matrix_size();
  const MatrixRat mx = t.x.matrix(), my = t.y.matrix();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!mx(r, c).is_zero() || !my(r, c).is_zero())
        throw std::invalid_argument("torus_limit: x and y must be upper triangular");

  TorusLimit out;
  auto matrix_exponent = [](std::size_t r, std::size_t c) {
    return 2 * (static_cast<std::int64_t>(c) - static_cast<std::int64_t>(r));
  };
  auto i_exponent = [n](std::size_t r) {
    return static_cast<std::int64_t>(n) - 1 - 2 * static_cast<std::int64_t>(r);
  };
  auto j_exponent = [n](std::size_t c) {
    return 2 * static_cast<std::int64_t>(c) + 1 - static_cast<std::int64_t>(n);
  };

  auto scan_matrix = [&](const MatrixRat& m, const char* name) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c)
        if (!m(r, c).is_zero() && matrix_exponent(r, c) < 0)
          out.divergent_positions.push_back({name, r, c, matrix_exponent(r, c)});
  };
  scan_matrix(mx, "x");  // vacuous for upper triangular input; kept for symmetry
  scan_matrix(my, "y");
  for (std::size_t r = 0; r < n; ++r)
    if (!t.i[r].is_zero() && i_exponent(r) < 0)
      out.divergent_positions.push_back({"i", r, std::nullopt, i_exponent(r)});
  if (t.flavor == ACFlavor::A)
    for (std::size_t c = 0; c < n; ++c)
      if (!(*t.j)[c].is_zero() && j_exponent(c) < 0)
        out.divergent_positions.push_back({"j", c, std::nullopt, j_exponent(c)});

  out.converges = out.divergent_positions.empty();
  if (!out.converges) return out;

  auto keep_zero_exponent = [](const MatrixRat& m, auto exponent) {
    MatrixRat kept(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero() && exponent(r, c) == 0) kept(r, c) = m(r, c);
    return kept;
  };
  Elem lx = Elem::from_matrix(L, keep_zero_exponent(mx, matrix_exponent));
  Elem ly = Elem::from_matrix(L, keep_zero_exponent(my, matrix_exponent));
  VectorRat li(n);
  for (std::size_t r = 0; r < n; ++r)
    if (i_exponent(r) == 0) li[r] = t.i[r];
  if (t.flavor == ACFlavor::A) {
    VectorRat lj(n);
    for (std::size_t c = 0; c < n; ++c)
      if (j_exponent(c) == 0) lj[c] = (*t.j)[c];
    out.limit = ACTuple{ACFlavor::A, std::move(lx), std::move(ly), std::move(li), std::move(lj)};
  } else {
    out.limit = ACTuple{ACFlavor::C, std::move(lx), std::move(ly), std::move(li), std::nullopt};
  }
  return out;
}

/// Product of `factors` random elementary unipotents I + c E_pq (p != q); a
/// determinant-one group element for the type A action.
inline MatrixRat random_unipotent(std::size_t size, std::size_t factors, std::int64_t height,
                                  SeededRng& rng) {
  MatrixRat g = MatrixRat::identity(size);
  for (std::size_t k = 0; k < factors; ++k) {
    const auto p = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(size) - 1));
    auto q = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(size) - 2));
    if (q >= p) ++q;
    MatrixRat el = MatrixRat::identity(size);
    el(p, q) = Rational(static_cast<long>(rng.uniform_int(-height, height)));
    g = g * el;
  }
  return g;
}

/// Product of random symplectic transvections I + c v v^T Omega; exactly
/// symplectic for every rational c and v since v^T Omega v = 0.
inline MatrixRat random_symplectic(const LieAlg& sp, std::size_t factors, std::int64_t height,
                                   SeededRng& rng) {
  if (sp.family() != Family::SP) throw std::invalid_argument("random_symplectic: needs sp");
  const std::size_t size = sp.matrix_size();
  MatrixRat g = MatrixRat::identity(size);
  for (std::size_t k = 0; k < factors; ++k) {
    VectorRat v(size);
    for (std::size_t r = 0; r < size; ++r)
      v[r] = Rational(static_cast<long>(rng.uniform_int(-height, height)));
    const Rational c(static_cast<long>(rng.uniform_int(-height, height)));
    MatrixRat tv = MatrixRat::outer(v, (*sp.omega()).transpose() * v);  // v (v^T Omega)
    tv *= c;
    g = g * (MatrixRat::identity(size) + tv);
  }
  return g;
}

}  // namespace liewidth
