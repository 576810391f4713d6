#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace liewidth {

enum class Family { SL, SP, SO };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SP: return "sp";
    case Family::SO: return "so";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view s) {
  if (s == "sl") return Family::SL;
  if (s == "sp") return Family::SP;
  if (s == "so") return Family::SO;
  return std::nullopt;
}

/// A classical simple Lie algebra in its natural matrix representation,
/// with eagerly cached structure data. Immutable after construction.
///
/// Frozen basis orders (coordinates are stable across runs):
///   sl_n : E_pq for p != q in row-major order of (p,q), then
///          H_i = E_ii - E_{i+1,i+1} for i = 1..n-1.                 (dim n^2-1)
///   sp_2n: with Omega = [[0,I],[-I,0]] and blocks [[A,B],[C,-A^T]]:
///          A-part  E_pq - E_{n+q,n+p} for (p,q) row-major over [n]^2,
///          B-part  E_{p,n+q} + E_{q,n+p} for p <= q (single term if p = q),
///          C-part  E_{n+p,q} + E_{n+q,p} for p <= q (single term if p = q).
///                                                                   (dim n(2n+1))
///   so_n : E_pq - E_qp for p < q in row-major order.                (dim n(n-1)/2)
class LieAlg {
public:
  static LieAlg build(Family family, std::size_t n) {
    LieAlg L;
    L.family_ = family;
    L.n_ = n;
    switch (family) {
      case Family::SL: {
        if (n < 2) throw std::invalid_argument("build: sl_n needs n >= 2");
        L.matrix_size_ = n;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            MatrixRat m(n, n);
            m(p, q) = 1;
            L.basis_.push_back(std::move(m));
          }
        for (std::size_t i = 0; i + 1 < n; ++i) {
          MatrixRat m(n, n);
          m(i, i) = 1;
          m(i + 1, i + 1) = -1;
          L.basis_.push_back(std::move(m));
        }
        break;
      }
      case Family::SP: {
        if (n < 1) throw std::invalid_argument("build: sp_2n needs n >= 1");
        const std::size_t s = 2 * n;
        L.matrix_size_ = s;
        MatrixRat omega(s, s);
        for (std::size_t i = 0; i < n; ++i) {
          omega(i, n + i) = 1;
          omega(n + i, i) = -1;
        }
        L.omega_ = omega;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            MatrixRat m(s, s);
            m(p, q) = 1;
            m(n + q, n + p) = -1;
            L.basis_.push_back(std::move(m));
          }
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = p; q < n; ++q) {
            MatrixRat m(s, s);
            m(p, n + q) = 1;
            m(q, n + p) = m(q, n + p) + 1;
            L.basis_.push_back(std::move(m));
          }
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = p; q < n; ++q) {
            MatrixRat m(s, s);
            m(n + p, q) = 1;
            m(n + q, p) = m(n + q, p) + 1;
            L.basis_.push_back(std::move(m));
          }
        break;
      }
      case Family::SO: {
        if (n < 3) throw std::invalid_argument("build: so_n needs n >= 3");
        L.matrix_size_ = n;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = p + 1; q < n; ++q) {
            MatrixRat m(n, n);
            m(p, q) = 1;
            m(q, p) = -1;
            L.basis_.push_back(std::move(m));
          }
        break;
      }
    }
    L.dim_ = L.basis_.size();
    L.build_caches();
    return L;
  }

  Family family() const { return family_; }
  std::size_t n() const { return n_; }
  std::size_t matrix_size() const { return matrix_size_; }
  std::size_t dim() const { return dim_; }
  const std::vector<MatrixRat>& basis() const { return basis_; }
  const MatrixRat& basis(std::size_t i) const { return basis_[i]; }
  const std::optional<MatrixRat>& omega() const { return omega_; }
  const MatrixRat& ad_basis(std::size_t i) const { return ad_basis_[i]; }
  const MatrixRat& killing_gram() const { return killing_gram_; }

  /// "sl3", "sp4", ... (the number is the matrix size).
  std::string name() const {
    return std::string(family_name(family_)) + std::to_string(matrix_size_);
  }

  /// Coordinates of a matrix in the frozen basis, or nullopt when the matrix
  /// lies outside the algebra.
  std::optional<VectorRat> try_coords_of(const MatrixRat& m) const {
    if (m.rows() != matrix_size_ || m.cols() != matrix_size_) return std::nullopt;
    VectorRat c = coords_projection(m);
    if (matrix_of(c) == m) return c;
    return std::nullopt;
  }

  VectorRat coords_of(const MatrixRat& m) const {
    auto c = try_coords_of(m);
    if (!c) throw std::invalid_argument("coords_of: matrix not in " + name());
    return *std::move(c);
  }

  /// Projection onto coordinates without the membership check; only valid for
  /// matrices already known to lie in the algebra (e.g. brackets of members).
  VectorRat coords_projection(const MatrixRat& m) const {
    return extractor_ * m.vectorize();
  }

  MatrixRat matrix_of(const VectorRat& coords) const {
    if (coords.size() != dim_) throw std::invalid_argument("matrix_of: bad coordinate length");
    MatrixRat m(matrix_size_, matrix_size_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (coords[i].is_zero()) continue;
      MatrixRat term = basis_[i];
      term *= coords[i];
      m += term;
    }
    return m;
  }

private:
  LieAlg() = default;

  void build_caches() {
    const std::size_t ms2 = matrix_size_ * matrix_size_;
    // Left inverse of the vectorized basis: rref([B | I]) yields E with
    // E*B = [I; 0], so the top dim rows of E extract coordinates.
    MatrixRat B(ms2, dim_);
    for (std::size_t i = 0; i < dim_; ++i) B.set_col(i, basis_[i].vectorize());
    const RrefResult rr = rref(MatrixRat::hstack(B, MatrixRat::identity(ms2)));
    bool independent = rr.rank >= dim_;
    for (std::size_t k = 0; independent && k < dim_; ++k)
      independent = rr.pivot_cols[k] == k;
    if (!independent) throw std::logic_error("build: basis not linearly independent");
    extractor_ = MatrixRat(dim_, ms2);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < ms2; ++j) extractor_(i, j) = rr.R(i, dim_ + j);

    // Structure constants, cached as the adjoint matrices of basis elements.
    ad_basis_.assign(dim_, MatrixRat(dim_, dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const MatrixRat br = commutator(basis_[i], basis_[j]);
        auto coords = try_coords_of(br);
        if (!coords) throw std::logic_error("build: basis not closed under bracket");
        ad_basis_[i].set_col(j, *coords);
      }

    killing_gram_ = MatrixRat(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        Rational t = 0;
        for (std::size_t k = 0; k < dim_; ++k)
          for (std::size_t l = 0; l < dim_; ++l) {
            const Rational& a = ad_basis_[i](k, l);
            if (a.is_zero()) continue;
            t += a * ad_basis_[j](l, k);
          }
        killing_gram_(i, j) = t;
        killing_gram_(j, i) = std::move(t);
      }
  }

  Family family_ = Family::SL;
  std::size_t n_ = 0, matrix_size_ = 0, dim_ = 0;
  std::vector<MatrixRat> basis_;
  std::optional<MatrixRat> omega_;
  MatrixRat extractor_;
  std::vector<MatrixRat> ad_basis_;
  MatrixRat killing_gram_;
};

/// Structural identity: two LieAlg values built with the same parameters are
/// interchangeable parents.
inline bool same_algebra(const LieAlg& a, const LieAlg& b) {
  return &a == &b || (a.family() == b.family() && a.n() == b.n());
}

/// An element of a LieAlg, stored as a coordinate vector in the frozen basis.
/// The parent algebra must outlive the element.
class Elem {
public:
  Elem(const LieAlg& parent, VectorRat coords) : parent_(&parent), coords_(std::move(coords)) {
    if (coords_.size() != parent.dim())
      throw std::invalid_argument("Elem: coordinate length != dim");
  }

  static Elem zero(const LieAlg& L) { return Elem(L, VectorRat(L.dim())); }
  static Elem basis(const LieAlg& L, std::size_t i) {
    VectorRat c(L.dim());
    c[i] = 1;
    return Elem(L, std::move(c));
  }
  static Elem from_matrix(const LieAlg& L, const MatrixRat& m) {
    return Elem(L, L.coords_of(m));
  }

  const LieAlg& algebra() const { return *parent_; }
  const VectorRat& coords() const { return coords_; }
  MatrixRat matrix() const { return parent_->matrix_of(coords_); }
  bool is_zero() const { return coords_.is_zero(); }

  Elem operator-() const { return Elem(*parent_, -coords_); }
  Elem& operator+=(const Elem& o) {
    check_parent(o);
    coords_ += o.coords_;
    return *this;
  }
  Elem& operator-=(const Elem& o) {
    check_parent(o);
    coords_ -= o.coords_;
    return *this;
  }
  Elem& operator*=(const Rational& s) {
    coords_ *= s;
    return *this;
  }
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Rational& s, Elem x) { return x *= s; }
  friend bool operator==(const Elem& a, const Elem& b) {
    return same_algebra(*a.parent_, *b.parent_) && a.coords_ == b.coords_;
  }

  void check_parent(const Elem& o) const {
    if (!same_algebra(*parent_, *o.parent_))
      throw std::invalid_argument("Elem: parent algebra mismatch");
  }

private:
  const LieAlg* parent_;
  VectorRat coords_;
};

inline Elem bracket(const Elem& x, const Elem& y) {
  x.check_parent(y);
  const MatrixRat br = commutator(x.matrix(), y.matrix());
  return Elem(x.algebra(), x.algebra().coords_projection(br));
}

/// Matrix of ad(x): column j holds the coordinates of [x, basis_j].
inline MatrixRat ad_matrix(const Elem& x) {
  const LieAlg& L = x.algebra();
  MatrixRat m(L.dim(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Rational& c = x.coords()[i];
    if (c.is_zero()) continue;
    MatrixRat term = L.ad_basis(i);
    term *= c;
    m += term;
  }
  return m;
}

/// Killing form via the cached Gram matrix; equals trace(ad x . ad y).
inline Rational killing(const Elem& x, const Elem& y) {
  x.check_parent(y);
  return dot(x.coords(), x.algebra().killing_gram() * y.coords());
}

/// A linear subspace of a LieAlg in canonical form: basis vectors are the
/// nonzero rows of the rref of any spanning set, so equal subspaces compare
/// equal componentwise.
class Subspace {
public:
  static Subspace from_vectors(const LieAlg& L, const std::vector<VectorRat>& vectors) {
    if (vectors.empty()) return Subspace(L, {});
    MatrixRat m(vectors.size(), L.dim());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != L.dim())
        throw std::invalid_argument("Subspace: coordinate length != dim");
      for (std::size_t j = 0; j < L.dim(); ++j) m(i, j) = vectors[i][j];
    }
    const RrefResult rr = rref(std::move(m));
    std::vector<VectorRat> basis;
    basis.reserve(rr.rank);
    for (std::size_t k = 0; k < rr.rank; ++k) basis.push_back(rr.R.row(k));
    return Subspace(L, std::move(basis));
  }

  static Subspace zero(const LieAlg& L) { return Subspace(L, {}); }
  static Subspace whole(const LieAlg& L) {
    std::vector<VectorRat> rows;
    for (std::size_t i = 0; i < L.dim(); ++i) rows.push_back(Elem::basis(L, i).coords());
    return from_vectors(L, rows);
  }

  const LieAlg& algebra() const { return *parent_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<VectorRat>& basis_vectors() const { return basis_; }
  Elem basis_elem(std::size_t k) const { return Elem(*parent_, basis_[k]); }

  /// Membership by reduction against the rref rows.
  bool contains(const VectorRat& v) const {
    if (v.size() != parent_->dim()) return false;
    VectorRat r = v;
    for (const auto& row : basis_) {
      std::size_t p = 0;
      while (p < row.size() && row[p].is_zero()) ++p;  // pivot column
      if (p == row.size()) continue;
      if (r[p].is_zero()) continue;
      const Rational f = r[p];
      for (std::size_t j = p; j < r.size(); ++j) r[j] -= f * row[j];
    }
    return r.is_zero();
  }
  bool contains(const Elem& x) const {
    return same_algebra(*parent_, x.algebra()) && contains(x.coords());
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return same_algebra(*a.parent_, *b.parent_) && a.basis_ == b.basis_;
  }

private:
  Subspace(const LieAlg& L, std::vector<VectorRat> basis)
      : parent_(&L), basis_(std::move(basis)) {}

  const LieAlg* parent_;
  std::vector<VectorRat> basis_;
};

inline Subspace centralizer(const Elem& a) {
  return Subspace::from_vectors(a.algebra(), kernel_basis(ad_matrix(a)));
}

/// C(a) n C(b) as the kernel of the stacked map x -> ([a,x], [b,x]).
inline Subspace common_centralizer(const Elem& a, const Elem& b) {
  a.check_parent(b);
  return Subspace::from_vectors(a.algebra(),
                                kernel_basis(MatrixRat::vstack(ad_matrix(a), ad_matrix(b))));
}

/// rank [ad a | ad b] = dim(im ad a + im ad b); equals dim g exactly when the
/// common centralizer vanishes.
inline std::size_t image_sum_rank(const Elem& a, const Elem& b) {
  a.check_parent(b);
  return rank_of(MatrixRat::hstack(ad_matrix(a), ad_matrix(b)));
}

/// im(ad a) as a subspace (column space).
inline Subspace image_subspace(const Elem& a) {
  const MatrixRat m = ad_matrix(a);
  std::vector<VectorRat> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::from_vectors(a.algebra(), cols);
}

/// Killing-orthogonal complement {v : k(v, w) = 0 for all w in V}.
inline Subspace killing_orthogonal_complement(const Subspace& V) {
  const LieAlg& L = V.algebra();
  if (V.is_zero()) return Subspace::whole(L);
  MatrixRat m(V.dim(), L.dim());
  const MatrixRat& G = L.killing_gram();
  for (std::size_t k = 0; k < V.dim(); ++k) {
    const VectorRat row = G * V.basis_vectors()[k];  // G symmetric
    for (std::size_t j = 0; j < L.dim(); ++j) m(k, j) = row[j];
  }
  return Subspace::from_vectors(L, kernel_basis(m));
}

/// Smallest bracket-closed subspace containing S, by saturation: bracket all
/// basis pairs, adjoin, re-reduce, repeat until the dimension stabilizes.
inline Subspace generated_subalgebra(const LieAlg& L, const std::vector<Elem>& S) {
  std::vector<VectorRat> vecs;
  for (const auto& x : S) {
    if (!same_algebra(x.algebra(), L))
      throw std::invalid_argument("generated_subalgebra: parent mismatch");
    vecs.push_back(x.coords());
  }
  Subspace cur = Subspace::from_vectors(L, vecs);
  for (;;) {
    std::vector<VectorRat> next;
    for (const auto& v : cur.basis_vectors()) next.push_back(v);
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = i + 1; j < cur.dim(); ++j)
        next.push_back(bracket(cur.basis_elem(i), cur.basis_elem(j)).coords());
    Subspace grown = Subspace::from_vectors(L, next);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

/// Span of brackets of basis pairs; for a bracket-closed V this is [V, V].
inline Subspace derived_subalgebra(const Subspace& V) {
  std::vector<VectorRat> vecs;
  for (std::size_t i = 0; i < V.dim(); ++i)
    for (std::size_t j = i + 1; j < V.dim(); ++j)
      vecs.push_back(bracket(V.basis_elem(i), V.basis_elem(j)).coords());
  return Subspace::from_vectors(V.algebra(), vecs);
}

inline bool is_bracket_closed(const Subspace& V) {
  for (std::size_t i = 0; i < V.dim(); ++i)
    for (std::size_t j = i + 1; j < V.dim(); ++j)
      if (!V.contains(bracket(V.basis_elem(i), V.basis_elem(j)))) return false;
  return true;
}

/// True iff the derived series V >= [V,V] >= ... reaches 0. Input must be
/// bracket-closed. Over characteristic zero this is the extension-invariant
/// proxy for simultaneous triangularizability.
inline bool is_solvable(const Subspace& V) {
  if (!is_bracket_closed(V)) throw std::invalid_argument("is_solvable: input not bracket-closed");
  Subspace w = V;
  while (!w.is_zero()) {
    Subspace next = derived_subalgebra(w);
    if (next.dim() == w.dim()) return false;  // stabilized above zero
    w = std::move(next);
  }
  return true;
}

/// Canonical rank-1 representative of the minimal nonzero nilpotent orbit:
/// E_1n for sl_n, (e1 e1^T) Omega for sp_2n.
inline Elem minimal_nilpotent(const LieAlg& L) {
  switch (L.family()) {
    case Family::SL: {
      MatrixRat m(L.matrix_size(), L.matrix_size());
      m(0, L.matrix_size() - 1) = 1;
      return Elem::from_matrix(L, m);
    }
    case Family::SP: {
      MatrixRat m(L.matrix_size(), L.matrix_size());
      const MatrixRat& omega = *L.omega();
      for (std::size_t j = 0; j < L.matrix_size(); ++j) m(0, j) = omega(0, j);
      return Elem::from_matrix(L, m);
    }
    case Family::SO:
      throw std::invalid_argument("minimal_nilpotent: unsupported family so");
  }
  throw std::invalid_argument("minimal_nilpotent: unknown family");
}

/// Element with integer coordinates drawn uniformly from [-height, height].
inline Elem random_elem(const LieAlg& L, std::int64_t height, SeededRng& rng) {
  if (height < 1) throw std::invalid_argument("random_elem: height must be >= 1");
  VectorRat c(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    c[i] = Rational(static_cast<long>(rng.uniform_int(-height, height)));
  return Elem(L, std::move(c));
}

}  // namespace liewidth
