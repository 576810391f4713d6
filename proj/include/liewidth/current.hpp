#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lie_algebra.hpp"
#include "rng.hpp"

namespace liewidth {

/// An element of g (x) k[t] truncated at order N: degrees 0..N-1 are stored.
/// The same value serves k[t]/(t^N) (truncation is the semantics) and bounded-
/// degree polynomials over k[t] (no truncation occurs when degrees stay below N).
class Current {
public:
  Current(const LieAlg& parent, std::size_t order)
      : parent_(&parent), coeffs_(order, Elem::zero(parent)) {
    if (order < 1) throw std::invalid_argument("Current: order must be >= 1");
  }
  Current(const LieAlg& parent, std::size_t order, std::vector<Elem> coeffs)
      : parent_(&parent), coeffs_(std::move(coeffs)) {
    if (order < 1) throw std::invalid_argument("Current: order must be >= 1");
    if (coeffs_.size() != order) throw std::invalid_argument("Current: coefficient count != order");
    for (const auto& c : coeffs_)
      if (!same_algebra(c.algebra(), parent))
        throw std::invalid_argument("Current: coefficient parent mismatch");
  }

  /// x (x) 1 padded with zeros up to the given order.
  static Current constant(const Elem& x, std::size_t order) {
    Current c(x.algebra(), order);
    c.coeffs_[0] = x;
    return c;
  }

  const LieAlg& algebra() const { return *parent_; }
  std::size_t order() const { return coeffs_.size(); }
  const Elem& coeff(std::size_t k) const { return coeffs_.at(k); }
  void set_coeff(std::size_t k, Elem x) {
    if (!same_algebra(x.algebra(), *parent_))
      throw std::invalid_argument("set_coeff: parent mismatch");
    coeffs_.at(k) = std::move(x);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  Current operator-() const {
    Current r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Current& operator+=(const Current& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < order(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Current& operator-=(const Current& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < order(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend Current operator+(Current a, const Current& b) { return a += b; }
  friend Current operator-(Current a, const Current& b) { return a -= b; }
  friend bool operator==(const Current& a, const Current& b) {
    return same_algebra(*a.parent_, *b.parent_) && a.coeffs_ == b.coeffs_;
  }

  void check_compatible(const Current& o) const {
    if (!same_algebra(*parent_, *o.parent_))
      throw std::invalid_argument("Current: parent algebra mismatch");
    if (order() != o.order()) throw std::invalid_argument("Current: order mismatch");
  }

private:
  const LieAlg* parent_;
  std::vector<Elem> coeffs_;
};

/// Degree-convolved bracket truncated at the common order:
/// coefficient k of [X, Y] is sum over i+j=k of [X_i, Y_j].
inline Current cbracket(const Current& x, const Current& y) {
  x.check_compatible(y);
  Current r(x.algebra(), x.order());
  for (std::size_t i = 0; i < x.order(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; i + j < y.order(); ++j) {
      if (y.coeff(j).is_zero()) continue;
      r.set_coeff(i + j, r.coeff(i + j) + bracket(x.coeff(i), y.coeff(j)));
    }
  }
  return r;
}

/// Smallest degree with a nonzero coefficient; nullopt for the zero current.
inline std::optional<std::size_t> lowest_degree(const Current& x) {
  for (std::size_t k = 0; k < x.order(); ++k)
    if (!x.coeff(k).is_zero()) return k;
  return std::nullopt;
}

/// Degrees 0..m-1 of x as an order-m current.
inline Current truncated(const Current& x, std::size_t order) {
  Current r(x.algebra(), order);
  for (std::size_t k = 0; k < order && k < x.order(); ++k) r.set_coeff(k, x.coeff(k));
  return r;
}

/// t^shift * x at the given order; degrees falling at or beyond the order are cut.
inline Current shifted(const Current& x, std::size_t shift, std::size_t order) {
  Current r(x.algebra(), order);
  for (std::size_t k = 0; k < x.order() && k + shift < order; ++k)
    r.set_coeff(k + shift, x.coeff(k));
  return r;
}

/// Degrees shift.. of x, moved down to degree 0 (inverse of shifted on its image).
inline Current shifted_down(const Current& x, std::size_t shift) {
  if (shift >= x.order()) throw std::invalid_argument("shifted_down: shift >= order");
  Current r(x.algebra(), x.order() - shift);
  for (std::size_t k = shift; k < x.order(); ++k) r.set_coeff(k - shift, x.coeff(k));
  return r;
}

/// Coefficients with integer coordinates drawn uniformly from [-height, height],
/// degree by degree from a single seeded stream.
inline Current random_current(const LieAlg& L, std::size_t order, std::int64_t height,
                              std::uint64_t seed) {
  if (height < 1) throw std::invalid_argument("random_current: height must be >= 1");
  SeededRng rng(seed);
  Current r(L, order);
  for (std::size_t k = 0; k < order; ++k) r.set_coeff(k, random_elem(L, height, rng));
  return r;
}

}  // namespace liewidth
