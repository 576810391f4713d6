#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace liewidth {

/// Fixed-length vector of rationals. Used both for column vectors and, by
/// convention at the call site, for covectors in row position.
class VectorRat {
public:
  VectorRat() = default;
  explicit VectorRat(std::size_t n) : e_(n) {}
  VectorRat(std::initializer_list<Rational> xs) : e_(xs) {}

  std::size_t size() const { return e_.size(); }
  Rational& operator[](std::size_t i) { return e_[i]; }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  void push_back(Rational x) { e_.push_back(std::move(x)); }

  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  VectorRat& operator+=(const VectorRat& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  VectorRat& operator-=(const VectorRat& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  VectorRat& operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }
  VectorRat operator-() const {
    VectorRat r(size());
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  friend VectorRat operator+(VectorRat a, const VectorRat& b) { return a += b; }
  friend VectorRat operator-(VectorRat a, const VectorRat& b) { return a -= b; }
  friend VectorRat operator*(const Rational& s, VectorRat v) { return v *= s; }
  friend bool operator==(const VectorRat& a, const VectorRat& b) { return a.e_ == b.e_; }

private:
  void check_size(const VectorRat& o) const {
    if (size() != o.size()) throw std::invalid_argument("VectorRat: length mismatch");
  }
  std::vector<Rational> e_;
};

inline Rational dot(const VectorRat& a, const VectorRat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense row-major matrix of rationals.
class MatrixRat {
public:
  MatrixRat() : rows_(0), cols_(0) {}
  MatrixRat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  MatrixRat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("MatrixRat: ragged rows");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static MatrixRat identity(std::size_t n) {
    MatrixRat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static MatrixRat outer(const VectorRat& col, const VectorRat& row) {
    MatrixRat m(col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
      for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
    return m;
  }
  static MatrixRat hstack(const MatrixRat& a, const MatrixRat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    MatrixRat m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
  }
  static MatrixRat vstack(const MatrixRat& a, const MatrixRat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    MatrixRat m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  VectorRat row(std::size_t i) const {
    VectorRat v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  VectorRat col(std::size_t j) const {
    VectorRat v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const VectorRat& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Row-major flattening (rows × cols entries).
  VectorRat vectorize() const {
    VectorRat v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i];
    return v;
  }

  MatrixRat transpose() const {
    MatrixRat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    Rational s = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  MatrixRat& operator+=(const MatrixRat& o) {
    check_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  MatrixRat& operator-=(const MatrixRat& o) {
    check_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  MatrixRat& operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }
  MatrixRat operator-() const {
    MatrixRat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  friend MatrixRat operator+(MatrixRat a, const MatrixRat& b) { return a += b; }
  friend MatrixRat operator-(MatrixRat a, const MatrixRat& b) { return a -= b; }
  friend MatrixRat operator*(const Rational& s, MatrixRat m) { return m *= s; }

  friend MatrixRat operator*(const MatrixRat& a, const MatrixRat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    MatrixRat m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend VectorRat operator*(const MatrixRat& a, const VectorRat& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    VectorRat r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(i, j).is_zero()) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const MatrixRat& a, const MatrixRat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  void check_shape(const MatrixRat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("MatrixRat: shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// Commutator ab - ba.
inline MatrixRat commutator(const MatrixRat& a, const MatrixRat& b) {
  return a * b - b * a;
}

}  // namespace liewidth
