#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace liewidth {

/// Exact rational scalar backed by GMP. Values are always canonical:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit by design: lets 0, 1, -2 appear as scalars
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" (q > 0, optional leading '-'). Nullopt on anything else.
  static std::optional<Rational> parse(std::string_view s) {
    auto all_digits = [](std::string_view t) {
      if (t.empty()) return false;
      return t.find_first_not_of("0123456789") == std::string_view::npos;
    };
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
      if (den.find('/') != std::string_view::npos) return std::nullopt;
    }
    bool neg = false;
    if (!num.empty() && num.front() == '-') {
      neg = true;
      num.remove_prefix(1);
    }
    if (!all_digits(num)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    if (neg) n = -n;
    mpz_class d(1);
    if (!den.empty() || s.find('/') != std::string_view::npos) {
      if (!all_digits(den)) return std::nullopt;
      d = mpz_class(std::string(den), 10);
      if (d == 0) return std::nullopt;
    }
    return Rational(n, d);
  }

  /// Canonical string form: "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return trusted(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  // GMP arithmetic already canonicalizes; this path skips the redundant gcd.
  static Rational trusted(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  mpq_class v_;
};

}  // namespace liewidth
