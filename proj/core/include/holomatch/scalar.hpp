#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "holomatch/errors.hpp"

namespace holomatch {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values that fit in 64-bit numerator/denominator are kept inline; anything
/// larger is promoted to a shared, immutable GMP rational. The representation
/// is canonical: a value is stored as GMP only when it does not fit inline, so
/// structural comparison is value comparison.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] std::string str() const;

  /// Parses `int` or `int/int`; throws ParseError.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational canonical(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact element a + b·i + c·√2 + d·i·√2 of the field ℚ(i, √2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : a_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar i() { return {0, 1, 0, 0}; }
  static Scalar sqrt2() { return {0, 0, 1, 0}; }
  static Scalar i_sqrt2() { return {0, 0, 0, 1}; }

  [[nodiscard]] const Rational& re() const { return a_; }
  [[nodiscard]] const Rational& im() const { return b_; }
  [[nodiscard]] const Rational& r2() const { return c_; }
  [[nodiscard]] const Rational& ir2() const { return d_; }

  [[nodiscard]] bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  [[nodiscard]] bool is_one() const {
    return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  /// True when the value lies in ℚ(i), i.e. carries no √2 part.
  [[nodiscard]] bool is_gaussian_rational() const { return c_.is_zero() && d_.is_zero(); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  [[nodiscard]] Scalar inverse() const;
  /// Complex conjugate (i ↦ −i, √2 fixed).
  [[nodiscard]] Scalar conj() const { return {a_, -b_, c_, -d_}; }

  [[nodiscard]] std::string str() const;
  /// Parses the literal grammar `R`, `R i`, `R r2`, `R ir2` joined by +/−.
  static Scalar parse(std::string_view text);

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  friend Scalar operator-(const Scalar& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

 private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace holomatch
