#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace catalan {

// Arbitrary-precision signed integer.
using Integer = mpz_class;

// Thrown for arguments outside an operation's mathematical domain
// (negative binomial row, division by zero, inexact division, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of the arithmetic
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& numerator, const Integer& denominator);

  // Parses "p", "-p" or "p/q". Decimal and exponent notation are rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // Throws DomainError unless the value is an integer.
  Integer to_integer() const;

  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

// a / b, throwing DomainError when b is zero or does not divide a.
Integer exact_divide(const Integer& a, const Integer& b);

// C(n, k); zero when k < 0 or k > n. Negative n is a DomainError.
Integer binomial(long n, long k);

// Like binomial() but also zero for negative n. Used inside sums whose
// printed limits run past the natural range.
Integer binomial_or_zero(long n, long k);

// n-th Catalan number C(2n, n) / (n + 1).
Integer catalan(long n);

// Rising factorial x (x+1) ... (x+k-1); (x)_0 = 1.
Rational rising_factorial(const Rational& x, long k);

}  // namespace catalan
