#pragma once

#include <optional>
#include <vector>

#include "catalan/exact.hpp"

namespace catalan {

// Power series truncated at t^order. Coefficients beyond the order are
// unknown, so reading them throws instead of returning zero.
class PowerSeries {
 public:
  explicit PowerSeries(long order);
  PowerSeries(std::vector<Rational> coefficients, long order);

  // Coefficients listed from t^0 upward; order = size - 1.
  static PowerSeries from(std::vector<Rational> coefficients);

  long order() const { return order_; }
  const Rational& operator[](long i) const;
  Rational& operator[](long i);

  bool is_zero() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rational> coefficients_;
  long order_;
};

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
// a^k by repeated multiplication; a^0 = 1 at a's order.
PowerSeries power(const PowerSeries& a, long k);
// t^k * a; the order grows by k.
PowerSeries shift(const PowerSeries& a, long k);

// C(t) through t^order, built from C = 1 + t C^2.
PowerSeries catalan_series(long order);

enum class RiordanTriangle { A, B, C };

// Checks [t^n] d(t) h(t)^k == entry(n, k) for 0 <= n <= order, where
// A = (C, tC^2), B = (C^2, tC^2), C = (C, tC).
bool riordan_column_check(RiordanTriangle which, long k, long order);

struct RiordanMismatch {
  long n = 0;
  Rational series;  // [t^n] d(t) h(t)^k
  Rational entry;
};

// First row where the check above fails, if any.
std::optional<RiordanMismatch> riordan_column_mismatch(RiordanTriangle which, long k, long order);

}  // namespace catalan
