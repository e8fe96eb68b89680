#include "catalan/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "catalan/triangles.hpp"

namespace catalan {

PowerSeries::PowerSeries(long order) : PowerSeries(std::vector<Rational>(), order) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, long order)
    : coefficients_(std::move(coefficients)), order_(order) {
  if (order < 0) throw DomainError("negative series order");
  coefficients_.resize(static_cast<std::size_t>(order + 1));
}

PowerSeries PowerSeries::from(std::vector<Rational> coefficients) {
  if (coefficients.empty()) throw DomainError("series needs at least one coefficient");
  const long order = static_cast<long>(coefficients.size()) - 1;
  return PowerSeries(std::move(coefficients), order);
}

const Rational& PowerSeries::operator[](long i) const {
  if (i < 0 || i > order_) {
    throw std::out_of_range("coefficient t^" + std::to_string(i) + " beyond order " + std::to_string(order_));
  }
  return coefficients_[static_cast<std::size_t>(i)];
}

Rational& PowerSeries::operator[](long i) {
  return const_cast<Rational&>(static_cast<const PowerSeries&>(*this)[i]);
}

bool PowerSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c.is_zero(); });
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (long i = 0; i <= out.order_; ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (long i = 0; i <= out.order_; ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (long n = 0; n <= out.order_; ++n) {
    Rational c;
    for (long i = 0; i <= n; ++i) {
      if (!a[i].is_zero()) c += a[i] * b[n - i];
    }
    out[n] = std::move(c);
  }
  return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.order_ == b.order_ && a.coefficients_ == b.coefficients_;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries power(const PowerSeries& a, long k) {
  if (k < 0) throw DomainError("negative series power");
  PowerSeries out(a.order());
  out[0] = 1;
  for (long i = 0; i < k; ++i) out = out * a;
  return out;
}

PowerSeries shift(const PowerSeries& a, long k) {
  if (k < 0) throw DomainError("negative series shift");
  PowerSeries out(a.order() + k);
  for (long i = 0; i <= a.order(); ++i) out[i + k] = a[i];
  return out;
}

PowerSeries catalan_series(long order) {
  PowerSeries c(order);
  c[0] = 1;
  for (long n = 0; n < order; ++n) {
    Rational next;
    for (long i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c[n + 1] = std::move(next);
  }
  return c;
}

std::optional<RiordanMismatch> riordan_column_mismatch(RiordanTriangle which, long k, long order) {
  if (k < 0 || k > order) throw DomainError("column index outside 0..order");
  const PowerSeries c = catalan_series(order);
  const PowerSeries c2 = c * c;
  // t*h(t) is stored truncated back to `order`; higher terms are never read.
  const auto truncate = [order](const PowerSeries& s) {
    PowerSeries out(order);
    for (long i = 0; i <= order; ++i) out[i] = s[i];
    return out;
  };
  PowerSeries d(order);
  PowerSeries h(order);
  Triangle triangle = Triangle::ballot();
  switch (which) {
    case RiordanTriangle::A:
      d = c;
      h = truncate(shift(c2, 1));
      triangle = Triangle::admissible();
      break;
    case RiordanTriangle::B:
      d = c2;
      h = truncate(shift(c2, 1));
      triangle = Triangle::shapiro();
      break;
    case RiordanTriangle::C:
      d = c;
      h = truncate(shift(c, 1));
      triangle = Triangle::ballot();
      break;
  }
  const PowerSeries column = d * power(h, k);
  for (long n = 0; n <= order; ++n) {
    if (column[n] != triangle.entry(n, k)) return RiordanMismatch{n, column[n], triangle.entry(n, k)};
  }
  return std::nullopt;
}

bool riordan_column_check(RiordanTriangle which, long k, long order) {
  return !riordan_column_mismatch(which, k, order);
}

}  // namespace catalan
