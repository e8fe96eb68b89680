#include "catalan/exact.hpp"

#include <cctype>
#include <ostream>

namespace catalan {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw DomainError("not a rational literal: '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  return Rational(Integer(strip_plus(num_text)), Integer(strip_plus(den_text)));
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw DomainError("value " + to_string() + " is not an integer");
  return value_.get_num();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

Integer exact_divide(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw DomainError("inexact division " + a.get_str() + " / " + b.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n = " + std::to_string(n));
  return binomial_or_zero(n, k);
}

Integer binomial_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer catalan(long n) {
  if (n < 0) throw DomainError("catalan with negative n = " + std::to_string(n));
  return exact_divide(binomial(2 * n, n), Integer(n + 1));
}

Rational rising_factorial(const Rational& x, long k) {
  if (k < 0) throw DomainError("rising factorial with negative length");
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= x + Rational(i);
  return out;
}

}  // namespace catalan
