#include "catalan/transforms.hpp"

namespace catalan {

Integer x_entry(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return det2(ballot(n + k, 2 * k), ballot(n + k, 2 * k + 1),
              ballot(n + k + 1, 2 * k), ballot(n + k + 1, 2 * k + 1));
}

Integer y_entry(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return det2(ballot(n + k + 1, 2 * k + 1), ballot(n + k + 1, 2 * k + 2),
              ballot(n + k + 2, 2 * k + 1), ballot(n + k + 2, 2 * k + 2));
}

Integer z_entry(long row, long col) {
  if (row < 0 || col < 0 || col > row) return 0;
  // Even rows are 2n, odd rows are 2n-1; both recover n as ceil(row/2).
  const long n = (row + 1) / 2;
  const long k = col / 2;
  const bool even_row = row % 2 == 0;
  const bool even_col = col % 2 == 0;
  if (even_row) {
    return even_col ? Integer(ballot(n + k, 2 * k) * ballot(n + k + 1, 2 * k + 1))
                    : Integer(ballot(n + k + 1, 2 * k + 1) * ballot(n + k + 1, 2 * k + 2));
  }
  return even_col ? Integer(ballot(n + k, 2 * k) * ballot(n + k, 2 * k + 1))
                  : Integer(ballot(n + k, 2 * k + 1) * ballot(n + k + 1, 2 * k + 2));
}

Integer w_entry(long row, long col) {
  if (row < 0 || col < 0 || col > row / 2) return 0;
  const long n = row / 2;
  const long k = col;
  // Even rows pair ballot rows (n+k, n+k+1); odd rows pair (n+k, n+k+2).
  const long lower = row % 2 == 0 ? n + k + 1 : n + k + 2;
  return per2(ballot(n + k, 2 * k), ballot(n + k, 2 * k + 1),
              ballot(lower, 2 * k), ballot(lower, 2 * k + 1));
}

std::string to_string(DerivedKind kind) {
  switch (kind) {
    case DerivedKind::X: return "X";
    case DerivedKind::Y: return "Y";
    case DerivedKind::Z: return "Z";
    case DerivedKind::W: return "W";
  }
  return "?";
}

Integer DerivedTriangle::entry(long n, long k) const {
  switch (kind_) {
    case DerivedKind::X: return x_entry(n, k);
    case DerivedKind::Y: return y_entry(n, k);
    case DerivedKind::Z: return z_entry(n, k);
    case DerivedKind::W: return w_entry(n, k);
  }
  return 0;
}

bool DerivedTriangle::in_support(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return false;
  return kind_ != DerivedKind::W || k <= n / 2;
}

Integer row_sum(const DerivedTriangle& t, long n, bool alternating) {
  Integer sum = 0;
  for (long k = 0; k <= n; ++k) {
    if (alternating && k % 2 == 1) {
      sum -= t.entry(n, k);
    } else {
      sum += t.entry(n, k);
    }
  }
  return sum;
}

Rational row_sum(const Triangle& t, long n, bool alternating) {
  Rational sum;
  for (long k = 0; k <= n; ++k) {
    if (alternating && k % 2 == 1) {
      sum -= t.entry(n, k);
    } else {
      sum += t.entry(n, k);
    }
  }
  return sum;
}

}  // namespace catalan
