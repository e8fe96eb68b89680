#pragma once

#include <string>

#include "catalan/exact.hpp"
#include "catalan/triangles.hpp"

namespace catalan {

template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return T(a * d - b * c);
}

// Permanent of [[a, b], [c, d]].
template <class T>
T per2(const T& a, const T& b, const T& c, const T& d) {
  return T(a * d + b * c);
}

// Determinant transform X(n,k) of the 2x2 ballot block at (n+k, 2k).
Integer x_entry(long n, long k);
// Determinant transform Y(n,k) of the 2x2 ballot block at (n+k+1, 2k+1).
Integer y_entry(long n, long k);
// Product transform Z(row, col). Four cases by (row parity, col parity).
Integer z_entry(long row, long col);
// Permanent transform W(row, col); zero when col exceeds floor(row/2).
Integer w_entry(long row, long col);

enum class DerivedKind { X, Y, Z, W };

std::string to_string(DerivedKind kind);

// Read-only view of one of the derived triangles. Entries are recomputed from
// ballot numbers on each access.
class DerivedTriangle {
 public:
  explicit DerivedTriangle(DerivedKind kind) : kind_(kind) {}

  DerivedKind kind() const { return kind_; }
  Integer entry(long n, long k) const;
  // Cells the published-style tables print (possibly as 0); everything else is blank.
  bool in_support(long n, long k) const;

 private:
  DerivedKind kind_;
};

// Sum over k of entry(n,k), with (-1)^k signs when alternating.
Integer row_sum(const DerivedTriangle& t, long n, bool alternating = false);
Rational row_sum(const Triangle& t, long n, bool alternating = false);

}  // namespace catalan
