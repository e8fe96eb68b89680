#pragma once

#include <memory>
#include <string>

#include "catalan/exact.hpp"

namespace catalan {

// Ballot number C(n,k) = (k+1)/(n+1) * binom(2n-k, n); zero outside 0 <= k <= n.
Integer ballot(long n, long k);

// The other printed closed form (k+1)/(2n-k+1) * binom(2n-k+1, n-k). Kept
// separately so the two can be cross-checked.
Integer ballot_alt(long n, long k);

// Shapiro's Catalan triangle B(n,k) = (k+1)/(n+1) * binom(2n+2, n-k).
Integer shapiro(long n, long k);

// Admissible triangle A(n,k) = (2k+1)/(2n+1) * binom(2n+1, n-k).
Integer admissible(long n, long k);

// Total weight M(n,k)(x,y) of the weighted partial Motzkin paths ending at
// (n,k): horizontal steps weigh x on the axis and y above it. Computed by the
// row recurrence, O(n^2). Negative n is a DomainError.
Rational motzkin_weight(long n, long k, const Rational& x, const Rational& y);

// M(n,k)(0,0) = (k+1)/(n+1) * binom(n+1, (n-k)/2) when n-k is even, else 0.
Integer motzkin_zero_closed_form(long n, long k);

enum class TriangleKind { BallotC, ShapiroB, AdmissibleA, MotzkinM };

std::string to_string(TriangleKind kind);

// Lower-triangular table of exact values, filled row by row on demand.
//
// Copies share the cache. Lookups are safe from several threads; a row is
// computed once under an exclusive lock and never modified afterwards, so
// references returned by entry() stay valid for the lifetime of the last
// copy.
class Triangle {
 public:
  static Triangle ballot();
  static Triangle shapiro();
  static Triangle admissible();
  static Triangle motzkin(const Rational& x, const Rational& y);

  TriangleKind kind() const { return kind_; }
  // Only meaningful for MotzkinM.
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  // Entry (n,k); zero for k < 0, k > n or n < 0.
  const Rational& entry(long n, long k) const;

  std::size_t cached_rows() const;

 private:
  struct Cache;

  Triangle(TriangleKind kind, Rational x, Rational y);

  TriangleKind kind_;
  Rational x_;
  Rational y_;
  std::shared_ptr<Cache> cache_;
};

// Process-wide Motzkin triangles keyed by (x, y), so identities evaluated at
// the same weight point share one table. Thread-safe.
const Triangle& shared_motzkin(const Rational& x, const Rational& y);

}  // namespace catalan
