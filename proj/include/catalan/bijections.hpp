#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/paths.hpp"

namespace catalan {

// A Dyck path of length 2n+2m+2 cut at its (2n+1)-th step. The pivot always
// ends at an odd level 2k+1.
struct DyckSplit {
  LatticePath source;
  std::size_t pivot_index = 0;  // 0-based, equals 2n
  Step pivot = Step::U;
  long pivot_level = 0;  // 2k+1
  long k = 0;
  LatticePath head;           // first 2n steps
  LatticePath tail_reversed;  // reverse of the steps after the pivot
};

// Throws std::invalid_argument unless p is a Dyck path of length at least 2n+2.
DyckSplit dyck_split(const LatticePath& p, long n);

// Rebuilds the source path from its parts.
LatticePath join(const DyckSplit& split);

struct PivotCounts {
  std::size_t up = 0;
  std::size_t down = 0;
};

// Classifies all Dyck paths of length 2n+2m+2 by their (2n+1)-th step.
PivotCounts count_dyck_by_pivot(long n, long m);

enum class PhiSide { B, AMinusC };

// A pair of paths from one side of the domain of phi:
//   B side:        P of length n+r ending at k+1, Q of length m ending at k;
//   A-minus-C side: P of length n ending at k, Q of length m+r ending at k+1
//                  whose last crossing up step has at least r steps before it.
struct PhiInput {
  PhiSide side = PhiSide::B;
  LatticePath p;
  LatticePath q;

  friend bool operator==(const PhiInput&, const PhiInput&) = default;
};

std::string to_string(const PhiInput& input);

// Whether `input` lies in the domain of phi for (n, m, r).
bool is_phi_member(const PhiInput& input, long n, long m, long r);

// (P, Q) with P of length n ending at k, Q of length m+r ending at k+1 and
// the last crossing up step of Q preceded by i steps, k <= i <= r-1.
bool in_excluded_family(const LatticePath& p, const LatticePath& q, long n, long m, long r, long k);

// Maps a domain pair to a path of length n+m+r ending at level 1.
// Throws std::invalid_argument for non-members. Requires r >= 0.
LatticePath phi_forward(const PhiInput& input, long n, long m, long r);

// Inverse of phi_forward. Throws std::invalid_argument unless target is a
// valid path of length n+m+r ending at level 1.
PhiInput phi_backward(const LatticePath& target, long n, long m, long r);

// All domain pairs of phi for (n, m, r), B side first.
std::vector<PhiInput> enumerate_phi_domain(long n, long m, long r);

// Weight at (y, y) of the excluded pairs with index k, by enumeration.
Rational excluded_family_weight(long n, long m, long r, long k, const Rational& y);

struct PhiCensus {
  std::size_t b_side = 0;
  std::size_t a_side = 0;  // all A pairs, excluded ones included
  std::size_t excluded = 0;
  std::size_t targets = 0;
};

PhiCensus phi_census(long n, long m, long r);

struct BijectionCheck {
  bool ok = true;
  std::size_t inputs = 0;
  std::size_t targets = 0;
  std::string failure;  // first problem found, empty when ok
};

// Exhaustive round trip in both directions plus preservation of length and
// horizontal-step count, and the census balance b + a - excluded = targets.
BijectionCheck check_phi(long n, long m, long r);

}  // namespace catalan
