#pragma once

#include <utility>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/report.hpp"

namespace catalan {

using WeightPoint = std::pair<Rational, Rational>;

// (0,0), (1,1), (2,2), (1,2), (-1,3), (1/2,1/3): degenerate, unweighted,
// both triangle specializations, a negative weight and a non-integer one.
const std::vector<WeightPoint>& designated_weight_points();

// motzkin_weight(n,k,x,y) against the summed weights of the enumerated paths,
// for 0 <= k <= n <= n_max at each point. One case per (n, k, point).
VerificationReport verify_motzkin_oracle(long n_max, const std::vector<WeightPoint>& points);

// ballot(n,k) against the number of enumerated partial Dyck paths of length
// 2n-k ending at k, for 0 <= k <= n <= n_max.
VerificationReport verify_ballot_oracle(long n_max);

// catalan(n) against the number of enumerated Dyck paths of length 2n.
VerificationReport verify_dyck_oracle(long n_max);

}  // namespace catalan
