#include "catalan/oracle.hpp"

#include <map>

#include "catalan/paths.hpp"
#include "catalan/triangles.hpp"

namespace catalan {

const std::vector<WeightPoint>& designated_weight_points() {
  static const std::vector<WeightPoint> points = {
      {Rational(0), Rational(0)}, {Rational(1), Rational(1)},  {Rational(2), Rational(2)},
      {Rational(1), Rational(2)}, {Rational(-1), Rational(3)}, {Rational(1, 2), Rational(1, 3)},
  };
  return points;
}

namespace {

VerificationReport fail_at(VerificationReport report, std::vector<std::pair<std::string, long>> params,
                           Rational lhs, Rational rhs, std::string detail = {}) {
  report.pass = false;
  report.counterexample = Counterexample{std::move(params), std::move(lhs), std::move(rhs), std::move(detail)};
  return report;
}

}  // namespace

VerificationReport verify_motzkin_oracle(long n_max, const std::vector<WeightPoint>& points) {
  VerificationReport report;
  report.id = "oracle_motzkin";
  report.box = {{"n", 0, n_max}, {"k", 0, n_max}, {"point", 0, static_cast<long>(points.size()) - 1}};
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      // The weight of a path only depends on how many of its h steps lie on
      // and above the axis, so group the enumeration by that profile.
      std::map<std::pair<std::size_t, std::size_t>, long> profiles;
      for_each_motzkin(n, k, [&](const LatticePath& p) { ++profiles[horizontal_profile(p)]; });
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [x, y] = points[i];
        Rational enumerated;
        for (const auto& [profile, count] : profiles) {
          enumerated += Rational(count) * pow(x, profile.first) * pow(y, profile.second);
        }
        const Rational recurrence = motzkin_weight(n, k, x, y);
        ++report.cases;
        if (enumerated != recurrence) {
          return fail_at(std::move(report), {{"n", n}, {"k", k}, {"point", static_cast<long>(i)}}, enumerated,
                         recurrence, "x=" + x.to_string() + " y=" + y.to_string());
        }
      }
    }
  }
  return report;
}

VerificationReport verify_ballot_oracle(long n_max) {
  VerificationReport report;
  report.id = "oracle_ballot";
  report.box = {{"n", 0, n_max}, {"k", 0, n_max}};
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      long count = 0;
      for_each_partial_dyck(n, k, [&](const LatticePath&) { ++count; });
      ++report.cases;
      if (Integer(count) != ballot(n, k)) {
        return fail_at(std::move(report), {{"n", n}, {"k", k}}, Rational(count), Rational(ballot(n, k)));
      }
    }
  }
  return report;
}

VerificationReport verify_dyck_oracle(long n_max) {
  VerificationReport report;
  report.id = "oracle_dyck";
  report.box = {{"n", 0, n_max}};
  for (long n = 0; n <= n_max; ++n) {
    long count = 0;
    for_each_partial_dyck(n, 0, [&](const LatticePath&) { ++count; });
    ++report.cases;
    if (Integer(count) != catalan(n)) {
      return fail_at(std::move(report), {{"n", n}}, Rational(count), Rational(catalan(n)));
    }
  }
  return report;
}

}  // namespace catalan
