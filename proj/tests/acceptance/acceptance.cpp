#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/bijections.hpp"
#include "catalan/identities.hpp"
#include "catalan/oracle.hpp"
#include "catalan/series.hpp"
#include "catalan/table_render.hpp"
#include "catalan/triangles.hpp"

namespace {

using namespace catalan;
using Clock = std::chrono::steady_clock;

constexpr double kTablesSeconds = 1.0;
constexpr double kIdentitiesSeconds = 60.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kPhiSeconds = 30.0;
constexpr double kDyckSplitSeconds = 10.0;
constexpr double kRiordanSeconds = 5.0;
constexpr std::size_t kMinMutationFailures = 1;

constexpr long kOracleMotzkinMax = 14;
constexpr long kOracleBallotMax = 12;
constexpr long kPhiMax = 3;
constexpr long kRiordanColumns = 12;
constexpr long kRiordanOrder = 20;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // <= 0 means untimed
  std::function<Outcome()> run;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome golden_tables() {
  struct Case {
    TableTriangle triangle;
    const char* letter;
    long rows;
  };
  const Case cases[] = {{TableTriangle::C, "C", 8}, {TableTriangle::B, "B", 7}, {TableTriangle::A, "A", 7},
                        {TableTriangle::X, "X", 6}, {TableTriangle::Y, "Y", 6}, {TableTriangle::Z, "Z", 7},
                        {TableTriangle::W, "W", 9}};
  for (const auto& c : cases) {
    const std::string expected = read_file(std::string(CATALAN_GOLDEN_DIR) + "/table_" + c.letter + ".txt");
    if (expected.empty()) return {false, std::string("missing golden table ") + c.letter};
    if (render_table({c.triangle, c.rows, {}, {}}, OutputFormat::Ascii) != expected) {
      return {false, std::string("table ") + c.letter + " differs from golden"};
    }
  }
  return {true, "7 tables"};
}

Outcome identity_suite() {
  const IdentityRegistry registry;
  std::size_t cases = 0;
  for (const auto& report : verify_all(registry)) {
    if (!report.pass) return {false, report.id + " fails: " + format_reports({report}, OutputFormat::Ascii)};
    cases += report.cases;
  }
  return {true, std::to_string(registry.identities().size()) + " identities, " + std::to_string(cases) + " cases"};
}

Outcome oracles() {
  const auto& points = designated_weight_points();
  if (points.size() != 6) return {false, "expected 6 designated weight points"};
  const VerificationReport motzkin = verify_motzkin_oracle(kOracleMotzkinMax, points);
  const VerificationReport ballot = verify_ballot_oracle(kOracleBallotMax);
  const std::size_t expected_motzkin = 6 * (kOracleMotzkinMax + 1) * (kOracleMotzkinMax + 2) / 2;
  const std::size_t expected_ballot = (kOracleBallotMax + 1) * (kOracleBallotMax + 2) / 2;
  if (!motzkin.pass || motzkin.cases != expected_motzkin) {
    return {false, format_reports({motzkin}, OutputFormat::Ascii)};
  }
  if (!ballot.pass || ballot.cases != expected_ballot) return {false, format_reports({ballot}, OutputFormat::Ascii)};
  return {true, std::to_string(motzkin.cases) + " Motzkin cells, " + std::to_string(ballot.cases) + " ballot cells"};
}

Outcome phi_bijection() {
  const Triangle& unit = shared_motzkin(Rational(1), Rational(1));
  const ScalarHelpers helpers;
  std::size_t boxes = 0;
  for (long m = 0; m <= kPhiMax; ++m) {
    for (long n = 0; n <= m; ++n) {
      for (long r = 0; r <= kPhiMax; ++r) {
        const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
        if (r >= 1) {
          const BijectionCheck check = check_phi(n, m, r);
          if (!check.ok) return {false, where + ": " + check.failure};
        }
        Rational permanent_sum;
        for (long k = 0; k <= m; ++k) {
          permanent_sum += unit.entry(n, k) * unit.entry(m + r, k + 1) + unit.entry(m, k) * unit.entry(n + r, k + 1);
        }
        const Rational target = unit.entry(m + n + r, 1);
        const Rational correction = helpers.h(n, m, r, Rational(1));
        if (permanent_sum != target + correction) return {false, where + ": cardinality identity fails"};
        if (r >= 1) {
          const PhiCensus census = phi_census(n, m, r);
          if (Rational(static_cast<long>(census.b_side + census.a_side)) != permanent_sum ||
              Rational(static_cast<long>(census.targets)) != target ||
              Rational(static_cast<long>(census.excluded)) != correction) {
            return {false, where + ": census disagrees with the triangle values"};
          }
        }
        ++boxes;
      }
    }
  }
  return {true, std::to_string(boxes) + " parameter triples"};
}

Outcome dyck_split_counts() {
  for (long n = 1; n <= 4; ++n) {
    const PivotCounts c = count_dyck_by_pivot(n, n - 1);
    if (c.up != c.down) return {false, "length 4n not bisected at n=" + std::to_string(n)};
  }
  for (long n = 0; n <= 4; ++n) {
    const PivotCounts c = count_dyck_by_pivot(n, n);
    const Integer expected = catalan::catalan(n) * catalan::catalan(n);
    if (Integer(static_cast<long>(c.up)) - Integer(static_cast<long>(c.down)) != expected) {
      return {false, "length 4n+2 difference wrong at n=" + std::to_string(n)};
    }
  }
  for (long n = 0; n <= 3; ++n) {
    const PivotCounts c = count_dyck_by_pivot(n, n + 1);
    const Integer expected = 2 * catalan::catalan(n) * catalan::catalan(n + 1);
    if (Integer(static_cast<long>(c.up)) - Integer(static_cast<long>(c.down)) != expected) {
      return {false, "length 4n+4 difference wrong at n=" + std::to_string(n)};
    }
  }
  return {true, "13 path lengths"};
}

Outcome riordan_columns() {
  for (const auto& [name, which] : {std::pair{"A", RiordanTriangle::A}, std::pair{"B", RiordanTriangle::B},
                                    std::pair{"C", RiordanTriangle::C}}) {
    for (long k = 0; k <= kRiordanColumns; ++k) {
      if (const auto mismatch = riordan_column_mismatch(which, k, kRiordanOrder)) {
        return {false, std::string(name) + " column " + std::to_string(k) + " differs at n=" +
                           std::to_string(mismatch->n)};
      }
    }
  }
  return {true, "3 triangles x 13 columns"};
}

Outcome mutation_sensitivity() {
  struct Mutation {
    const char* helper;
    long HelperOffsets::*field;
  };
  const Mutation mutations[] = {{"lambda", &HelperOffsets::lambda}, {"mu", &HelperOffsets::mu},
                                {"eta", &HelperOffsets::eta},       {"nu", &HelperOffsets::nu},
                                {"G", &HelperOffsets::g},           {"F", &HelperOffsets::f},
                                {"H", &HelperOffsets::h}};
  const Box box = {{"n", 0, 6}, {"m", 0, 6}, {"l", 0, 6}, {"k", 0, 6}};
  std::string detail;
  bool ok = true;
  for (const auto& mutation : mutations) {
    HelperOffsets offsets;
    offsets.*mutation.field = 1;
    std::size_t caught = 0;
    std::string first;
    for (const auto& report : verify_all(IdentityRegistry(offsets), box)) {
      if (!report.pass && report.counterexample) {
        if (caught++ == 0) first = report.id;
      }
    }
    if (!detail.empty()) detail += ", ";
    detail += std::string(mutation.helper) + "+1 -> " + (caught ? first : "nothing");
    if (caught < kMinMutationFailures) ok = false;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden tables", kTablesSeconds, golden_tables},
      {2, "identity suite", kIdentitiesSeconds, identity_suite},
      {3, "oracle equivalence", kOracleSeconds, oracles},
      {4, "phi bijection", kPhiSeconds, phi_bijection},
      {5, "Dyck split counts", kDyckSplitSeconds, dyck_split_counts},
      {6, "Riordan columns", kRiordanSeconds, riordan_columns},
      {7, "mutation sensitivity", 0.0, mutation_sensitivity},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = criterion.limit_seconds <= 0 || seconds < criterion.limit_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " [" << criterion.number << "] " << criterion.name << " (" << seconds << " s";
    if (criterion.limit_seconds > 0) line << " / limit " << criterion.limit_seconds << " s";
    line << "): " << outcome.detail;
    if (!in_time) line << " [over time limit]";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
