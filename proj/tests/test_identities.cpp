#include <gtest/gtest.h>

#include <set>

#include "catalan/identities.hpp"
#include "catalan/triangles.hpp"

namespace catalan {
namespace {

const IdentityRegistry& registry() {
  static const IdentityRegistry r;
  return r;
}

Rational evaluate(const Evaluator& side, const IdentityDescriptor& id, std::vector<long> values) {
  return side(Assignment(id.params, values));
}

Box small_box() { return {{"n", 0, 6}, {"m", 0, 6}, {"l", 0, 6}, {"k", 0, 6}}; }

TEST(Registry, ContainsEveryCatalogueId) {
  std::set<std::string> ids;
  for (const auto& identity : registry().identities()) {
    EXPECT_TRUE(ids.insert(identity.id).second) << "duplicate " << identity.id;
    EXPECT_FALSE(identity.statement.empty()) << identity.id;
  }
  for (const char* id :
       {"row_sum_B", "shapiro_convolution", "eplett", "thm_1_1", "thm_2_1_det_a", "thm_2_1_det_b", "thm_2_1_sum_a",
        "thm_2_1_sum_b", "cor_2_2", "cor_2_3", "cor_2_4_a", "cor_2_4_b", "cor_2_5_a", "cor_2_5_b", "thm_3_1_sum",
        "thm_3_1_alt", "cor_3_2_a", "cor_3_2_b", "cor_3_2_c", "thm_4_1", "thm_4_2_a", "thm_4_2_b", "cor_4_3",
        "cor_4_4", "thm_4_4", "cor_4_5", "relations", "specializations"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_THROW(registry().find("no_such_identity"), UnknownIdentity);
}

TEST(Registry, EveryIdentityPassesOnASmallBox) {
  for (const auto& report : verify_all(registry(), small_box())) {
    EXPECT_TRUE(report.pass) << report.id;
    EXPECT_GT(report.cases, 0u) << report.id;
  }
}

TEST(Verify, ShapiroConvolutionCaseCount) {
  const auto report = verify(registry(), "shapiro_convolution", {{"n", 0, 10}, {"m", 0, 10}});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.cases, 121u);
  const auto& id = registry().find("shapiro_convolution");
  EXPECT_EQ(evaluate(id.lhs, id, {1, 1}), Rational(5));
}

TEST(Verify, SpotValues) {
  const auto& alt = registry().find("thm_3_1_alt");
  EXPECT_EQ(evaluate(alt.lhs, alt, {3, 2}), Rational(0));
  const auto& eplett = registry().find("eplett");
  EXPECT_EQ(evaluate(eplett.lhs, eplett, {6}), Rational(132));
  const auto& relations = registry().find("relations");
  EXPECT_EQ(evaluate(relations.lhs, relations, {3, 0, 4}), Rational(14));
}

TEST(Verify, EmptyBoxIsVacuouslyTrue) {
  const auto report = verify(registry(), "eplett", {{"n", 5, 4}});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.cases, 0u);
}

TEST(Verify, BoxMustStayInsideTheDomain) {
  EXPECT_THROW(verify(registry(), "eplett", {{"n", -1, 3}}), BoxOutsideDomain);
  EXPECT_THROW(verify(registry(), "thm_4_2_b", {{"n", 0, 3}}), BoxOutsideDomain);
  EXPECT_THROW(verify(registry(), "eplett", {{"q", 0, 3}}), std::invalid_argument);
  EXPECT_NO_THROW(verify(registry(), "thm_4_1", {{"r", -5, -1}, {"n", 0, 3}, {"m", 0, 3}}));
}

TEST(Verify, AdmissibilitySkipsAreNotCounted) {
  // l <= m leaves 1 + 2 + 3 of the 9 (m, l) pairs for m, l <= 2.
  const auto report = verify(registry(), "thm_2_1_det_a", {{"n", 0, 0}, {"m", 0, 2}, {"l", 0, 2}});
  EXPECT_EQ(report.cases, 6u);
}

TEST(Verify, DeterministicReports) {
  const auto a = verify_all(registry(), small_box());
  const auto b = verify_all(registry(), small_box());
  EXPECT_EQ(format_reports(a, OutputFormat::Json), format_reports(b, OutputFormat::Json));
}

TEST(Verify, BrokenIdentityReportsFirstCounterexample) {
  IdentityDescriptor broken{"broken", "n = n + [n == 3]", {{"n", 0, kNoBound, 0, 10}}, {},
                            [](const Assignment& a) { return Rational(a["n"]); },
                            [](const Assignment& a) { return Rational(a["n"] + (a["n"] == 3 ? 1 : 0)); }, {}, {}};
  const auto report = verify(broken);
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_EQ(report.counterexample->params, (std::vector<std::pair<std::string, long>>{{"n", 3}}));
  EXPECT_EQ(report.counterexample->lhs, Rational(3));
  EXPECT_EQ(report.counterexample->rhs, Rational(4));
  EXPECT_EQ(report.cases, 4u);
}

TEST(Verify, TruncatedSumMustMatchItsExtension) {
  IdentityDescriptor broken{"truncated", "", {{"n", 0, kNoBound, 0, 3}}, {},
                            [](const Assignment&) { return Rational(1); },
                            [](const Assignment&) { return Rational(1); },
                            [](const Assignment& a) { return Rational(a["n"] == 2 ? 2 : 1); }, {}};
  const auto report = verify(broken);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.counterexample->detail, "sum over an extended range");
}

TEST(Helpers, PiecewiseBranches) {
  const ScalarHelpers h;
  EXPECT_EQ(h.g(1, 1, 1), 1);
  EXPECT_EQ(h.g(3, 2, 0), 0);
  EXPECT_EQ(h.g(2, 1, -1), -(catalan(1) * catalan(2)));
  EXPECT_EQ(h.g(2, 3, 2), catalan(2) * catalan(3) + catalan(3) * catalan(2));
  EXPECT_EQ(h.f(2, 3, 0), 0);
  EXPECT_EQ(h.f(2, 3, 2), catalan(2) * catalan(4) + catalan(3) * catalan(3));
  EXPECT_EQ(h.f(2, 3, -2), -(catalan(1) * catalan(1) + catalan(0) * catalan(2)));
  EXPECT_EQ(h.h(1, 1, 1, Rational(1)), Rational(1));
  EXPECT_EQ(h.h(2, 2, 2, Rational(2)), Rational(140));
  EXPECT_EQ(h.h(2, 2, 0, Rational(2)), Rational(0));
  const Rational y(3);
  const Triangle& m = shared_motzkin(y, y);
  EXPECT_EQ(h.h(3, 2, -2, y), -(m.entry(2, 0) * m.entry(0, 0) + m.entry(1, 0) * m.entry(1, 0)));
}

TEST(Helpers, LambdaMuSpecializations) {
  const ScalarHelpers h;
  EXPECT_EQ(h.lambda(3, 1, 3, 0), 2 * 1 * 7 * 6);
  EXPECT_EQ(h.mu(3, 1, 4, 1), 5 * 8 * 9);
  const auto report = verify(registry(), "lambda_mu_special");
  EXPECT_TRUE(report.pass);
}

TEST(Mutation, EveryHelperOffsetIsCaught) {
  const std::vector<std::pair<const char*, long HelperOffsets::*>> helpers = {
      {"lambda", &HelperOffsets::lambda}, {"mu", &HelperOffsets::mu},   {"lambda_bar", &HelperOffsets::lambda_bar},
      {"mu_bar", &HelperOffsets::mu_bar}, {"eta", &HelperOffsets::eta}, {"nu", &HelperOffsets::nu},
      {"g", &HelperOffsets::g},           {"f", &HelperOffsets::f},     {"h", &HelperOffsets::h}};
  for (const auto& [name, field] : helpers) {
    HelperOffsets offsets;
    offsets.*field = 1;
    const IdentityRegistry mutated(offsets);
    bool caught = false;
    for (const auto& report : verify_all(mutated, small_box())) {
      if (!report.pass) {
        caught = true;
        EXPECT_TRUE(report.counterexample.has_value());
      }
    }
    EXPECT_TRUE(caught) << name;
  }
}

TEST(Mutation, LambdaOffsetBreaksTheBinomialForm) {
  HelperOffsets offsets;
  offsets.lambda = 1;
  const IdentityRegistry mutated(offsets);
  const auto report = verify(mutated, "thm_2_1_sum_a", {{"n", 0, 3}, {"m", 0, 3}, {"l", 0, 3}});
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.counterexample.has_value());
}

TEST(PolynomialCheck, TrivialCases) {
  const BivariateEvaluator zero = [](const Rational&, const Rational&) { return Rational(0); };
  EXPECT_TRUE(polynomial_identity_check(zero, zero, 3));
  const UnivariateEvaluator x = [](const Rational& v) { return v; };
  const UnivariateEvaluator x1 = [](const Rational& v) { return v + Rational(1); };
  EXPECT_FALSE(polynomial_identity_check(x, x1, 1));
}

TEST(PolynomialCheck, MotzkinDeterminantIdentityAsPolynomial) {
  const long n = 2, m = 2, r = 1, l = 0;
  const BivariateEvaluator lhs = [&](const Rational& x, const Rational& y) {
    Rational s;
    for (long k = 0; k <= std::min(n + r + 1, m + r - l); ++k) {
      s += motzkin_weight(n, k, x, y) * motzkin_weight(m + r + 1, k + l + 1, x, y) -
           motzkin_weight(m, k + l + 1, x, y) * motzkin_weight(n + r + 1, k, x, y);
    }
    return s;
  };
  const BivariateEvaluator rhs = [&](const Rational& x, const Rational& y) {
    Rational s;
    for (long i = 0; i <= r; ++i) s += motzkin_weight(n + i, 0, x, y) * motzkin_weight(m + r - i, l, y, y);
    return s;
  };
  EXPECT_TRUE(polynomial_identity_check(lhs, rhs, 6));
}

TEST(PolynomialCheck, PermanentIdentityInY) {
  const ScalarHelpers helpers;
  for (long n = 0; n <= 3; ++n) {
    for (long m = n; m <= 4; ++m) {
      for (long r = -3; r <= 3; ++r) {
        const auto M = [](long a, long b, const Rational& y) {
          return a < 0 ? Rational(0) : motzkin_weight(a, b, y, y);
        };
        const UnivariateEvaluator lhs = [&](const Rational& y) {
          Rational s;
          for (long k = 0; k <= m; ++k) s += M(n, k, y) * M(m + r, k + 1, y) + M(n + r, k + 1, y) * M(m, k, y);
          return s;
        };
        const UnivariateEvaluator rhs = [&](const Rational& y) {
          return M(m + n + r, 1, y) + helpers.h(n, m, r, y);
        };
        EXPECT_TRUE(polynomial_identity_check(lhs, rhs, n + m + std::abs(r) + 2)) << n << m << r;
      }
    }
  }
}

TEST(Identities, TransformRowSumsTieBack) {
  const auto report = verify(registry(), "transform_row_sums", {{"n", 0, 20}});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.cases, 21u * 8);
}

}  // namespace
}  // namespace catalan
