#include <gtest/gtest.h>

#include <set>

#include "catalan/bijections.hpp"
#include "catalan/identities.hpp"
#include "catalan/triangles.hpp"

namespace catalan {
namespace {

LatticePath P(std::string_view text) { return LatticePath::parse(text); }

TEST(DyckSplit, SmallestPath) {
  const DyckSplit s = dyck_split(P("ud"), 0);
  EXPECT_EQ(s.pivot_index, 0u);
  EXPECT_EQ(s.pivot, Step::U);
  EXPECT_EQ(s.k, 0);
  EXPECT_EQ(s.pivot_level, 1);
  EXPECT_TRUE(s.head.empty());
  EXPECT_EQ(reverse_path(s.tail_reversed), P("d"));
}

TEST(DyckSplit, LengthFourPaths) {
  const DyckSplit a = dyck_split(P("uudd"), 1);
  EXPECT_EQ(a.pivot, Step::D);
  EXPECT_EQ(a.pivot_level, 1);
  const DyckSplit b = dyck_split(P("udud"), 1);
  EXPECT_EQ(b.pivot, Step::U);
  EXPECT_EQ(b.pivot_level, 1);
}

TEST(DyckSplit, RejectsBadInput) {
  EXPECT_THROW(dyck_split(P("uddu"), 0), std::invalid_argument);
  EXPECT_THROW(dyck_split(P("uhd"), 0), std::invalid_argument);
  EXPECT_THROW(dyck_split(P("ud"), 1), std::invalid_argument);
}

TEST(DyckSplit, PartsLandInBallotCellsAndRejoin) {
  for (long n = 0; n <= 4; ++n) {
    for (long m = 0; m <= 4; ++m) {
      for (const auto& p : enumerate_dyck(n + m + 1)) {
        const DyckSplit s = dyck_split(p, n);
        ASSERT_EQ(join(s), p);
        ASSERT_EQ(s.pivot_level % 2, 1);
        ASSERT_EQ(s.pivot_level, 2 * s.k + 1);
        const LatticePath& head = s.head;
        const LatticePath& tail = s.tail_reversed;
        ASSERT_TRUE(head.is_valid());
        ASSERT_TRUE(tail.is_valid());
        ASSERT_EQ(tail.length(), static_cast<std::size_t>(2 * m + 1));
        ASSERT_EQ(tail.end_level(), 2 * s.k + 1);
        ASSERT_EQ(head.length(), static_cast<std::size_t>(2 * n));
        ASSERT_EQ(head.end_level(), s.pivot == Step::U ? 2 * s.k : 2 * s.k + 2);
      }
    }
  }
}

TEST(CountByPivot, Examples) {
  const PivotCounts bisected = count_dyck_by_pivot(2, 1);
  EXPECT_EQ(bisected.up, 7u);
  EXPECT_EQ(bisected.down, 7u);
  const PivotCounts a = count_dyck_by_pivot(1, 1);
  EXPECT_EQ(a.up - a.down, 1u);
  const PivotCounts b = count_dyck_by_pivot(1, 2);
  EXPECT_EQ(b.up - b.down, 4u);
}

TEST(CountByPivot, TotalsAndDifferences) {
  const ScalarHelpers helpers;
  for (long n = 0; n <= 8; ++n) {
    for (long m = 0; n + m <= 8; ++m) {
      const PivotCounts c = count_dyck_by_pivot(n, m);
      EXPECT_EQ(Integer(static_cast<unsigned long>(c.up + c.down)), catalan(n + m + 1));
      EXPECT_EQ(Integer(static_cast<long>(c.up) - static_cast<long>(c.down)), helpers.g(n, m, m - n + 1))
          << n << "," << m;
    }
  }
}

TEST(Phi, SmallestCase) {
  const PhiInput input{PhiSide::B, P("u"), LatticePath()};
  EXPECT_TRUE(is_phi_member(input, 0, 0, 1));
  EXPECT_EQ(phi_forward(input, 0, 0, 1), P("u"));
  EXPECT_EQ(phi_backward(P("u"), 0, 0, 1), input);
  EXPECT_EQ(to_string(input), "B u|-");
}

TEST(Phi, NonMembersAreRejected) {
  // Q = uu ends at level 2, so it never belongs to the A-minus-C side with k = 0.
  const PhiInput input{PhiSide::AMinusC, LatticePath(), P("uu")};
  EXPECT_FALSE(is_phi_member(input, 0, 1, 1));
  EXPECT_THROW(phi_forward(input, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(phi_backward(P("ud"), 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(phi_backward(P("u"), 1, 0, 1), std::invalid_argument);
}

TEST(Phi, ExcludedPairsAreNotMembers) {
  // n = 0, m = 1, r = 1, k = 0: Q in M(2,1); uh crosses after 0 steps and is
  // excluded, hu crosses after 1 = r steps and belongs to the domain.
  EXPECT_TRUE(in_excluded_family(LatticePath(), P("uh"), 0, 1, 1, 0));
  EXPECT_FALSE(is_phi_member(PhiInput{PhiSide::AMinusC, LatticePath(), P("uh")}, 0, 1, 1));
  EXPECT_FALSE(in_excluded_family(LatticePath(), P("hu"), 0, 1, 1, 0));
  EXPECT_TRUE(is_phi_member(PhiInput{PhiSide::AMinusC, LatticePath(), P("hu")}, 0, 1, 1));
}

TEST(Phi, ImageIsAllTargetsForTwoTwoOne) {
  std::set<LatticePath> image;
  const auto inputs = enumerate_phi_domain(2, 2, 1);
  for (const auto& input : inputs) image.insert(phi_forward(input, 2, 2, 1));
  EXPECT_EQ(image.size(), inputs.size());
  const auto targets = enumerate_motzkin(5, 1);
  EXPECT_EQ(image, std::set<LatticePath>(targets.begin(), targets.end()));
}

TEST(Phi, BackwardRoundTripForTwoOneOne) {
  for (const auto& target : enumerate_motzkin(4, 1)) {
    EXPECT_EQ(phi_forward(phi_backward(target, 2, 1, 1), 2, 1, 1), target);
  }
}

TEST(Phi, LateCrossingGoesToTheASide) {
  const PhiInput pre = phi_backward(P("hhhu"), 1, 1, 2);
  EXPECT_EQ(pre.side, PhiSide::AMinusC);
  EXPECT_EQ(phi_forward(pre, 1, 1, 2), P("hhhu"));
}

TEST(Phi, ExhaustiveRoundTripsAndCensus) {
  for (long n = 0; n <= 3; ++n) {
    for (long m = n; m <= 3; ++m) {
      for (long r = 0; r <= 3; ++r) {
        const BijectionCheck check = check_phi(n, m, r);
        EXPECT_TRUE(check.ok) << n << m << r << ": " << check.failure;
        const PhiCensus census = phi_census(n, m, r);
        EXPECT_EQ(census.b_side + census.a_side - census.excluded, census.targets);
        EXPECT_EQ(check.targets, census.targets);
        EXPECT_EQ(Rational(static_cast<long>(census.targets)),
                  motzkin_weight(n + m + r, 1, Rational(1), Rational(1)));
      }
    }
  }
}

TEST(ExcludedFamily, Examples) {
  EXPECT_EQ(excluded_family_weight(1, 1, 0, 0, Rational(1)), Rational(0));
  EXPECT_EQ(excluded_family_weight(1, 1, 1, 0, Rational(1)), Rational(1));
  Rational total;
  for (long k = 0; k <= 1; ++k) total += excluded_family_weight(2, 2, 2, k, Rational(2));
  EXPECT_EQ(total, Rational(140));
  EXPECT_THROW(excluded_family_weight(1, 1, 2, 2, Rational(1)), DomainError);
}

TEST(ExcludedFamily, WeightsSumToH) {
  const ScalarHelpers helpers;
  for (const Rational& y : {Rational(1), Rational(2), Rational(-1, 2)}) {
    for (long n = 0; n <= 3; ++n) {
      for (long m = n; m <= 3; ++m) {
        for (long r = 1; r <= 3; ++r) {
          Rational total;
          for (long k = 0; k <= r - 1; ++k) total += excluded_family_weight(n, m, r, k, y);
          EXPECT_EQ(total, helpers.h(n, m, r, y)) << n << m << r << " y=" << y;
        }
      }
    }
  }
}

}  // namespace
}  // namespace catalan
