#include <gtest/gtest.h>

#include <vector>

#include "catalan/transforms.hpp"

namespace catalan {
namespace {

using Row = std::vector<long>;

// Rows of the published tables, transcribed cell by cell.
const std::vector<Row> kX = {{1}, {0, 1}, {0, 3, 1}, {0, 14, 10, 1}, {0, 84, 90, 21, 1}, {0, 594, 825, 308, 36, 1}};
const std::vector<Row> kY = {{1},           {1, 1},           {3, 6, 1}, {14, 40, 15, 1}, {84, 300, 175, 28, 1},
                             {594, 2475, 1925, 504, 45, 1}};
const std::vector<Row> kZ = {{1},          {1, 1},           {2, 2, 1},  {4, 6, 3, 1}, {10, 15, 12, 4, 1},
                             {25, 45, 36, 20, 5, 1}, {70, 126, 126, 70, 30, 6, 1}};
const std::vector<Row> kW = {{1},      {2},           {4, 1},         {10, 4},         {20, 21, 1},
                             {56, 70, 6}, {140, 238, 50, 1}, {420, 792, 210, 8}, {1176, 2604, 990, 91, 1}};

void expect_table(DerivedKind kind, const std::vector<Row>& rows) {
  const DerivedTriangle t(kind);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const long row = static_cast<long>(n), col = static_cast<long>(k);
      if (k < rows[n].size()) {
        EXPECT_TRUE(t.in_support(row, col)) << to_string(kind) << n << "," << k;
        EXPECT_EQ(t.entry(row, col), rows[n][k]) << to_string(kind) << n << "," << k;
      } else {
        EXPECT_FALSE(t.in_support(row, col)) << to_string(kind) << n << "," << k;
        EXPECT_EQ(t.entry(row, col), 0) << to_string(kind) << n << "," << k;
      }
    }
  }
}

TEST(SmallMatrices, DeterminantAndPermanent) {
  EXPECT_EQ(det2(Integer(1), Integer(0), Integer(0), Integer(1)), 1);
  EXPECT_EQ(det2(Integer(3), Integer(1), Integer(9), Integer(4)), 3);
  EXPECT_EQ(det2(Rational(2, 3), Rational(5), Rational(2, 3), Rational(5)), Rational(0));
  EXPECT_EQ(per2(Integer(1), Integer(0), Integer(0), Integer(1)), 1);
  EXPECT_EQ(per2(Integer(9), Integer(4), Integer(28), Integer(14)), 238);
  EXPECT_EQ(per2(Integer(9), Integer(4), Integer(90), Integer(48)), 792);
}

TEST(Transforms, SpotValues) {
  EXPECT_EQ(x_entry(3, 1), 14);
  EXPECT_EQ(x_entry(4, 2), 90);
  EXPECT_EQ(x_entry(2, 0), 0);
  EXPECT_EQ(y_entry(3, 1), 40);
  EXPECT_EQ(y_entry(2, 1), 6);
  EXPECT_EQ(y_entry(5, 0), 594);
  EXPECT_EQ(z_entry(4, 2), 12);
  EXPECT_EQ(z_entry(5, 1), 45);
  EXPECT_EQ(z_entry(6, 3), 70);
  EXPECT_EQ(w_entry(6, 1), 238);
  EXPECT_EQ(w_entry(8, 3), 91);
  EXPECT_EQ(w_entry(3, 0), 10);
  EXPECT_EQ(w_entry(3, 2), 0);
}

TEST(Transforms, PublishedTablesCellForCell) {
  expect_table(DerivedKind::X, kX);
  expect_table(DerivedKind::Y, kY);
  expect_table(DerivedKind::Z, kZ);
  expect_table(DerivedKind::W, kW);
}

TEST(RowSums, PublishedColumns) {
  EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::X), 4), 196);
  EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::Z), 6, true), 25);
  EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::W), 7), 1430);
  const std::vector<long> x_sums = {1, 1, 4, 25, 196, 1764};
  const std::vector<long> y_sums = {1, 2, 10, 70, 588, 5544};
  for (long n = 0; n < 6; ++n) {
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::X), n), x_sums[n]);
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::Y), n), y_sums[n]);
  }
  EXPECT_EQ(row_sum(Triangle::shapiro(), 6, true), Rational(132));
}

TEST(RowSums, CatalanProducts) {
  for (long n = 0; n <= 25; ++n) {
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::X), n), catalan(n) * catalan(n));
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::Y), n), catalan(n) * catalan(n + 1));
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::Z), n), catalan(n + 1));
    const Integer alternating = n % 2 == 0 ? Integer(catalan(n / 2) * catalan(n / 2)) : Integer(0);
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::Z), n, true), alternating);
    EXPECT_EQ(row_sum(DerivedTriangle(DerivedKind::W), n), catalan(n + 1));
  }
}

TEST(Transforms, ZeroOutsideSupport) {
  for (const auto kind : {DerivedKind::X, DerivedKind::Y, DerivedKind::Z, DerivedKind::W}) {
    const DerivedTriangle t(kind);
    for (long n = 0; n <= 30; ++n) {
      EXPECT_EQ(t.entry(n, -1), 0);
      EXPECT_EQ(t.entry(n, n + 1), 0);
      EXPECT_EQ(t.entry(-1, n), 0);
      for (long k = 0; k <= n; ++k) {
        if (!t.in_support(n, k)) {
          EXPECT_EQ(t.entry(n, k), 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace catalan
