#include <gtest/gtest.h>

#include <numeric>

#include "hypernorm/error.hpp"
#include "hypernorm/rational.hpp"

using namespace hypernorm;

TEST(Q01, StoresCanonicalForm) {
  EXPECT_EQ(Q01(2, 4), Q01(1, 2));
  EXPECT_EQ(Q01(2, 4).str(), "1/2");
  EXPECT_EQ(Q01(3, 3).str(), "1");
  EXPECT_EQ(Q01(0, 7).str(), "0");
}

TEST(Q01, RejectsValuesOutsideUnitInterval) {
  EXPECT_THROW(Q01(3, 2), RangeError);
  EXPECT_THROW(Q01(-1, 2), RangeError);
  EXPECT_THROW(Q01(1, 0), RangeError);
}

TEST(QUnit, RejectsBoundary) {
  EXPECT_THROW(QUnit(0, 1), RangeError);
  EXPECT_THROW(QUnit(1, 1), RangeError);
  EXPECT_NO_THROW(QUnit(1, 1000));
}

TEST(Q01, ParsesText) {
  EXPECT_EQ(Q01::parse("1/3"), Q01(1, 3));
  EXPECT_EQ(Q01::parse("6/9"), Q01(2, 3));
  EXPECT_EQ(Q01::parse("1"), Q01::one());
  EXPECT_EQ(Q01::parse("0"), Q01::zero());
  EXPECT_THROW(Q01::parse("a/b"), ParseError);
  EXPECT_THROW(Q01::parse("1/0"), ParseError);
  EXPECT_THROW(Q01::parse("-1/2"), ParseError);
  EXPECT_THROW(Q01::parse("0.5"), ParseError);
  EXPECT_THROW(Q01::parse("5/4"), RangeError);
  EXPECT_THROW(QUnit::parse("1"), RangeError);
}

TEST(Q01, Multiplication) {
  EXPECT_EQ(q_mul(QUnit(1, 2), QUnit(1, 3)), QUnit(1, 6));
  EXPECT_EQ(q_mul(Q01(2, 5), Q01::one()), Q01(2, 5));
  EXPECT_EQ(q_mul(QUnit(2, 3), QUnit(3, 4)), QUnit(1, 2));
}

TEST(Q01, Complement) {
  EXPECT_EQ(q_star(Q01(1, 3)), Q01(2, 3));
  EXPECT_EQ(q_star(Q01::zero()), Q01::one());
  EXPECT_EQ(q_star(QUnit(1, 2)), QUnit(1, 2));
}

TEST(QUnit, FusionCoordinate) {
  EXPECT_EQ(q_fusion(QUnit(1, 2), QUnit(1, 3)), QUnit(2, 5));
  EXPECT_EQ(q_fusion(QUnit(1, 2), QUnit(1, 2)), QUnit(1, 3));
  EXPECT_EQ(q_fusion(QUnit(2, 3), QUnit(1, 2)), QUnit(1, 2));
}

TEST(Q01, CheckedArithmetic) {
  EXPECT_EQ(q_add(Q01(1, 3), Q01(1, 6)), Q01(1, 2));
  EXPECT_THROW(q_add(Q01(2, 3), Q01(1, 2)), RangeError);
  EXPECT_EQ(q_sub(Q01(1, 2), Q01(1, 3)), Q01(1, 6));
  EXPECT_THROW(q_sub(Q01(1, 3), Q01(1, 2)), RangeError);
  EXPECT_EQ(q_div(Q01(1, 4), Q01(1, 2)), Q01(1, 2));
  EXPECT_THROW(q_div(Q01(1, 2), Q01::zero()), ZeroMassError);
  EXPECT_THROW(q_div(Q01(1, 2), Q01(1, 4)), RangeError);
}

TEST(QUnit, GridMatchesBruteForceCount) {
  for (unsigned den = 2; den <= 10; ++den) {
    std::size_t expect = 0;
    for (unsigned d = 2; d <= den; ++d) {
      for (unsigned n = 1; n < d; ++n) {
        expect += std::gcd(n, d) == 1;
      }
    }
    auto grid = qunit_grid(den);
    EXPECT_EQ(grid.size(), expect) << "den " << den;
    EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
  }
  EXPECT_EQ(qunit_grid(8).size(), 21u);
}
