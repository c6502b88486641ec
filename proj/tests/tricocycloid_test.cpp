#include <gtest/gtest.h>

#include "hypernorm/tricocycloid.hpp"

using namespace hypernorm;

namespace {
  std::pair<QUnit, QUnit> qq(QUnit a, QUnit b) {
    return {a, b};
  }
}  // namespace

TEST(GiryTricocycloid, ForwardValues) {
  EXPECT_EQ(v_giry(QUnit(1, 2), QUnit(1, 3)), qq(QUnit(1, 6), QUnit(2, 5)));
  EXPECT_EQ(v_giry(QUnit(1, 2), QUnit(1, 2)), qq(QUnit(1, 4), QUnit(1, 3)));
  EXPECT_EQ(v_giry(QUnit(2, 3), QUnit(1, 2)), qq(QUnit(1, 3), QUnit(1, 2)));
}

TEST(GiryTricocycloid, InverseValues) {
  EXPECT_EQ(v_giry_inv(QUnit(1, 6), QUnit(2, 5)), qq(QUnit(1, 2), QUnit(1, 3)));
  EXPECT_EQ(v_giry_inv(QUnit(1, 4), QUnit(1, 3)), qq(QUnit(1, 2), QUnit(1, 2)));
  EXPECT_EQ(v_giry_inv(QUnit(1, 3), QUnit(1, 2)), qq(QUnit(2, 3), QUnit(1, 2)));
}

TEST(GiryTricocycloid, GammaValues) {
  EXPECT_EQ(gamma_giry(QUnit(1, 3)), QUnit(2, 3));
  EXPECT_EQ(gamma_giry(QUnit(1, 2)), QUnit(1, 2));
  EXPECT_EQ(gamma_giry(QUnit(2, 5)), QUnit(3, 5));
}

// r(s(a,b),c) puts weights (rs, r s*, r*) on a, b, c; p(a, q(b,c)) puts
// (p, p* q, p* q*). v must match the two.
TEST(GiryTricocycloid, PreservesThreePointWeights) {
  auto grid = qunit_grid(8);
  for (auto const& r : grid) {
    for (auto const& s : grid) {
      auto [p, q]  = v_giry(r, s);
      mpq_class rv = r.value(), sv = s.value(), pv = p.value(), qv = q.value();
      EXPECT_EQ(rv * sv, pv);
      EXPECT_EQ(rv * (1 - sv), (1 - pv) * qv);
      EXPECT_EQ(1 - rv, (1 - pv) * (1 - qv));
    }
  }
}

TEST(GiryTricocycloid, InverseRoundTrips) {
  auto grid = qunit_grid(8);
  for (auto const& a : grid) {
    EXPECT_EQ(gamma_giry(gamma_giry(a)), a);
    for (auto const& b : grid) {
      auto [p, q] = v_giry(a, b);
      EXPECT_EQ(v_giry_inv(p, q), qq(a, b));
      auto [r, s] = v_giry_inv(a, b);
      EXPECT_EQ(v_giry(r, s), qq(a, b));
    }
  }
}

TEST(GiryTricocycloid, RebracketAxiomAtHalves) {
  HTriple<GiryTricocycloid> x{QUnit(1, 2), QUnit(1, 2), QUnit(1, 2)};
  auto [lhs, rhs] = tricocycloid_axiom_sides<GiryTricocycloid>(x);
  HTriple<GiryTricocycloid> expect{QUnit(1, 8), QUnit(1, 7), QUnit(1, 3)};
  EXPECT_EQ(lhs, expect);
  EXPECT_EQ(rhs, expect);
}

TEST(GiryTricocycloid, RebracketAxiomClosedForm) {
  mpq_class r(1, 2), s(1, 3), t(1, 4);
  auto [lhs, rhs] = tricocycloid_axiom_sides<GiryTricocycloid>(
      {QUnit(1, 2), QUnit(1, 3), QUnit(1, 4)});
  mpq_class e0 = r * s * t;
  mpq_class e1 = r * s * (1 - t) / (1 - r * s * t);
  mpq_class e2 = r * (1 - s) / (1 - r * s);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs[0].value(), e0);
  EXPECT_EQ(lhs[1].value(), e1);
  EXPECT_EQ(lhs[2].value(), e2);
}

TEST(GiryTricocycloid, SymmetryAxiom) {
  auto [lhs, rhs] = symmetry_axiom_sides<GiryTricocycloid>({QUnit(1, 2), QUnit(1, 3)});
  EXPECT_EQ(lhs, qq(QUnit(1, 3), QUnit(3, 4)));
  EXPECT_EQ(rhs, qq(QUnit(1, 3), QUnit(3, 4)));
  EXPECT_TRUE(check_symmetry_axiom<GiryTricocycloid>({QUnit(2, 3), QUnit(1, 4)}));
}

TEST(TrivialTricocycloid, AxiomsHoldOnThePoint) {
  EXPECT_TRUE(check_tricocycloid_axiom<TrivialTricocycloid>({Point{}, Point{}, Point{}}));
  EXPECT_TRUE(check_symmetry_axiom<TrivialTricocycloid>({Point{}, Point{}}));
}
