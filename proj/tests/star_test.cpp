#include <gtest/gtest.h>

#include "hypernorm/error.hpp"
#include "hypernorm/star.hpp"
#include "oracle.hpp"

using namespace hypernorm;

namespace {
  using G    = GiryTricocycloid;
  using S    = std::string;
  using SS   = StarElem<G, S, S>;
  using SS_S = StarElem<G, SS, S>;
  using S_SS = StarElem<G, S, SS>;

  std::vector<SS_S> three_fold(unsigned max_den) {
    auto w  = weight_grid<G>(max_den);
    auto ab = all_star_elems<G, S, S>({"a"}, {"b"}, w);
    return all_star_elems<G>(ab, std::vector<S>{"c"}, w);
  }
}  // namespace

TEST(StarAssoc, RebracketsNestedMid) {
  auto e = SS_S::mid(QUnit(1, 2), SS::mid(QUnit(1, 2), "a", "b"), "c");
  auto expect = S_SS::mid(QUnit(1, 4), "a", SS::mid(QUnit(1, 3), "b", "c"));
  EXPECT_EQ(star_assoc(e), expect);
  EXPECT_EQ(oracle::flatten(star_assoc(e)),
            (oracle::Weights{{"a", mpq_class(1, 4)},
                             {"b", mpq_class(1, 4)},
                             {"c", mpq_class(1, 2)}}));
}

TEST(StarAssoc, DegenerateSummands) {
  EXPECT_EQ(star_assoc(SS_S::left(SS::left("a"))), S_SS::left("a"));
  EXPECT_EQ(star_assoc(SS_S::mid(QUnit(1, 3), SS::right("b"), "c")),
            S_SS::right(SS::mid(QUnit(1, 3), "b", "c")));
}

TEST(StarAssoc, PreservesLeafWeightsAndInverts) {
  for (auto const& e : three_fold(6)) {
    auto moved = star_assoc(e);
    EXPECT_EQ(oracle::flatten(moved), oracle::flatten(e));
    EXPECT_EQ(star_assoc_inv(moved), e);
  }
}

TEST(StarSym, SwapsSidesWithComplementWeight) {
  EXPECT_EQ(star_sym(SS::mid(QUnit(1, 3), "a", "x")),
            SS::mid(QUnit(2, 3), "x", "a"));
  EXPECT_EQ(star_sym(SS::left("a")), SS::right("a"));
  for (auto const& e :
       all_star_elems<G, S, S>({"a"}, {"b"}, weight_grid<G>(6))) {
    EXPECT_EQ(star_sym(star_sym(e)), e);
    EXPECT_EQ(oracle::flatten(star_sym(e)), oracle::flatten(e));
  }
}

TEST(StarUnit, EliminatesEmptySide) {
  EXPECT_EQ((star_unit_elim<G>(StarElem<G, S, Empty>::left("a"))), "a");
  EXPECT_EQ((star_unit_elim_right<G>(StarElem<G, Empty, S>::right("b"))), "b");
}

TEST(NaryNormalize, FlattensNestedWeights) {
  auto e = nary_normalize<G, S>(
      SS_S::mid(QUnit(1, 2), SS::mid(QUnit(1, 2), "x1", "x2"), "x3"));
  ASSERT_EQ(e.parts().size(), 3u);
  EXPECT_EQ(e.parts().at(1).weight, Q01(1, 4));
  EXPECT_EQ(e.parts().at(2).weight, Q01(1, 4));
  EXPECT_EQ(e.parts().at(3).weight, Q01(1, 2));

  auto l = nary_normalize<G, S>(SS_S::left(SS::left("x1")));
  ASSERT_EQ(l.parts().size(), 1u);
  EXPECT_EQ(l.parts().at(1).weight, Q01::one());

  auto m = nary_normalize<G, S>(SS_S::mid(QUnit(1, 3), SS::left("x1"), "x3"));
  ASSERT_EQ(m.parts().size(), 2u);
  EXPECT_EQ(m.parts().at(1).weight, Q01(1, 3));
  EXPECT_EQ(m.parts().at(3).weight, Q01(2, 3));
}

TEST(NaryNormalize, IgnoresBracketingAndRoundTrips) {
  for (auto const& e : three_fold(4)) {
    auto n = nary_normalize<G, S>(e);
    EXPECT_EQ((nary_normalize<G, S>(star_assoc(e))), n);
    EXPECT_EQ(nary_debracket<3>(n), e);
  }
}

TEST(NaryStarElem, RejectsBadWeights) {
  using N = NaryStarElem<G, S>;
  EXPECT_THROW(N(N::Parts{}), SignatureError);
  EXPECT_THROW(N(N::Parts{{1, {Q01(1, 2), "a"}}}), RangeError);
}

TEST(Coherence, PentagonAndHexagonSpotChecks) {
  using SSS_S = StarElem<G, SS_S, S>;
  auto h      = QUnit(1, 2);
  auto deep   = SSS_S::mid(h, SS_S::mid(h, SS::mid(h, "a", "b"), "c"), "d");
  EXPECT_TRUE(pentagon_check(deep));
  EXPECT_TRUE(pentagon_check(SSS_S::left(SS_S::left(SS::left("a")))));
  EXPECT_TRUE(hexagon_check(SS_S::mid(QUnit(1, 2), SS::mid(QUnit(1, 3), "a", "b"), "c")));
  EXPECT_TRUE(hexagon_check(SS_S::left(SS::left("a"))));
}

TEST(Coherence, TrivialTricocycloidPentagon) {
  using T   = TrivialTricocycloid;
  auto w    = weight_grid<T>(4);
  auto ab   = all_star_elems<T, S, S>({"a"}, {"b"}, w);
  auto abc  = all_star_elems<T>(ab, std::vector<S>{"c"}, w);
  auto abcd = all_star_elems<T>(abc, std::vector<S>{"d"}, w);
  EXPECT_EQ(w.size(), 1u);
  for (auto const& e : abcd) {
    EXPECT_TRUE(pentagon_check(e));
  }
  for (auto const& e : abc) {
    EXPECT_TRUE(hexagon_check(e));
  }
}
