#include <gtest/gtest.h>

#include "hypernorm/convex.hpp"
#include "oracle.hpp"

using namespace hypernorm;

namespace {
  using S  = std::string;
  using D  = Dist<S>;
  using DS = DistStar<S>;
  using T  = TaggedElem<S>;

  D d(std::initializer_list<std::pair<S const, Q01>> xs) {
    return D(D::Map(xs));
  }

  Dist<T> tagged(std::initializer_list<std::pair<T const, Q01>> xs) {
    return Dist<T>(Dist<T>::Map(xs));
  }

  T t(std::size_t tag, S atom) {
    return inject(tag, std::move(atom));
  }

  ConvexSpace<DS> star_space() {
    return convex_star(free_convex_space<S>(), free_convex_space<S>());
  }

  std::vector<D> dists_over(S const& x, S const& y, unsigned den) {
    std::vector<D> out{dirac(x), dirac(y)};
    for (auto const& r : qunit_grid(den)) {
      out.push_back(dist_mix(r, dirac(x), dirac(y)));
    }
    return out;
  }
}  // namespace

TEST(ConvexStar, MixesTwoMids) {
  auto sp = star_space();
  auto x  = DS::mid(QUnit(1, 2), dirac(S("a")), dirac(S("b")));
  auto y  = DS::mid(QUnit(1, 2), dirac(S("c")), dirac(S("e")));
  auto z  = sp(QUnit(1, 2), x, y);
  EXPECT_EQ(z, DS::mid(QUnit(1, 2), d({{"a", Q01(1, 2)}, {"c", Q01(1, 2)}}),
                       d({{"b", Q01(1, 2)}, {"e", Q01(1, 2)}})));
  oracle::Weights quarter{{"a", mpq_class(1, 4)}, {"b", mpq_class(1, 4)},
                          {"c", mpq_class(1, 4)}, {"e", mpq_class(1, 4)}};
  EXPECT_EQ(oracle::flatten(z), quarter);
}

TEST(ConvexStar, DegenerateCases) {
  auto sp = star_space();
  auto a  = DS::left(dirac(S("a")));
  EXPECT_EQ(sp(QUnit(2, 5), a, a), a);
  EXPECT_EQ(sp(QUnit(1, 3), a, DS::right(dirac(S("b")))),
            DS::mid(QUnit(1, 3), dirac(S("a")), dirac(S("b"))));
}

// Every element denotes a distribution on A + B (atoms a, b | x, y); the
// operation must be pointwise mixing of those.
TEST(ConvexStar, AgreesWithWeightSemantics) {
  auto sp    = star_space();
  auto grid  = qunit_grid(4);
  auto elems = all_star_elems<GiryTricocycloid>(dists_over("a", "b", 4),
                                                dists_over("x", "y", 4), grid);
  for (auto const& r : grid) {
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        ASSERT_EQ(oracle::flatten(sp(r, x, y)),
                  oracle::mix(r.value(), oracle::flatten(x), oracle::flatten(y)));
      }
    }
  }
}

TEST(Phi, ThreeCases) {
  auto w = tagged({{t(1, "a"), Q01(1, 3)}, {t(1, "c"), Q01(1, 3)}, {t(2, "x"), Q01(1, 3)}});
  DS mid = DS::mid(QUnit(2, 3), d({{"a", Q01(1, 2)}, {"c", Q01(1, 2)}}), dirac(S("x")));
  EXPECT_EQ(phi(w), mid);
  EXPECT_EQ(phi_inv(mid), w);

  auto left = tagged({{t(1, "a"), Q01(1, 4)}, {t(1, "b"), Q01(3, 4)}});
  EXPECT_EQ(phi(left), DS::left(d({{"a", Q01(1, 4)}, {"b", Q01(3, 4)}})));
  EXPECT_EQ(phi(tagged({{t(2, "x"), Q01::one()}})), DS::right(dirac(S("x"))));
  EXPECT_EQ(phi_inv(DS::left(dirac(S("a")))), tagged({{t(1, "a"), Q01::one()}}));
  EXPECT_THROW(phi(tagged({{t(3, "z"), Q01::one()}})), SignatureError);
}

TEST(Phi, OracleFoldsDiracPoints) {
  EXPECT_EQ(phi_oracle(tagged({{t(1, "a"), Q01::one()}})), DS::left(dirac(S("a"))));
  EXPECT_EQ(phi_oracle(tagged({{t(1, "a"), Q01(1, 2)}, {t(2, "x"), Q01(1, 2)}})),
            DS::mid(QUnit(1, 2), dirac(S("a")), dirac(S("x"))));
}

TEST(NaryPhi, SplitsByTag) {
  auto w = tagged({{t(1, "a"), Q01(1, 2)}, {t(3, "z"), Q01(1, 2)}});
  auto e = nary_phi(w, 3);
  ASSERT_EQ(e.parts().size(), 2u);
  EXPECT_EQ(e.parts().at(1).weight, Q01(1, 2));
  EXPECT_EQ(e.parts().at(1).value, dirac(S("a")));
  EXPECT_EQ(e.parts().at(3).weight, Q01(1, 2));
  EXPECT_EQ(e.parts().at(3).value, dirac(S("z")));
  EXPECT_EQ(nary_phi_inv(e), w);

  auto one = nary_phi(tagged({{t(2, "x"), Q01::one()}}), 3);
  ASSERT_EQ(one.parts().size(), 1u);
  EXPECT_EQ(one.parts().at(2).weight, Q01::one());
  EXPECT_THROW(nary_phi(w, 2), SignatureError);
}

TEST(HypernormJacobs, NormalisesEachTag) {
  auto w = tagged({{t(1, "a"), Q01(1, 4)}, {t(1, "b"), Q01(1, 4)}, {t(2, "x"), Q01(1, 2)}});
  using TD = TaggedElem<D>;
  Dist<TD> expect(Dist<TD>::Map{
      {inject(1, d({{"a", Q01(1, 2)}, {"b", Q01(1, 2)}})), Q01(1, 2)},
      {inject(2, dirac(S("x"))), Q01(1, 2)}});
  EXPECT_EQ(hypernorm_jacobs(w), expect);

  auto on2 = hypernorm_jacobs(tagged({{t(2, "x"), Q01(1, 3)}, {t(2, "y"), Q01(2, 3)}}));
  EXPECT_EQ(on2, Dist<TD>(Dist<TD>::Map{
                     {inject(2, d({{"x", Q01(1, 3)}, {"y", Q01(2, 3)}})), Q01::one()}}));

  auto three = hypernorm_jacobs(tagged({{t(1, "a"), Q01(1, 3)}, {t(3, "z"), Q01(2, 3)}}));
  EXPECT_EQ(three, Dist<TD>(Dist<TD>::Map{{inject(1, dirac(S("a"))), Q01(1, 3)},
                                          {inject(3, dirac(S("z"))), Q01(2, 3)}}));
}
