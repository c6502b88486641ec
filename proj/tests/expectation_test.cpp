#include <gtest/gtest.h>

#include "hypernorm/expectation.hpp"

using namespace hypernorm;

namespace {
  using S = std::string;
  using E = FinAddProb<S>;

  E uniform_ab() {
    return E(E::Map{{"a", Q01(1, 2)}, {"b", Q01(1, 2)}});
  }
}  // namespace

TEST(Expectation, MeasureOfSets) {
  EXPECT_EQ(ea_measure(uniform_ab(), {"a", "b"}), Q01::one());
  EXPECT_EQ(ea_measure(uniform_ab(), {"a"}), Q01(1, 2));
  EXPECT_EQ(ea_measure(uniform_ab(), {}), Q01::zero());
  EXPECT_EQ(ea_measure(uniform_ab(), {"z"}), Q01::zero());
}

TEST(Expectation, IntegrateByLevelSets) {
  auto f = [](S const& x) { return x == "a" ? Q01(1, 2) : Q01(1, 4); };
  EXPECT_EQ(ea_integrate(uniform_ab(), f), Q01(3, 8));
  EXPECT_EQ(ea_integrate(uniform_ab(), [](S const&) { return Q01(2, 7); }),
            Q01(2, 7));
}

TEST(Expectation, MergedMeasureSplitsOverTags) {
  using T = TaggedElem<S>;
  EaNary<S>::Parts parts;
  parts.emplace(1, NaryPart<GiryTricocycloid, E>{Q01(1, 2), ea_unit(S("a"))});
  parts.emplace(2, NaryPart<GiryTricocycloid, E>{Q01(1, 2), ea_unit(S("x"))});
  EaNary<S> h(std::move(parts));
  std::set<T> both{inject(1, S("a")), inject(2, S("x"))};
  EXPECT_EQ(ea_merged_measure(h, both), Q01::one());
  EXPECT_EQ(ea_merged_measure(h, {inject(2, S("x"))}), Q01(1, 2));
  EXPECT_EQ(ea_measure(ea_merge(h), both), Q01::one());
  EXPECT_EQ(ea_split(ea_merge(h), 2), h);
}

TEST(Expectation, IntegralAgainstMergeIsWeightedSum) {
  using T = TaggedElem<S>;
  E w(E::Map{{"a", Q01(1, 3)}, {"b", Q01(2, 3)}});
  E g(E::Map{{"x", Q01(1, 4)}, {"y", Q01(3, 4)}});
  auto f = [](T const& p) {
    if (p.tag == 1) {
      return p.atom == "a" ? Q01::one() : Q01(1, 2);
    }
    return p.atom == "x" ? Q01::zero() : Q01(1, 3);
  };
  for (auto const& r : qunit_grid(5)) {
    EaNary<S>::Parts parts;
    parts.emplace(1, NaryPart<GiryTricocycloid, E>{r.q01(), w});
    parts.emplace(2, NaryPart<GiryTricocycloid, E>{q_star(r.q01()), g});
    auto h = ea_merge(EaNary<S>(std::move(parts)));
    // int_A f dw = 1/3 + 1/3 = 2/3, int_B f dg = 1/4
    mpq_class expect = r.value() * mpq_class(2, 3) + (1 - r.value()) * mpq_class(1, 4);
    EXPECT_EQ(ea_integrate(h, f).value(), expect);
  }
}

TEST(Expectation, Join) {
  FinAddProb<E> unit(FinAddProb<E>::Map{{uniform_ab(), Q01::one()}});
  EXPECT_EQ(ea_join(unit), uniform_ab());
  FinAddProb<E> mix(FinAddProb<E>::Map{{ea_unit(S("a")), Q01(1, 2)},
                                       {ea_unit(S("b")), Q01(1, 2)}});
  EXPECT_EQ(ea_join(mix), uniform_ab());
}

TEST(Expectation, TranslatesToAndFromDist) {
  Dist<S> d(Dist<S>::Map{{"a", Q01(1, 6)}, {"b", Q01(5, 6)}});
  EXPECT_EQ(ea_to_dist(ea_from_dist(d)), d);
  EXPECT_EQ(ea_measure(ea_from_dist(d), {"b"}), Q01(5, 6));
  auto bang = ea_pushforward([](S const&) { return S("*"); }, ea_from_dist(d));
  EXPECT_EQ(bang, ea_unit(S("*")));
}
