#include <gtest/gtest.h>

#include "hypernorm/dist.hpp"
#include "hypernorm/error.hpp"
#include "oracle.hpp"

using namespace hypernorm;

namespace {
  using S = std::string;
  using D = Dist<S>;

  D dist(std::initializer_list<std::pair<S const, Q01>> xs) {
    return D(D::Map(xs));
  }

  SubDist<S> sub(std::initializer_list<std::pair<S const, Q01>> xs) {
    return SubDist<S>(SubDist<S>::Map(xs));
  }
}  // namespace

TEST(Dist, DropsZeroWeightsAndChecksTotal) {
  auto w = sub({{"a", Q01(1, 2)}, {"b", Q01::zero()}});
  EXPECT_EQ(w.size(), 1u);
  EXPECT_THROW(sub({{"a", Q01(2, 3)}, {"b", Q01(2, 3)}}), RangeError);
  EXPECT_THROW(dist({{"a", Q01(1, 2)}}), RangeError);
}

TEST(Dist, Dirac) {
  EXPECT_EQ(dirac(S("a")), dist({{"a", Q01::one()}}));
  auto f = [](S const& x) { return x + "'"; };
  EXPECT_EQ(pushforward(f, dirac(S("a"))), dirac(S("a'")));
  EXPECT_EQ(dist_join(dirac(dirac(S("a")))), dirac(S("a")));
}

TEST(Dist, PushforwardSumsFibres) {
  auto w = sub({{"a", Q01(1, 3)}, {"c", Q01(1, 3)}, {"d", Q01(1, 6)}});
  auto bang = pushforward([](S const&) { return S("*"); }, w);
  EXPECT_EQ(bang, sub({{"*", Q01(5, 6)}}));
  EXPECT_EQ(pushforward([](S const& x) { return x; }, w), w);
  auto to_c = pushforward([](S const&) { return S("c"); },
                          dist({{"a", Q01(1, 2)}, {"b", Q01(1, 2)}}));
  EXPECT_EQ(to_c, dirac(S("c")));
}

TEST(Dist, JoinMixesInnerDistributions) {
  D half = dist({{"a", Q01(1, 2)}, {"b", Q01(1, 2)}});
  Dist<D> outer(Dist<D>::Map{{half, Q01(1, 2)}, {dirac(S("a")), Q01(1, 2)}});
  EXPECT_EQ(dist_join(outer), dist({{"a", Q01(3, 4)}, {"b", Q01(1, 4)}}));
  EXPECT_EQ(dist_join(Dist<D>(Dist<D>::Map{{half, Q01::one()}})), half);
}

TEST(Dist, TotalMass) {
  EXPECT_EQ(total_mass(sub({{"a", Q01(1, 3)}, {"c", Q01(1, 3)}, {"d", Q01(1, 6)}})),
            Q01(5, 6));
  EXPECT_EQ(total_mass(SubDist<S>()), Q01::zero());
  EXPECT_EQ(total_mass(dist({{"a", Q01(1, 5)}, {"b", Q01(4, 5)}})), Q01::one());
}

TEST(Dist, RestrictToTag) {
  using T = TaggedElem<S>;
  Dist<T> w(Dist<T>::Map{{inject(1, S("a")), Q01(1, 4)},
                         {inject(1, S("b")), Q01(1, 4)},
                         {inject(2, S("x")), Q01(1, 2)}});
  EXPECT_EQ(restrict(w, 1), sub({{"a", Q01(1, 4)}, {"b", Q01(1, 4)}}));
  EXPECT_EQ(restrict(w, 2), sub({{"x", Q01(1, 2)}}));
  EXPECT_TRUE(restrict(Dist<T>(Dist<T>::Map{{inject(1, S("a")), Q01::one()}}), 2)
                  .empty());
}

TEST(Dist, Normalize) {
  EXPECT_EQ(normalize(sub({{"a", Q01(1, 4)}, {"b", Q01(1, 4)}})),
            dist({{"a", Q01(1, 2)}, {"b", Q01(1, 2)}}));
  D d = dist({{"a", Q01(1, 3)}, {"b", Q01(2, 3)}});
  EXPECT_EQ(normalize(d), d);
  EXPECT_THROW(normalize(SubDist<S>()), ZeroMassError);
}

TEST(Dist, MixMatchesPointwiseOracle) {
  std::vector<D> ds{dirac(S("a")), dist({{"a", Q01(1, 3)}, {"b", Q01(2, 3)}}),
                    dist({{"b", Q01(1, 2)}, {"c", Q01(1, 2)}})};
  for (auto const& r : qunit_grid(6)) {
    for (auto const& x : ds) {
      for (auto const& y : ds) {
        EXPECT_EQ(oracle::flatten(dist_mix(r, x, y)),
                  oracle::mix(r.value(), oracle::flatten(x), oracle::flatten(y)));
      }
    }
  }
}

TEST(Dist, ConvexCombine) {
  auto op = [](QUnit const& r, D const& a, D const& b) { return dist_mix(r, a, b); };
  D a = dirac(S("a")), b = dirac(S("b")), c = dirac(S("c"));
  EXPECT_EQ(convex_combine<D>({{Q01::one(), a}}, op), a);
  EXPECT_EQ(convex_combine<D>({{Q01(1, 2), a}, {Q01(1, 2), a}}, op), a);
  D left = convex_combine<D>({{Q01(1, 2), a}, {Q01(1, 4), b}, {Q01(1, 4), c}}, op);
  D right = convex_combine<D>({{Q01(1, 4), c}, {Q01(1, 4), b}, {Q01(1, 2), a}}, op);
  EXPECT_EQ(left, right);
  EXPECT_EQ(left, dist({{"a", Q01(1, 2)}, {"b", Q01(1, 4)}, {"c", Q01(1, 4)}}));
  EXPECT_THROW(convex_combine<D>({}, op), RangeError);
}
