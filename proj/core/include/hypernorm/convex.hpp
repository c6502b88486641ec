#ifndef HYPERNORM_CONVEX_HPP_
#define HYPERNORM_CONVEX_HPP_

// Convex spaces, their coproduct A * B, and the isomorphism
// phi : D(A + B) -> DA * DB together with its n-ary form.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hypernorm/dist.hpp"
#include "hypernorm/star.hpp"
#include "hypernorm/tagged_sum.hpp"
#include "hypernorm/tricocycloid.hpp"

namespace hypernorm {

  template <typename X, typename Y>
  using GiryStar = StarElem<GiryTricocycloid, X, Y>;

  template <typename X>
  using DistStar = GiryStar<Dist<X>, Dist<X>>;

  // A set with an abstract convex combination op(r, a, b) = r.a + r*.b.
  template <typename X>
  struct ConvexSpace {
    std::function<X(QUnit const&, X const&, X const&)> op;

    X operator()(QUnit const& r, X const& a, X const& b) const {
      return op(r, a, b);
    }
  };

  // DX with the pointwise operation; the free convex space on X.
  template <typename X>
  ConvexSpace<Dist<X>> free_convex_space() {
    return {[](QUnit const& r, Dist<X> const& a, Dist<X> const& b) {
      return dist_mix(r, a, b);
    }};
  }

  // r(a, a) = a
  template <typename X>
  bool check_idempotent(ConvexSpace<X> const& s, QUnit const& r, X const& a) {
    return s(r, a, a) == a;
  }

  // r(a, b) = r*(b, a)
  template <typename X>
  bool check_twist(ConvexSpace<X> const& s,
                   QUnit const&          r,
                   X const&              a,
                   X const&              b) {
    return s(r, a, b) == s(q_star(r), b, a);
  }

  // r(s(a, b), c) = (rs)(a, (r s* / (rs)*)(b, c))
  template <typename X>
  bool check_rebracket(ConvexSpace<X> const& sp,
                       QUnit const&          r,
                       QUnit const&          s,
                       X const&              a,
                       X const&              b,
                       X const&              c) {
    auto [p, q] = v_giry(r, s);
    return sp(r, sp(s, a, b), c) == sp(p, a, sp(q, b, c));
  }

  namespace detail {
    // The part of a star element lying over one side, with its mass.
    template <typename X>
    struct SidePart {
      mpq_class mass;
      X const*  value;
    };

    template <typename X>
    struct MixedSide {
      mpq_class mass;
      X         value;
    };

    template <typename X, typename Op>
    std::optional<MixedSide<X>> mix_sides(QUnit const&                      r,
                                          std::optional<SidePart<X>> const& a,
                                          std::optional<SidePart<X>> const& b,
                                          Op const&                         op) {
      if (a && b) {
        mpq_class ma   = r.value() * a->mass;
        mpq_class mass = ma + (1 - r.value()) * b->mass;
        return MixedSide<X>{mass, op(QUnit(Q01(mpq_class(ma / mass))),
                                     *a->value, *b->value)};
      }
      if (a) {
        return MixedSide<X>{r.value() * a->mass, *a->value};
      }
      if (b) {
        return MixedSide<X>{(1 - r.value()) * b->mass, *b->value};
      }
      return std::nullopt;
    }

    template <typename A, typename B>
    std::pair<std::optional<SidePart<A>>, std::optional<SidePart<B>>>
    split_sides(GiryStar<A, B> const& e) {
      using E = GiryStar<A, B>;
      return e.visit(overloaded{
          [](typename E::Left const& l) {
            return std::pair{std::optional{SidePart<A>{1, &l.value}},
                             std::optional<SidePart<B>>{}};
          },
          [](typename E::Mid const& m) {
            return std::pair{
                std::optional{SidePart<A>{m.weight.value(), &m.left}},
                std::optional{SidePart<B>{1 - m.weight.value(), &m.right}}};
          },
          [](typename E::Right const& r) {
            return std::pair{std::optional<SidePart<A>>{},
                             std::optional{SidePart<B>{1, &r.value}}};
          }});
    }
  }  // namespace detail

  template <typename A, typename B, typename OpA, typename OpB>
  GiryStar<A, B> star_combine(QUnit const&          r,
                              GiryStar<A, B> const& e1,
                              GiryStar<A, B> const& e2,
                              OpA const&            op_a,
                              OpB const&            op_b) {
    auto [a1, b1] = detail::split_sides(e1);
    auto [a2, b2] = detail::split_sides(e2);
    auto a        = detail::mix_sides(r, a1, a2, op_a);
    auto b        = detail::mix_sides(r, b1, b2, op_b);
    if (a && b) {
      return GiryStar<A, B>::mid(QUnit(Q01(a->mass)), std::move(a->value),
                                 std::move(b->value));
    }
    if (a) {
      return GiryStar<A, B>::left(std::move(a->value));
    }
    return GiryStar<A, B>::right(std::move(b->value));
  }

  template <typename A, typename B>
  ConvexSpace<GiryStar<A, B>> convex_star(ConvexSpace<A> sa,
                                          ConvexSpace<B> sb) {
    return {[sa = std::move(sa), sb = std::move(sb)](
                QUnit const& r, GiryStar<A, B> const& x,
                GiryStar<A, B> const& y) {
      return star_combine(r, x, y, sa, sb);
    }};
  }

  namespace detail {
    template <typename X>
    void check_binary(Dist<TaggedElem<X>> const& w) {
      for (auto const& [e, m] : w) {
        if (e.tag != 1 && e.tag != 2) {
          throw SignatureError("binary phi expects tags 1 and 2, found tag "
                               + std::to_string(e.tag));
        }
      }
    }
  }  // namespace detail

  // phi : D(A + B) -> DA * DB, by the three-way case split on w_1(A).
  template <typename X>
  DistStar<X> phi(Dist<TaggedElem<X>> const& w) {
    detail::check_binary(w);
    SubDist<X> w1 = restrict(w, 1);
    SubDist<X> w2 = restrict(w, 2);
    if (w1.total().is_one()) {
      return DistStar<X>::left(Dist<X>(std::move(w1)));
    }
    if (w2.total().is_one()) {
      return DistStar<X>::right(Dist<X>(std::move(w2)));
    }
    return DistStar<X>::mid(QUnit(w1.total()), normalize(w1), normalize(w2));
  }

  // phi as the convex extension of A + B -> DA + DB -> DA * DB: write w as a
  // convex combination of points and fold the images with star_combine.
  template <typename X>
  DistStar<X> phi_oracle(Dist<TaggedElem<X>> const& w) {
    detail::check_binary(w);
    std::vector<std::pair<Q01, DistStar<X>>> terms;
    for (auto const& [e, m] : w) {
      terms.emplace_back(m, e.tag == 1 ? DistStar<X>::left(dirac(e.atom))
                                       : DistStar<X>::right(dirac(e.atom)));
    }
    auto space = convex_star(free_convex_space<X>(), free_convex_space<X>());
    return convex_combine(terms, space);
  }

  template <typename X>
  Dist<TaggedElem<X>> phi_inv(DistStar<X> const& e) {
    auto inj = [](std::size_t tag) {
      return [tag](X const& x) { return inject(tag, x); };
    };
    using E = DistStar<X>;
    return e.visit(overloaded{
        [&](typename E::Left const& l) { return pushforward(inj(1), l.value); },
        [&](typename E::Mid const& m) {
          return dist_mix(m.weight, pushforward(inj(1), m.left),
                          pushforward(inj(2), m.right));
        },
        [&](typename E::Right const& r) {
          return pushforward(inj(2), r.value);
        }});
  }

  template <typename X>
  using DistNary = NaryStarElem<GiryTricocycloid, Dist<X>>;

  // phi : D(A_1 + ... + A_n) -> DA_1 * ... * DA_n
  template <typename X>
  DistNary<X> nary_phi(Dist<TaggedElem<X>> const& w, std::size_t arity) {
    std::map<std::size_t, detail::MassAccumulator<X>> by_tag;
    std::map<std::size_t, mpq_class>                  totals;
    for (auto const& [e, m] : w) {
      if (e.tag < 1 || e.tag > arity) {
        throw SignatureError("tag " + std::to_string(e.tag)
                             + " out of range for arity "
                             + std::to_string(arity));
      }
      by_tag[e.tag].add(e.atom, m.value());
      totals[e.tag] += m.value();
    }
    typename DistNary<X>::Parts parts;
    for (auto& [tag, acc] : by_tag) {
      Q01 total(totals[tag]);
      parts.emplace(tag, NaryPart<GiryTricocycloid, Dist<X>>{
                             total, normalize(SubDist<X>(acc.take()))});
    }
    return DistNary<X>(std::move(parts));
  }

  template <typename X>
  Dist<TaggedElem<X>> nary_phi_inv(DistNary<X> const& e) {
    detail::MassAccumulator<TaggedElem<X>> acc;
    for (auto const& [tag, p] : e.parts()) {
      for (auto const& [x, m] : p.value) {
        acc.add(inject(tag, x), p.weight.value() * m.value());
      }
    }
    return Dist<TaggedElem<X>>(acc.take());
  }

  // N(w) = sum over tags i with w_i(A_i) > 0 of w_i(A_i) . iota_i(w_i / w_i(A_i))
  template <typename X>
  Dist<TaggedElem<Dist<X>>> hypernorm_jacobs(Dist<TaggedElem<X>> const& w) {
    std::map<std::size_t, typename SubDist<X>::Map> pieces;
    for (auto const& [e, m] : w) {
      pieces[e.tag].emplace(e.atom, m);
    }
    typename Dist<TaggedElem<Dist<X>>>::Map out;
    for (auto& [tag, piece] : pieces) {
      SubDist<X> sub(std::move(piece));
      out.emplace(inject(tag, normalize(sub)), sub.total());
    }
    return Dist<TaggedElem<Dist<X>>>(std::move(out));
  }

}  // namespace hypernorm

#endif  // HYPERNORM_CONVEX_HPP_
