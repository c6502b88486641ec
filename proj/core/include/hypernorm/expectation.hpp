#ifndef HYPERNORM_EXPECTATION_HPP_
#define HYPERNORM_EXPECTATION_HPP_

// Finitely additive probability measures on finite carriers. A measure is
// stored by its singleton masses; every other quantity (the measure of a
// subset, integrals, the monad structure) is computed from measures of sets.

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hypernorm/dist.hpp"
#include "hypernorm/star.hpp"
#include "hypernorm/tagged_sum.hpp"
#include "hypernorm/tricocycloid.hpp"

namespace hypernorm {

  template <typename X>
  class FinAddProb {
   public:
    using Map = typename Dist<X>::Map;

    explicit FinAddProb(Map singleton_masses)
        : masses_(std::move(singleton_masses)) {}
    explicit FinAddProb(Dist<X> masses) : masses_(std::move(masses)) {}

    Map const& singleton_masses() const noexcept { return masses_.masses(); }
    std::vector<X> support() const { return masses_.support(); }

    // omega(U) for U given by a membership test.
    template <typename Pred>
    Q01 measure_where(Pred&& in_u) const {
      mpq_class total;
      for (auto const& [x, m] : masses_) {
        if (in_u(x)) {
          total += m.value();
        }
      }
      return Q01(total);
    }

    Q01 measure(std::set<X> const& u) const {
      return measure_where([&](X const& x) { return u.count(x) != 0; });
    }

    friend bool operator==(FinAddProb const& a, FinAddProb const& b) {
      return a.masses_ == b.masses_;
    }
    friend auto operator<=>(FinAddProb const& a, FinAddProb const& b) {
      return a.masses_ <=> b.masses_;
    }

   private:
    Dist<X> masses_;
  };

  template <typename X>
  Q01 ea_measure(FinAddProb<X> const& w, std::set<X> const& u) {
    return w.measure(u);
  }

  // The Dirac measure at x: U -> [x in U].
  template <typename X>
  FinAddProb<X> ea_unit(X x) {
    return FinAddProb<X>(dirac(std::move(x)));
  }

  // sum_i r_i omega(f^-1(r_i)) over the finitely many values r_i of f.
  template <typename X, typename F>
  Q01 ea_integrate(FinAddProb<X> const& w, F&& f) {
    std::map<Q01, std::set<X>> level_sets;
    for (auto const& x : w.support()) {
      level_sets[f(x)].insert(x);
    }
    mpq_class total;
    for (auto const& [r, pre] : level_sets) {
      total += r.value() * w.measure(pre).value();
    }
    return Q01(total);
  }

  // (Ef)(omega)(V) = omega(f^-1(V))
  template <typename X, typename F>
  auto ea_pushforward(F&& f, FinAddProb<X> const& w) {
    using Y = std::decay_t<std::invoke_result_t<F&, X const&>>;
    std::map<Y, std::set<X>> fibres;
    for (auto const& x : w.support()) {
      fibres[f(x)].insert(x);
    }
    typename FinAddProb<Y>::Map out;
    for (auto const& [y, pre] : fibres) {
      out.emplace_hint(out.end(), y, w.measure(pre));
    }
    return FinAddProb<Y>(std::move(out));
  }

  // mu(Omega)(U) = integral of tau(U) d Omega(tau), evaluated on singletons.
  template <typename X>
  FinAddProb<X> ea_join(FinAddProb<FinAddProb<X>> const& outer) {
    std::set<X> points;
    for (auto const& tau : outer.support()) {
      for (auto const& x : tau.support()) {
        points.insert(x);
      }
    }
    typename FinAddProb<X>::Map out;
    for (auto const& x : points) {
      std::set<X> u{x};
      Q01         m = ea_integrate(
          outer, [&](FinAddProb<X> const& tau) { return tau.measure(u); });
      if (!m.is_zero()) {
        out.emplace_hint(out.end(), x, m);
      }
    }
    return FinAddProb<X>(std::move(out));
  }

  template <typename X>
  using EaNary = NaryStarElem<GiryTricocycloid, FinAddProb<X>>;

  // h(r_1..r_n, omega_1..omega_n)(C) = sum_i r_i omega_i(C cap A_i)
  template <typename X>
  Q01 ea_merged_measure(EaNary<X> const& e, std::set<TaggedElem<X>> const& c) {
    mpq_class total;
    for (auto const& [tag, p] : e.parts()) {
      Q01 inner = p.value.measure_where([&](X const& x) {
        return c.count(TaggedElem<X>{tag, x}) != 0;
      });
      total += p.weight.value() * inner.value();
    }
    return Q01(total);
  }

  // The n-ary form of the copairing <E iota_1, h, E iota_2>.
  template <typename X>
  FinAddProb<TaggedElem<X>> ea_merge(EaNary<X> const& e) {
    typename FinAddProb<TaggedElem<X>>::Map out;
    for (auto const& [tag, p] : e.parts()) {
      for (auto const& x : p.value.support()) {
        TaggedElem<X> point{tag, x};
        out.emplace(point, ea_merged_measure(e, {point}));
      }
    }
    return FinAddProb<TaggedElem<X>>(std::move(out));
  }

  // Inverse of ea_merge: the weight of tag i is omega(A_i), and its part is
  // C -> omega(iota_i C) / omega(A_i).
  template <typename X>
  EaNary<X> ea_split(FinAddProb<TaggedElem<X>> const& w, std::size_t arity) {
    typename EaNary<X>::Parts parts;
    for (std::size_t tag = 1; tag <= arity; ++tag) {
      Q01 mass = w.measure_where(
          [&](TaggedElem<X> const& e) { return e.tag == tag; });
      if (mass.is_zero()) {
        continue;
      }
      typename FinAddProb<X>::Map part;
      for (auto const& e : w.support()) {
        if (e.tag == tag) {
          Q01 m = w.measure({e});
          part.emplace(e.atom, q_div(m, mass));
        }
      }
      parts.emplace(tag, NaryPart<GiryTricocycloid, FinAddProb<X>>{
                             mass, FinAddProb<X>(std::move(part))});
    }
    for (auto const& e : w.support()) {
      if (e.tag < 1 || e.tag > arity) {
        throw SignatureError("tag " + std::to_string(e.tag)
                             + " out of range for arity "
                             + std::to_string(arity));
      }
    }
    return EaNary<X>(std::move(parts));
  }

  // The finite-carrier isomorphism E X = D X.
  template <typename X>
  Dist<X> ea_to_dist(FinAddProb<X> const& w) {
    typename Dist<X>::Map out;
    for (auto const& x : w.support()) {
      out.emplace_hint(out.end(), x, w.measure({x}));
    }
    return Dist<X>(std::move(out));
  }

  template <typename X>
  FinAddProb<X> ea_from_dist(Dist<X> const& d) {
    return FinAddProb<X>(d);
  }

}  // namespace hypernorm

#endif  // HYPERNORM_EXPECTATION_HPP_
