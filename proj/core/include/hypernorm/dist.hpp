#ifndef HYPERNORM_DIST_HPP_
#define HYPERNORM_DIST_HPP_

// Finitely supported (sub-)probability distributions with exact weights, and
// the finite Giry monad structure on them.

#include <compare>
#include <cstddef>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "hypernorm/error.hpp"
#include "hypernorm/rational.hpp"
#include "hypernorm/tagged_sum.hpp"

namespace hypernorm {

  namespace detail {
    // Accumulates exact masses; zero entries are dropped on extraction.
    template <typename X>
    class MassAccumulator {
     public:
      void add(X const& x, mpq_class const& w) {
        if (sgn(w) == 0) {
          return;
        }
        auto it = acc_.find(x);
        if (it == acc_.end()) {
          acc_.emplace(x, w);
        } else {
          it->second += w;
        }
      }

      std::map<X, Q01> take() {
        std::map<X, Q01> out;
        for (auto& [x, w] : acc_) {
          if (sgn(w) != 0) {
            out.emplace_hint(out.end(), x, Q01(w));
          }
        }
        return out;
      }

     private:
      std::map<X, mpq_class> acc_;
    };
  }  // namespace detail

  // A finitely supported function X -> [0,1] with total mass <= 1. Only
  // strictly positive weights are stored, so equality is structural.
  template <typename X>
  class SubDist {
   public:
    using Map            = std::map<X, Q01>;
    using const_iterator = typename Map::const_iterator;

    SubDist() = default;

    explicit SubDist(Map mass) : mass_(std::move(mass)) {
      mpq_class total;
      for (auto it = mass_.begin(); it != mass_.end();) {
        if (it->second.is_zero()) {
          it = mass_.erase(it);
        } else {
          total += it->second.value();
          ++it;
        }
      }
      if (cmp(total, 1) > 0) {
        throw RangeError("sub-distribution has total mass " + total.get_str()
                         + " > 1");
      }
      total_ = Q01(total);
    }

    Map const& masses() const noexcept { return mass_; }
    Q01 const& total() const noexcept { return total_; }

    Q01 at(X const& x) const {
      auto it = mass_.find(x);
      return it == mass_.end() ? Q01::zero() : it->second;
    }

    std::vector<X> support() const {
      std::vector<X> out;
      out.reserve(mass_.size());
      for (auto const& kv : mass_) {
        out.push_back(kv.first);
      }
      return out;
    }

    std::size_t    size() const noexcept { return mass_.size(); }
    bool           empty() const noexcept { return mass_.empty(); }
    const_iterator begin() const noexcept { return mass_.begin(); }
    const_iterator end() const noexcept { return mass_.end(); }

    friend bool operator==(SubDist const& a, SubDist const& b) {
      return a.mass_ == b.mass_;
    }
    friend auto operator<=>(SubDist const& a, SubDist const& b) {
      return a.mass_ <=> b.mass_;
    }

   private:
    Map mass_;
    Q01 total_;
  };

  // A finitely supported probability distribution: total mass exactly 1.
  template <typename X>
  class Dist : public SubDist<X> {
   public:
    using typename SubDist<X>::Map;

    explicit Dist(Map mass) : SubDist<X>(std::move(mass)) {
      check_total();
    }
    explicit Dist(SubDist<X> sub) : SubDist<X>(std::move(sub)) {
      check_total();
    }

    friend bool operator==(Dist const& a, Dist const& b) {
      return a.masses() == b.masses();
    }
    friend auto operator<=>(Dist const& a, Dist const& b) {
      return a.masses() <=> b.masses();
    }

   private:
    void check_total() const {
      if (!this->total().is_one()) {
        throw RangeError("distribution has total mass " + this->total().str()
                         + ", expected 1");
      }
    }
  };

  // eta: x -> 1.x
  template <typename X>
  Dist<X> dirac(X x) {
    return Dist<X>(typename Dist<X>::Map{{std::move(x), Q01::one()}});
  }

  template <typename X>
  Q01 total_mass(SubDist<X> const& w) {
    return w.total();
  }

  // f_!(w)(y) = w(f^-1(y))
  template <typename X, typename F>
  auto pushforward(F&& f, SubDist<X> const& w) {
    using Y = std::decay_t<std::invoke_result_t<F&, X const&>>;
    detail::MassAccumulator<Y> acc;
    for (auto const& [x, m] : w) {
      acc.add(f(x), m.value());
    }
    return SubDist<Y>(acc.take());
  }

  template <typename X, typename F>
  auto pushforward(F&& f, Dist<X> const& w) {
    using Y = std::decay_t<std::invoke_result_t<F&, X const&>>;
    return Dist<Y>(pushforward(f, static_cast<SubDist<X> const&>(w)));
  }

  // mu: sum_i l_i . w_i -> (x -> sum_i l_i w_i(x))
  template <typename X>
  Dist<X> dist_join(Dist<Dist<X>> const& outer) {
    detail::MassAccumulator<X> acc;
    for (auto const& [inner, l] : outer) {
      for (auto const& [x, m] : inner) {
        acc.add(x, l.value() * m.value());
      }
    }
    return Dist<X>(acc.take());
  }

  // The free convex-space operation on DX: r.a + r*.b, pointwise.
  template <typename X>
  Dist<X> dist_mix(QUnit const& r, Dist<X> const& a, Dist<X> const& b) {
    mpq_class const& rv    = r.value();
    mpq_class        rstar = 1 - rv;
    typename Dist<X>::Map out;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        out.emplace_hint(out.end(), ia->first, Q01(rv * ia->second.value()));
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        out.emplace_hint(out.end(), ib->first,
                         Q01(rstar * ib->second.value()));
        ++ib;
      } else {
        out.emplace_hint(
            out.end(), ia->first,
            Q01(rv * ia->second.value() + rstar * ib->second.value()));
        ++ia;
        ++ib;
      }
    }
    return Dist<X>(std::move(out));
  }

  // w_i(x) = w(iota_i(x))
  template <typename X>
  SubDist<X> restrict(SubDist<TaggedElem<X>> const& w, std::size_t tag) {
    typename SubDist<X>::Map out;
    for (auto const& [e, m] : w) {
      if (e.tag == tag) {
        out.emplace_hint(out.end(), e.atom, m);
      }
    }
    return SubDist<X>(std::move(out));
  }

  // w / w(X); throws ZeroMassError on the zero sub-distribution.
  template <typename X>
  Dist<X> normalize(SubDist<X> const& w) {
    if (w.total().is_zero()) {
      throw ZeroMassError();
    }
    typename Dist<X>::Map out;
    for (auto const& [x, m] : w) {
      out.emplace_hint(out.end(), x,
                       Q01(mpq_class(m.value() / w.total().value())));
    }
    return Dist<X>(std::move(out));
  }

  // Evaluate a formal convex combination sum_i r_i . x_i in a convex space
  // given by its binary operation op(r, a, b) = r.a + r*.b. Terms are folded
  // left to right.
  template <typename X, typename Op>
  X convex_combine(std::vector<std::pair<Q01, X>> const& terms, Op&& op) {
    if (terms.empty()) {
      throw RangeError("convex combination of no terms");
    }
    mpq_class total;
    for (auto const& [w, x] : terms) {
      if (w.is_zero()) {
        throw RangeError("convex combination with a zero weight");
      }
      total += w.value();
    }
    if (cmp(total, 1) != 0) {
      throw RangeError("convex combination weights sum to " + total.get_str());
    }
    X         acc  = terms.front().second;
    mpq_class mass = terms.front().first.value();
    for (std::size_t i = 1; i < terms.size(); ++i) {
      mpq_class next = mass + terms[i].first.value();
      acc  = op(QUnit(Q01(mpq_class(mass / next))), acc, terms[i].second);
      mass = next;
    }
    return acc;
  }

}  // namespace hypernorm

#endif  // HYPERNORM_DIST_HPP_
