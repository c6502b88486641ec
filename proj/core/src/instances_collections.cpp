// Multiset and powerset instances, with and without the empty collection.
// The instances admitting the empty collection split cartesianly into one
// component per tag; the nonempty ones split into the tags that occur.

#include <map>

#include "hypernorm/error.hpp"
#include "hypernorm/monads.hpp"
#include "instance_support.hpp"

namespace hypernorm {

  namespace {
    void check_tag(std::size_t tag, std::size_t arity) {
      if (tag < 1 || tag > arity) {
        throw SignatureError("tag " + std::to_string(tag)
                             + " out of range for a sum of "
                             + std::to_string(arity));
      }
    }

    // Bags and sets share everything except how points are added.
    struct BagOps {
      using C = Bag<Value>;
      static constexpr ValueKind kind = ValueKind::bag;
      static C const& get(Value const& v) { return v.as_bag(); }
      static Value wrap(C c) { return Value::bag(std::move(c)); }
      static void add(C& c, Value const& x, std::size_t n) { c.add(x, n); }
      static void add_all(C& c, C const& other) { c.add_all(other); }
      template <typename F>
      static void each(C const& c, F&& f) {
        for (auto const& [x, n] : c) {
          f(x, n);
        }
      }
      static std::vector<std::vector<std::size_t>> shapes(std::size_t n,
                                                          std::size_t k) {
        return detail::index_combinations(n, k, true);
      }
      static std::vector<std::size_t> random_shape(std::size_t n,
                                                   std::size_t k,
                                                   std::mt19937_64& rng) {
        return detail::random_multiset(n, k, rng);
      }
    };

    struct SetOps {
      using C = FinSet<Value>;
      static constexpr ValueKind kind = ValueKind::set;
      static C const& get(Value const& v) { return v.as_set(); }
      static Value wrap(C c) { return Value::set(std::move(c)); }
      static void add(C& c, Value const& x, std::size_t) { c.insert(x); }
      static void add_all(C& c, C const& other) { c.insert_all(other); }
      template <typename F>
      static void each(C const& c, F&& f) {
        for (auto const& x : c) {
          f(x, std::size_t{1});
        }
      }
      static std::vector<std::vector<std::size_t>> shapes(std::size_t n,
                                                          std::size_t k) {
        return detail::index_combinations(n, k, false);
      }
      static std::vector<std::size_t> random_shape(std::size_t n,
                                                   std::size_t k,
                                                   std::mt19937_64& rng) {
        return detail::random_subset(n, std::min(k, n), rng);
      }
    };

    template <typename Ops>
    std::map<std::size_t, typename Ops::C> by_tag(Value const&  t,
                                                  std::size_t   arity) {
      std::map<std::size_t, typename Ops::C> parts;
      Ops::each(Ops::get(t), [&](Value const& x, std::size_t n) {
        auto const& te = x.as_tagged();
        check_tag(te.tag, arity);
        Ops::add(parts[te.tag], te.atom, n);
      });
      return parts;
    }

    template <typename Ops>
    typename Ops::C injected(std::size_t tag, typename Ops::C const& c) {
      typename Ops::C out;
      Ops::each(c, [&](Value const& x, std::size_t n) {
        Ops::add(out, Value::tagged(tag, x), n);
      });
      return out;
    }

    template <typename Ops>
    void build_common(MonadInstance& m, bool nonempty) {
      m.value_kind = Ops::kind;
      m.unit = [](Value const& x) {
        typename Ops::C c;
        Ops::add(c, x, 1);
        return Ops::wrap(std::move(c));
      };
      m.fmap = [](ValueMap const& f, Value const& t) {
        typename Ops::C c;
        Ops::each(Ops::get(t),
                  [&](Value const& x, std::size_t n) { Ops::add(c, f(x), n); });
        return Ops::wrap(std::move(c));
      };
      m.join = [](Value const& tt) {
        typename Ops::C c;
        Ops::each(Ops::get(tt), [&](Value const& inner, std::size_t n) {
          for (std::size_t i = 0; i < n; ++i) {
            Ops::add_all(c, Ops::get(inner));
          }
        });
        return Ops::wrap(std::move(c));
      };
      m.validate = [nonempty, name = m.name](Value const& t) {
        if (nonempty && Ops::get(t).empty()) {
          throw SignatureError("instance " + name
                               + " has no empty values");
        }
      };
      std::size_t const min_size = nonempty ? 1 : 0;
      m.enumerate = [min_size](std::vector<Value> const& atoms,
                               ValueBudget const&        b) {
        std::vector<Value> out;
        for (std::size_t k = min_size; k <= b.max_support; ++k) {
          for (auto const& idx : Ops::shapes(atoms.size(), k)) {
            typename Ops::C c;
            for (auto i : idx) {
              Ops::add(c, atoms[i], 1);
            }
            out.push_back(Ops::wrap(std::move(c)));
          }
        }
        return out;
      };
      m.sample = [min_size](std::vector<Value> const& atoms,
                            ValueBudget const& b, std::mt19937_64& rng) {
        std::size_t k = min_size + detail::uniform_index(
                                       b.max_support + 1 - min_size, rng);
        typename Ops::C c;
        for (auto i : Ops::random_shape(atoms.size(), k, rng)) {
          Ops::add(c, atoms[i], 1);
        }
        return Ops::wrap(std::move(c));
      };
      m.shrink = [min_size](Value const& t) {
        std::vector<Value> out;
        auto const&        c = Ops::get(t);
        std::size_t        total = 0;
        Ops::each(c, [&](Value const&, std::size_t n) { total += n; });
        if (total <= min_size) {
          return out;
        }
        Ops::each(c, [&](Value const& drop, std::size_t) {
          typename Ops::C smaller;
          Ops::each(c, [&](Value const& x, std::size_t n) {
            std::size_t keep = x == drop ? n - 1 : n;
            Ops::add(smaller, x, keep);
          });
          out.push_back(Ops::wrap(std::move(smaller)));
        });
        return out;
      };
    }

    // T(A_1 + ... + A_n) = TA_1 x ... x TA_n, every tag present.
    template <typename Ops>
    void build_cartesian(MonadInstance& m) {
      m.tensor_kind = TensorKind::cartesian;
      m.split = [](Value const& t, std::size_t arity) -> TensorValue {
        auto           parts = by_tag<Ops>(t, arity);
        CartesianTuple out;
        for (std::size_t tag = 1; tag <= arity; ++tag) {
          out.components.push_back(Ops::wrap(parts[tag]));
        }
        return out;
      };
      m.merge = [](TensorValue const& tv) {
        auto const* c = std::get_if<CartesianTuple>(&tv);
        if (c == nullptr) {
          throw SignatureError("expected a tuple, got " + tensor_str(tv));
        }
        typename Ops::C out;
        for (std::size_t i = 0; i < c->components.size(); ++i) {
          Ops::add_all(out, injected<Ops>(i + 1, Ops::get(c->components[i])));
        }
        return Ops::wrap(std::move(out));
      };
      // The collection of iota_i(t_i) over all tags i, t_i the (possibly
      // empty) part of t on A_i.
      m.hypernorm_direct = [](Value const& t, std::size_t arity) {
        auto            parts = by_tag<Ops>(t, arity);
        typename Ops::C out;
        for (std::size_t tag = 1; tag <= arity; ++tag) {
          Ops::add(out, Value::tagged(tag, Ops::wrap(parts[tag])), 1);
        }
        return Ops::wrap(std::move(out));
      };
    }

    // A +bar B = A + A x B + B: only the tags that occur.
    template <typename Ops>
    void build_bar(MonadInstance& m) {
      m.tensor_kind = TensorKind::bar_times;
      m.split = [](Value const& t, std::size_t arity) -> TensorValue {
        std::vector<std::pair<std::size_t, Value>> parts;
        for (auto& [tag, c] : by_tag<Ops>(t, arity)) {
          parts.emplace_back(tag, Ops::wrap(std::move(c)));
        }
        return detail::make_trivial_nary(std::move(parts));
      };
      m.merge = [](TensorValue const& tv) {
        auto const* e = std::get_if<TrivialNary>(&tv);
        if (e == nullptr) {
          throw SignatureError("expected a bar tensor value, got "
                               + tensor_str(tv));
        }
        typename Ops::C out;
        for (auto const& [tag, p] : e->parts()) {
          auto const& c = Ops::get(p.value);
          if (c.empty()) {
            throw SignatureError("bar tensor part for tag "
                                 + std::to_string(tag) + " is empty");
          }
          Ops::add_all(out, injected<Ops>(tag, c));
        }
        return Ops::wrap(std::move(out));
      };
      m.hypernorm_direct = [](Value const& t, std::size_t arity) {
        typename Ops::C out;
        for (auto& [tag, c] : by_tag<Ops>(t, arity)) {
          Ops::add(out, Value::tagged(tag, Ops::wrap(std::move(c))), 1);
        }
        return Ops::wrap(std::move(out));
      };
    }
  }  // namespace

  MonadInstance instance_multiset() {
    MonadInstance m;
    m.name        = "multiset";
    m.is_affine   = false;
    m.is_coaffine = false;
    build_common<BagOps>(m, false);
    build_cartesian<BagOps>(m);
    return m;
  }

  MonadInstance instance_ne_multiset() {
    MonadInstance m;
    m.name        = "ne_multiset";
    m.is_affine   = false;
    m.is_coaffine = true;
    build_common<BagOps>(m, true);
    build_bar<BagOps>(m);
    return m;
  }

  MonadInstance instance_powerset() {
    MonadInstance m;
    m.name        = "powerset";
    m.is_affine   = false;
    m.is_coaffine = false;
    build_common<SetOps>(m, false);
    build_cartesian<SetOps>(m);
    return m;
  }

  MonadInstance instance_ne_powerset() {
    MonadInstance m;
    m.name        = "ne_powerset";
    m.is_affine   = true;
    m.is_coaffine = true;
    build_common<SetOps>(m, true);
    build_bar<SetOps>(m);
    return m;
  }

}  // namespace hypernorm
