// The instances whose tensor is the Giry star: distributions,
// multidistributions and finitely additive measures.

#include <map>

#include "hypernorm/convex.hpp"
#include "hypernorm/error.hpp"
#include "hypernorm/expectation.hpp"
#include "hypernorm/monads.hpp"
#include "instance_support.hpp"

namespace hypernorm {

  namespace {
    using detail::MassAccumulator;

    GiryNary const& as_giry(TensorValue const& t) {
      auto const* e = std::get_if<GiryNary>(&t);
      if (e == nullptr) {
        throw SignatureError("expected a Giry-star tensor value, got "
                             + tensor_str(t));
      }
      return *e;
    }

    void check_tag(std::size_t tag, std::size_t arity) {
      if (tag < 1 || tag > arity) {
        throw SignatureError("tag " + std::to_string(tag)
                             + " out of range for a sum of "
                             + std::to_string(arity));
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Distributions
    ////////////////////////////////////////////////////////////////////////

    Dist<TaggedElem<Value>> untag_dist(Dist<Value> const& d) {
      return pushforward([](Value const& v) { return v.as_tagged(); }, d);
    }

    Dist<Value> retag_dist(Dist<TaggedElem<Value>> const& d) {
      return pushforward(
          [](TaggedElem<Value> const& e) {
            return Value::tagged(e.tag, e.atom);
          },
          d);
    }

    std::vector<Value> enumerate_dists(std::vector<Value> const& atoms,
                                       ValueBudget const&        b) {
      std::vector<Value> out;
      for (std::size_t k = 1; k <= std::min(b.max_support, atoms.size());
           ++k) {
        auto weights = detail::weight_vectors(k, b.max_den);
        for (auto const& idx : detail::index_combinations(atoms.size(), k,
                                                          false)) {
          for (auto const& ws : weights) {
            Dist<Value>::Map m;
            for (std::size_t j = 0; j < k; ++j) {
              m.emplace(atoms[idx[j]], ws[j]);
            }
            out.push_back(Value::dist(Dist<Value>(std::move(m))));
          }
        }
      }
      return out;
    }

    Dist<Value> sample_dist(std::vector<Value> const& atoms,
                            ValueBudget const&        b,
                            std::mt19937_64&          rng) {
      std::size_t k = 1 + detail::uniform_index(
                              std::min(b.max_support, atoms.size()), rng);
      auto        idx = detail::random_subset(atoms.size(), k, rng);
      auto        ws  = detail::random_weights(k, b.max_den, rng);
      Dist<Value>::Map m;
      for (std::size_t j = 0; j < k; ++j) {
        m.emplace(atoms[idx[j]], ws[j]);
      }
      return Dist<Value>(std::move(m));
    }

    std::vector<Dist<Value>> shrink_dist(Dist<Value> const& d) {
      std::vector<Dist<Value>> out;
      std::vector<Value>       pts;
      std::vector<Q01>         ws;
      for (auto const& [x, m] : d) {
        pts.push_back(x);
        ws.push_back(m);
      }
      if (pts.size() > 1) {
        for (std::size_t drop = 0; drop < pts.size(); ++drop) {
          std::vector<Q01> rest;
          for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != drop) {
              rest.push_back(ws[j]);
            }
          }
          rest = detail::renormalised(rest);
          Dist<Value>::Map m;
          for (std::size_t j = 0, r = 0; j < pts.size(); ++j) {
            if (j != drop) {
              m.emplace(pts[j], rest[r++]);
            }
          }
          out.emplace_back(std::move(m));
        }
        auto uni = detail::uniform_weights(pts.size());
        if (uni != ws) {
          Dist<Value>::Map m;
          for (std::size_t j = 0; j < pts.size(); ++j) {
            m.emplace(pts[j], uni[j]);
          }
          out.emplace_back(std::move(m));
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Multidistributions
    ////////////////////////////////////////////////////////////////////////

    using Entries = MultiDist<Value>::Entries;

    std::vector<Value> enumerate_multidists(std::vector<Value> const& atoms,
                                            ValueBudget const&        b) {
      std::vector<Value> out;
      for (std::size_t k = 1; k <= b.max_support; ++k) {
        auto weights = detail::weight_vectors(k, b.max_den);
        for (auto const& idx :
             detail::index_combinations(atoms.size(), k, true)) {
          for (auto const& ws : weights) {
            Entries es;
            for (std::size_t j = 0; j < k; ++j) {
              es.push_back({ws[j], atoms[idx[j]]});
            }
            out.push_back(Value::multidist(MultiDist<Value>(std::move(es))));
          }
        }
      }
      return detail::dedupe(std::move(out));
    }

    Value sample_multidist(std::vector<Value> const& atoms,
                           ValueBudget const&        b,
                           std::mt19937_64&          rng) {
      std::size_t k   = 1 + detail::uniform_index(b.max_support, rng);
      auto        idx = detail::random_multiset(atoms.size(), k, rng);
      auto        ws  = detail::random_weights(k, b.max_den, rng);
      Entries     es;
      for (std::size_t j = 0; j < k; ++j) {
        es.push_back({ws[j], atoms[idx[j]]});
      }
      return Value::multidist(MultiDist<Value>(std::move(es)));
    }

    std::vector<Value> shrink_multidist(Value const& v) {
      auto const&        es = v.as_multidist().entries();
      std::vector<Value> out;
      if (es.size() <= 1) {
        return out;
      }
      for (std::size_t drop = 0; drop < es.size(); ++drop) {
        std::vector<Q01> ws;
        for (std::size_t j = 0; j < es.size(); ++j) {
          if (j != drop) {
            ws.push_back(es[j].weight);
          }
        }
        ws = detail::renormalised(ws);
        Entries rest;
        for (std::size_t j = 0, r = 0; j < es.size(); ++j) {
          if (j != drop) {
            rest.push_back({ws[r++], es[j].point});
          }
        }
        out.push_back(Value::multidist(MultiDist<Value>(std::move(rest))));
      }
      auto    uni = detail::uniform_weights(es.size());
      Entries even;
      bool    changed = false;
      for (std::size_t j = 0; j < es.size(); ++j) {
        changed = changed || es[j].weight != uni[j];
        even.push_back({uni[j], es[j].point});
      }
      if (changed) {
        out.push_back(Value::multidist(MultiDist<Value>(std::move(even))));
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Finitely additive measures
    ////////////////////////////////////////////////////////////////////////

    FinAddProb<TaggedElem<Value>> untag_measure(FinAddProb<Value> const& w) {
      return ea_pushforward([](Value const& v) { return v.as_tagged(); }, w);
    }

    FinAddProb<Value> retag_measure(FinAddProb<TaggedElem<Value>> const& w) {
      return ea_pushforward(
          [](TaggedElem<Value> const& e) {
            return Value::tagged(e.tag, e.atom);
          },
          w);
    }
  }  // namespace

  MonadInstance instance_dist() {
    MonadInstance m;
    m.name        = "dist";
    m.tensor_kind = TensorKind::giry_star;
    m.is_affine   = true;
    m.is_coaffine = true;
    m.value_kind  = ValueKind::dist;

    m.unit = [](Value const& x) { return Value::dist(dirac(x)); };
    m.fmap = [](ValueMap const& f, Value const& t) {
      return Value::dist(pushforward(f, t.as_dist()));
    };
    m.join = [](Value const& tt) {
      MassAccumulator<Value> acc;
      for (auto const& [inner, l] : tt.as_dist()) {
        for (auto const& [x, w] : inner.as_dist()) {
          acc.add(x, l.value() * w.value());
        }
      }
      return Value::dist(Dist<Value>(acc.take()));
    };
    m.split = [](Value const& t, std::size_t arity) -> TensorValue {
      auto w = untag_dist(t.as_dist());
      for (auto const& [e, p] : w) {
        check_tag(e.tag, arity);
      }
      return nary_map([](Dist<Value> const& d) { return Value::dist(d); },
                      nary_phi(w, arity));
    };
    m.merge = [](TensorValue const& tv) {
      auto parts = nary_map([](Value const& v) { return v.as_dist(); },
                            as_giry(tv));
      return Value::dist(retag_dist(nary_phi_inv(parts)));
    };
    m.hypernorm_direct = [](Value const& t, std::size_t arity) {
      auto w = untag_dist(t.as_dist());
      for (auto const& [e, p] : w) {
        check_tag(e.tag, arity);
      }
      auto n = hypernorm_jacobs(w);
      return Value::dist(pushforward(
          [](TaggedElem<Dist<Value>> const& e) {
            return Value::tagged(e.tag, Value::dist(e.atom));
          },
          n));
    };
    m.validate = [](Value const& t) { (void)t.as_dist(); };
    m.enumerate = enumerate_dists;
    m.sample = [](std::vector<Value> const& atoms, ValueBudget const& b,
                  std::mt19937_64& rng) {
      return Value::dist(sample_dist(atoms, b, rng));
    };
    m.shrink = [](Value const& v) {
      std::vector<Value> out;
      for (auto& d : shrink_dist(v.as_dist())) {
        out.push_back(Value::dist(std::move(d)));
      }
      return out;
    };
    return m;
  }

  MonadInstance instance_multidist() {
    MonadInstance m;
    m.name        = "multidist";
    m.tensor_kind = TensorKind::giry_star;
    m.is_affine   = false;
    m.is_coaffine = true;
    m.value_kind  = ValueKind::multidist;

    m.unit = [](Value const& x) { return Value::multidist(multi_unit(x)); };
    m.fmap = [](ValueMap const& f, Value const& t) {
      Entries es;
      for (auto const& e : t.as_multidist()) {
        es.push_back({e.weight, f(e.point)});
      }
      return Value::multidist(MultiDist<Value>(std::move(es)));
    };
    m.join = [](Value const& tt) {
      Entries es;
      for (auto const& outer : tt.as_multidist()) {
        for (auto const& inner : outer.point.as_multidist()) {
          es.push_back({q_mul(outer.weight, inner.weight), inner.point});
        }
      }
      return Value::multidist(MultiDist<Value>(std::move(es)));
    };
    m.split = [](Value const& t, std::size_t arity) -> TensorValue {
      std::map<std::size_t, mpq_class> totals;
      for (auto const& e : t.as_multidist()) {
        auto const& te = e.point.as_tagged();
        check_tag(te.tag, arity);
        totals[te.tag] += e.weight.value();
      }
      std::map<std::size_t, Entries> parts;
      for (auto const& e : t.as_multidist()) {
        auto const& te = e.point.as_tagged();
        parts[te.tag].push_back(
            {Q01(mpq_class(e.weight.value() / totals[te.tag])), te.atom});
      }
      GiryNary::Parts out;
      for (auto& [tag, es] : parts) {
        out.emplace(tag, NaryPart<GiryTricocycloid, Value>{
                             Q01(totals[tag]),
                             Value::multidist(MultiDist<Value>(std::move(es)))});
      }
      return GiryNary(std::move(out));
    };
    m.merge = [](TensorValue const& tv) {
      Entries es;
      for (auto const& [tag, p] : as_giry(tv).parts()) {
        for (auto const& e : p.value.as_multidist()) {
          es.push_back({q_mul(p.weight, e.weight), Value::tagged(tag, e.point)});
        }
      }
      return Value::multidist(MultiDist<Value>(std::move(es)));
    };
    // sum over present tags i of r_i . iota_i(sum_j (r_ij / r_i) x_ij), where
    // r_i = sum_j r_ij.
    m.hypernorm_direct = [](Value const& t, std::size_t arity) {
      std::map<std::size_t, std::vector<MultiEntry<Value>>> by_tag;
      for (auto const& e : t.as_multidist()) {
        auto const& te = e.point.as_tagged();
        check_tag(te.tag, arity);
        by_tag[te.tag].push_back({e.weight, te.atom});
      }
      Entries out;
      for (auto const& [tag, es] : by_tag) {
        mpq_class r;
        for (auto const& e : es) {
          r += e.weight.value();
        }
        Entries inner;
        for (auto const& e : es) {
          inner.push_back({Q01(mpq_class(e.weight.value() / r)), e.point});
        }
        out.push_back(
            {Q01(r), Value::tagged(tag, Value::multidist(
                                            MultiDist<Value>(std::move(inner))))});
      }
      return Value::multidist(MultiDist<Value>(std::move(out)));
    };
    m.validate  = [](Value const& t) { (void)t.as_multidist(); };
    m.enumerate = enumerate_multidists;
    m.sample    = sample_multidist;
    m.shrink    = shrink_multidist;
    return m;
  }

  MonadInstance instance_expectation() {
    MonadInstance m;
    m.name        = "expectation";
    m.tensor_kind = TensorKind::giry_star;
    m.is_affine   = true;
    m.is_coaffine = true;
    m.value_kind  = ValueKind::finadd;

    m.unit = [](Value const& x) { return Value::finadd(ea_unit(x)); };
    m.fmap = [](ValueMap const& f, Value const& t) {
      return Value::finadd(ea_pushforward(f, t.as_finadd()));
    };
    m.join = [](Value const& tt) {
      FinAddProb<FinAddProb<Value>>::Map outer;
      for (auto const& [tau, w] : tt.as_finadd().singleton_masses()) {
        outer.emplace(tau.as_finadd(), w);
      }
      return Value::finadd(ea_join(FinAddProb<FinAddProb<Value>>(outer)));
    };
    m.split = [](Value const& t, std::size_t arity) -> TensorValue {
      return nary_map(
          [](FinAddProb<Value> const& w) { return Value::finadd(w); },
          ea_split(untag_measure(t.as_finadd()), arity));
    };
    m.merge = [](TensorValue const& tv) {
      auto parts = nary_map([](Value const& v) { return v.as_finadd(); },
                            as_giry(tv));
      return Value::finadd(retag_measure(ea_merge(parts)));
    };
    // sum over tags i with omega(A_i) > 0 of
    //   omega(A_i) . iota_i(C -> omega(iota_i C) / omega(A_i))
    m.hypernorm_direct = [](Value const& t, std::size_t arity) {
      auto const&                                 w = t.as_finadd();
      std::map<std::size_t, std::vector<Value>> atoms;
      for (auto const& p : w.support()) {
        auto const& te = p.as_tagged();
        check_tag(te.tag, arity);
        atoms[te.tag].push_back(te.atom);
      }
      FinAddProb<Value>::Map out;
      for (auto const& [tag, xs] : atoms) {
        std::size_t const i = tag;
        Q01 mass = w.measure_where([&](Value const& v) {
          return v.as_tagged().tag == i;
        });
        FinAddProb<Value>::Map part;
        for (auto const& x : xs) {
          part.emplace(x, q_div(w.measure({Value::tagged(tag, x)}), mass));
        }
        out.emplace(Value::tagged(tag, Value::finadd(FinAddProb<Value>(part))),
                    mass);
      }
      return Value::finadd(FinAddProb<Value>(std::move(out)));
    };
    m.validate = [](Value const& t) { (void)t.as_finadd(); };
    m.enumerate = [](std::vector<Value> const& atoms, ValueBudget const& b) {
      std::vector<Value> out;
      for (auto const& v : enumerate_dists(atoms, b)) {
        out.push_back(Value::finadd(ea_from_dist(v.as_dist())));
      }
      return out;
    };
    m.sample = [](std::vector<Value> const& atoms, ValueBudget const& b,
                  std::mt19937_64& rng) {
      return Value::finadd(ea_from_dist(sample_dist(atoms, b, rng)));
    };
    m.shrink = [](Value const& v) {
      std::vector<Value> out;
      for (auto& d : shrink_dist(ea_to_dist(v.as_finadd()))) {
        out.push_back(Value::finadd(ea_from_dist(d)));
      }
      return out;
    };
    return m;
  }

}  // namespace hypernorm
