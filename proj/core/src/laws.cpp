#include "hypernorm/laws.hpp"

#include <algorithm>
#include <set>

#include "hypernorm/error.hpp"
#include "instance_support.hpp"

namespace hypernorm {

  namespace {
    struct LawEntry {
      LawId            id;
      std::string_view name;
    };

    constexpr LawEntry kLaws[] = {
        {LawId::monad_left_unit, "monad.left_unit"},
        {LawId::monad_right_unit, "monad.right_unit"},
        {LawId::monad_assoc, "monad.assoc"},
        {LawId::iso_split_merge, "iso.split_merge"},
        {LawId::convex_axioms, "convex.axioms"},
        {LawId::star_pentagon, "star.pentagon"},
        {LawId::star_hexagon, "star.hexagon"},
        {LawId::tricocycloid_axiom, "tricocycloid.axiom"},
        {LawId::tricocycloid_symmetry, "tricocycloid.symmetry"},
        {LawId::phi_matches_oracle, "phi.prop1_oracle"},
        {LawId::hyper_direct_formula, "hyper.prop3_composite"},
        {LawId::hyper_left_inverse, "hyper.left_inverse"},
        {LawId::hyper_idempotent, "hyper.idempotent"},
        {LawId::hyper_natural, "hyper.natural"},
        {LawId::hyper_kleisli_natural, "hyper.kleisli_natural"},
        {LawId::hyper_destroy_output, "hyper.destroy_output"},
        {LawId::hyper_trivial_input, "hyper.trivial_input"},
        {LawId::diagonal_idempotent, "diagonal.idempotent"},
        {LawId::expectation_d_iso, "expectation.d_iso"},
    };

    std::uint64_t fnv1a(std::string_view s) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    // k items spread evenly over the list, always including the first and
    // the last.
    std::vector<Value> spread(std::vector<Value> const& xs, std::size_t k) {
      if (xs.size() <= k) {
        return xs;
      }
      std::vector<Value> out;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(xs[i * (xs.size() - 1) / (k - 1)]);
      }
      return out;
    }

    std::vector<Value> atom_values(Carrier const& c) {
      std::vector<Value> out;
      for (auto const& a : c.atoms()) {
        out.push_back(Value::atom(a));
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Generic counterexample search
    ////////////////////////////////////////////////////////////////////////

    template <typename Case>
    struct Search {
      // Calls visit on each exhaustive case until it returns false.
      std::function<void(std::function<bool(Case const&)> const&)> exhaustive;
      std::function<Case(std::mt19937_64&)>                         random;
      // nullopt when the diagram commutes on the case.
      std::function<std::optional<json>(Case const&)> check;
      std::function<std::vector<Case>(Case const&)>   shrink;
    };

    struct SearchResult {
      std::size_t         cases = 0;
      std::optional<json> counterexample;
    };

    template <typename Case>
    std::optional<json> minimise(Search<Case> const& s,
                                 Case                c,
                                 json                witness) {
      if (!s.shrink) {
        return witness;
      }
      for (int round = 0; round < 64; ++round) {
        bool improved = false;
        for (auto const& smaller : s.shrink(c)) {
          if (auto w = s.check(smaller)) {
            c        = smaller;
            witness  = *w;
            improved = true;
            break;
          }
        }
        if (!improved) {
          break;
        }
      }
      return witness;
    }

    template <typename Case>
    SearchResult run_search(Search<Case> const& s,
                            std::size_t         random_cases,
                            std::mt19937_64&    rng) {
      SearchResult res;
      if (s.exhaustive) {
        s.exhaustive([&](Case const& c) {
          ++res.cases;
          if (auto w = s.check(c)) {
            res.counterexample = minimise(s, c, *w);
            return false;
          }
          return true;
        });
      }
      if (res.counterexample || !s.random) {
        return res;
      }
      for (std::size_t i = 0; i < random_cases; ++i) {
        Case c = s.random(rng);
        ++res.cases;
        if (auto w = s.check(c)) {
          res.counterexample = minimise(s, c, *w);
          break;
        }
      }
      return res;
    }

    std::optional<json> compare(Value const& lhs, Value const& rhs,
                                json witness) {
      if (lhs == rhs) {
        return std::nullopt;
      }
      witness["lhs"] = value_to_json(lhs);
      witness["rhs"] = value_to_json(rhs);
      return witness;
    }

    ////////////////////////////////////////////////////////////////////////
    // Input families
    ////////////////////////////////////////////////////////////////////////

    struct SumCase {
      SumSignature sig;
      Value        t;
    };

    struct MapCase {
      SumSignature sig;
      Value        t;
      TagMaps      maps;
    };

    struct TrivialCase {
      SumSignature sig;
      std::size_t  tag;
      Value        u;
    };

    struct MonadCase {
      Value t;
    };

    struct TensorCase {
      SumSignature sig;
      TensorValue  tv;
    };

    struct DiagonalCase {
      Value t;
      QUnit r;
    };

    class Harness {
     public:
      Harness(MonadInstance const& m, Budget const& b)
          : m_(m),
            b_(b),
            exhaustive_{b.exhaustive_support, b.weight_denominator_bound},
            random_{b.max_carrier_size + 1, b.weight_denominator_bound},
            sigs_(budget_signatures(b)) {}

      json sig_json(SumSignature const& sig) const {
        return signature_to_json(sig);
      }

      Value N(Value const& t, std::size_t n) const {
        return hypernorm_generic(m_, t, n);
      }

      Search<SumCase> sum_search(
          std::function<std::optional<json>(SumCase const&)> check) const {
        Search<SumCase> s;
        s.exhaustive = [this](auto const& visit) {
          for (auto const& sig : sigs_) {
            for (auto const& t : m_.enumerate(sum_atoms(sig), exhaustive_)) {
              if (!visit(SumCase{sig, t})) {
                return;
              }
            }
          }
        };
        s.random = [this](std::mt19937_64& rng) {
          SumSignature sig = random_signature(b_, rng);
          return SumCase{sig, m_.sample(sum_atoms(sig), random_, rng)};
        };
        s.check  = std::move(check);
        s.shrink = [this](SumCase const& c) {
          std::vector<SumCase> out;
          for (auto& t : m_.shrink(c.t)) {
            out.push_back({c.sig, std::move(t)});
          }
          return out;
        };
        return s;
      }

      json sum_witness(SumCase const& c) const {
        return json{{"signature", sig_json(c.sig)},
                    {"input", value_to_json(c.t)}};
      }

      Search<MapCase> map_search(
          bool                                               kleisli,
          std::function<std::optional<json>(MapCase const&)> check) const {
        std::size_t const per_sig = 6;
        auto gen = [this, kleisli, per_sig](SumSignature const& sig) {
          return kleisli ? kleisli_generator(b_, sig, m_, per_sig)
                         : plain_map_generator(b_, sig, per_sig);
        };
        Search<MapCase> s;
        s.exhaustive = [this, gen](auto const& visit) {
          for (auto const& sig : sigs_) {
            auto maps = gen(sig);
            for (auto const& t : m_.enumerate(sum_atoms(sig), exhaustive_)) {
              for (auto const& f : maps) {
                if (!visit(MapCase{sig, t, f})) {
                  return;
                }
              }
            }
          }
        };
        s.random = [this, gen](std::mt19937_64& rng) {
          SumSignature sig  = random_signature(b_, rng);
          auto         maps = gen(sig);
          Value        t    = m_.sample(sum_atoms(sig), random_, rng);
          return MapCase{sig, t,
                         maps[detail::uniform_index(maps.size(), rng)]};
        };
        s.check  = std::move(check);
        s.shrink = [this](MapCase const& c) {
          std::vector<MapCase> out;
          for (auto& t : m_.shrink(c.t)) {
            out.push_back({c.sig, std::move(t), c.maps});
          }
          return out;
        };
        return s;
      }

      json map_witness(MapCase const& c) const {
        return json{{"signature", sig_json(c.sig)},
                    {"input", value_to_json(c.t)},
                    {"maps", c.maps.to_json()}};
      }

      // Values of TA_i with the units eta(a) listed first.
      std::vector<Value> units_first(Carrier const& c) const {
        std::vector<Value> out;
        for (auto const& a : atom_values(c)) {
          out.push_back(m_.unit(a));
        }
        for (auto& v : m_.enumerate(atom_values(c), exhaustive_)) {
          out.push_back(std::move(v));
        }
        return detail::dedupe(std::move(out));
      }

      Search<TrivialCase> trivial_search(
          std::function<std::optional<json>(TrivialCase const&)> check)
          const {
        Search<TrivialCase> s;
        s.exhaustive = [this](auto const& visit) {
          for (auto const& sig : sigs_) {
            for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
              for (auto const& u : units_first(sig.component(tag))) {
                if (!visit(TrivialCase{sig, tag, u})) {
                  return;
                }
              }
            }
          }
        };
        s.random = [this](std::mt19937_64& rng) {
          SumSignature sig = random_signature(b_, rng);
          std::size_t  tag = 1 + detail::uniform_index(sig.arity(), rng);
          return TrivialCase{
              sig, tag,
              m_.sample(atom_values(sig.component(tag)), random_, rng)};
        };
        s.check  = std::move(check);
        // A unit eta(a) is reported as found: it is the canonical witness
        // even when the empty value also fails.
        s.shrink = [this](TrivialCase const& c) {
          std::vector<TrivialCase> out;
          for (auto const& a : atom_values(c.sig.component(c.tag))) {
            if (m_.unit(a) == c.u) {
              return out;
            }
          }
          for (auto& u : m_.shrink(c.u)) {
            out.push_back({c.sig, c.tag, std::move(u)});
          }
          return out;
        };
        return s;
      }

      // X, TX, TTX and TTTX over a carrier of max_carrier_size atoms. The
      // inner layers are thinned so the outer enumerations stay small.
      std::vector<Value> layer(std::size_t depth) const {
        std::vector<Value> xs
            = atom_values(letters_carrier("X", b_.max_carrier_size));
        for (std::size_t d = 0; d < depth; ++d) {
          if (d > 0) {
            xs = spread(xs, d == 1 ? 6 : 5);
          }
          xs = m_.enumerate(xs, exhaustive_);
        }
        return xs;
      }

      Value random_layer(std::size_t depth, std::mt19937_64& rng) const {
        std::vector<Value> xs
            = atom_values(letters_carrier("X", b_.max_carrier_size));
        ValueBudget small{2, b_.weight_denominator_bound};
        for (std::size_t d = 0; d + 1 < depth; ++d) {
          std::vector<Value> next;
          for (int k = 0; k < 3; ++k) {
            next.push_back(m_.sample(xs, small, rng));
          }
          xs = detail::dedupe(std::move(next));
        }
        return m_.sample(xs, depth == 1 ? random_ : small, rng);
      }

      Search<MonadCase> monad_search(
          std::size_t                                          depth,
          std::function<std::optional<json>(MonadCase const&)> check) const {
        Search<MonadCase> s;
        s.exhaustive = [this, depth](auto const& visit) {
          for (auto const& t : layer(depth)) {
            if (!visit(MonadCase{t})) {
              return;
            }
          }
        };
        s.random = [this, depth](std::mt19937_64& rng) {
          return MonadCase{random_layer(depth, rng)};
        };
        s.check  = std::move(check);
        s.shrink = [this](MonadCase const& c) {
          std::vector<MonadCase> out;
          for (auto& t : m_.shrink(c.t)) {
            out.push_back({std::move(t)});
          }
          return out;
        };
        return s;
      }

      std::vector<TensorValue> tensors(SumSignature const& sig) const {
        std::size_t const              n = sig.arity();
        std::vector<std::vector<Value>> comps;
        for (std::size_t tag = 1; tag <= n; ++tag) {
          comps.push_back(
              spread(m_.enumerate(atom_values(sig.component(tag)), exhaustive_),
                     3));
        }
        std::vector<TensorValue> out;
        if (m_.tensor_kind == TensorKind::cartesian) {
          for (auto const& idx : product(comps, {})) {
            CartesianTuple c;
            for (std::size_t i = 0; i < n; ++i) {
              c.components.push_back(comps[i][idx[i]]);
            }
            out.emplace_back(std::move(c));
          }
          return out;
        }
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
          std::vector<std::size_t> tags;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
              tags.push_back(i + 1);
            }
          }
          std::vector<std::vector<Value>> chosen;
          for (auto tag : tags) {
            chosen.push_back(comps[tag - 1]);
          }
          for (auto const& idx : product(chosen, {})) {
            if (m_.tensor_kind == TensorKind::bar_times) {
              std::vector<std::pair<std::size_t, Value>> parts;
              for (std::size_t j = 0; j < tags.size(); ++j) {
                parts.emplace_back(tags[j], chosen[j][idx[j]]);
              }
              out.push_back(detail::make_trivial_nary(std::move(parts)));
              continue;
            }
            auto ws = detail::weight_vectors(tags.size(),
                                             b_.weight_denominator_bound);
            for (std::size_t w = 0; w < ws.size();
                 w += std::max<std::size_t>(1, ws.size() / 3)) {
              GiryNary::Parts parts;
              for (std::size_t j = 0; j < tags.size(); ++j) {
                parts.emplace(tags[j], NaryPart<GiryTricocycloid, Value>{
                                           ws[w][j], chosen[j][idx[j]]});
              }
              out.emplace_back(GiryNary(std::move(parts)));
            }
          }
        }
        return out;
      }

      static std::vector<std::vector<std::size_t>> product(
          std::vector<std::vector<Value>> const& lists,
          std::vector<std::size_t>               prefix) {
        if (prefix.size() == lists.size()) {
          return {prefix};
        }
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t i = 0; i < lists[prefix.size()].size(); ++i) {
          auto next = prefix;
          next.push_back(i);
          auto tail = product(lists, next);
          out.insert(out.end(), tail.begin(), tail.end());
        }
        return out;
      }

      Search<TensorCase> tensor_search(
          std::function<std::optional<json>(TensorCase const&)> check) const {
        Search<TensorCase> s;
        s.exhaustive = [this](auto const& visit) {
          for (auto const& sig : sigs_) {
            for (auto const& tv : tensors(sig)) {
              if (!visit(TensorCase{sig, tv})) {
                return;
              }
            }
          }
        };
        s.check = std::move(check);
        return s;
      }

      MonadInstance const&      m_;
      Budget const&             b_;
      ValueBudget               exhaustive_;
      ValueBudget               random_;
      std::vector<SumSignature> sigs_;
    };

    Value tag_with(std::size_t tag, Value const& x) {
      return Value::tagged(tag, x);
    }

    LawReport tally_report(LawId law, MonadInstance const& m,
                           CheckTally const& t) {
      LawReport r;
      r.law       = law;
      r.instance  = m.name;
      r.cases_run = t.cases;
      if (t.failures > 0) {
        r.verdict        = Verdict::fail;
        r.counterexample = t.first_failure;
      }
      return r;
    }

    SearchResult run_value_law(LawId law, MonadInstance const& m,
                               Budget const& b, std::mt19937_64& rng) {
      Harness h(m, b);
      auto    rc = b.random_cases;

      switch (law) {
        case LawId::monad_left_unit:
          return run_search(
              h.monad_search(1,
                             [&](MonadCase const& c) {
                               return compare(m.join(m.unit(c.t)), c.t,
                                              {{"input", value_to_json(c.t)}});
                             }),
              rc, rng);

        case LawId::monad_right_unit:
          return run_search(
              h.monad_search(1,
                             [&](MonadCase const& c) {
                               return compare(m.join(m.fmap(m.unit, c.t)), c.t,
                                              {{"input", value_to_json(c.t)}});
                             }),
              rc, rng);

        case LawId::monad_assoc:
          return run_search(
              h.monad_search(3,
                             [&](MonadCase const& c) {
                               return compare(m.join(m.join(c.t)),
                                              m.join(m.fmap(m.join, c.t)),
                                              {{"input", value_to_json(c.t)}});
                             }),
              rc, rng);

        case LawId::iso_split_merge: {
          auto there = run_search(
              h.sum_search([&](SumCase const& c) {
                Value back = m.merge(m.split(c.t, c.sig.arity()));
                return compare(back, c.t, h.sum_witness(c));
              }),
              rc, rng);
          if (there.counterexample) {
            return there;
          }
          auto back = run_search(
              h.tensor_search([&](TensorCase const& c)
                                  -> std::optional<json> {
                TensorValue again = m.split(m.merge(c.tv), c.sig.arity());
                if (again == c.tv) {
                  return std::nullopt;
                }
                return json{{"signature", signature_to_json(c.sig)},
                            {"tensor", tensor_to_json(c.tv)},
                            {"split_of_merge", tensor_to_json(again)}};
              }),
              0, rng);
          back.cases += there.cases;
          return back;
        }

        case LawId::hyper_direct_formula:
          return run_search(
              h.sum_search([&](SumCase const& c) {
                std::size_t n = c.sig.arity();
                return compare(h.N(c.t, n), m.hypernorm_direct(c.t, n),
                               h.sum_witness(c));
              }),
              rc, rng);

        case LawId::hyper_left_inverse:
          return run_search(
              h.sum_search([&](SumCase const& c) {
                auto copair = [&](Value const& v) {
                  auto const& te  = v.as_tagged();
                  std::size_t tag = te.tag;
                  return m.fmap(
                      [tag](Value const& x) { return tag_with(tag, x); },
                      te.atom);
                };
                Value lhs = m.join(m.fmap(copair, h.N(c.t, c.sig.arity())));
                return compare(lhs, c.t, h.sum_witness(c));
              }),
              rc, rng);

        case LawId::hyper_idempotent:
          return run_search(
              h.sum_search([&](SumCase const& c) {
                std::size_t n   = c.sig.arity();
                Value       nt  = h.N(c.t, n);
                Value       rhs = m.fmap(
                    [&](Value const& v) {
                      auto const& te = v.as_tagged();
                      return tag_with(te.tag, m.unit(te.atom));
                    },
                    nt);
                return compare(h.N(nt, n), rhs, h.sum_witness(c));
              }),
              rc, rng);

        case LawId::hyper_natural:
          return run_search(
              h.map_search(false,
                           [&](MapCase const& c) {
                             std::size_t n = c.sig.arity();
                             auto        f = [&](Value const& v) {
                               auto const& te = v.as_tagged();
                               return tag_with(te.tag,
                                               c.maps.apply(te.tag, te.atom));
                             };
                             Value lhs = m.fmap(
                                 [&](Value const& v) {
                                   auto const& te  = v.as_tagged();
                                   std::size_t tag = te.tag;
                                   return tag_with(
                                       tag, m.fmap(
                                                [&](Value const& x) {
                                                  return c.maps.apply(tag, x);
                                                },
                                                te.atom));
                                 },
                                 h.N(c.t, n));
                             Value rhs = h.N(m.fmap(f, c.t), n);
                             return compare(lhs, rhs, h.map_witness(c));
                           }),
              rc, rng);

        case LawId::hyper_kleisli_natural:
          return run_search(
              h.map_search(true,
                           [&](MapCase const& c) {
                             std::size_t n = c.sig.arity();
                             auto        f = [&](Value const& v) {
                               auto const& te = v.as_tagged();
                               return tag_with(te.tag,
                                               c.maps.apply(te.tag, te.atom));
                             };
                             Value lhs = m.fmap(
                                 [&](Value const& v) {
                                   auto const& te  = v.as_tagged();
                                   std::size_t tag = te.tag;
                                   return tag_with(
                                       tag, m.join(m.fmap(
                                                [&](Value const& x) {
                                                  return c.maps.apply(tag, x);
                                                },
                                                te.atom)));
                                 },
                                 h.N(c.t, n));
                             Value rhs = m.fmap(
                                 [&](Value const& v) {
                                   auto const& te = v.as_tagged();
                                   return tag_with(te.tag, m.join(te.atom));
                                 },
                                 h.N(m.fmap(f, c.t), n));
                             return compare(lhs, rhs, h.map_witness(c));
                           }),
              rc, rng);

        case LawId::hyper_destroy_output:
          return run_search(
              h.sum_search([&](SumCase const& c) {
                Value star = Value::atom("*");
                auto  bang = [&](Value const& v) {
                  return tag_with(v.as_tagged().tag, star);
                };
                Value lhs = m.fmap(bang, h.N(c.t, c.sig.arity()));
                Value rhs = m.fmap(bang, c.t);
                return compare(lhs, rhs, h.sum_witness(c));
              }),
              rc, rng);

        case LawId::hyper_trivial_input:
          return run_search(
              h.trivial_search([&](TrivialCase const& c) {
                std::size_t tag = c.tag;
                Value       in  = m.fmap(
                    [tag](Value const& x) { return tag_with(tag, x); }, c.u);
                Value lhs = h.N(in, c.sig.arity());
                Value rhs = m.unit(tag_with(tag, c.u));
                return compare(lhs, rhs,
                               {{"signature", signature_to_json(c.sig)},
                                {"tag", tag},
                                {"input", value_to_json(c.u)}});
              }),
              rc, rng);

        case LawId::diagonal_idempotent: {
          // mix(r, t, t) = T[id, id](merge(r . t (x) r* . t)) = t
          Search<DiagonalCase> s;
          auto                 grid = qunit_grid(b.weight_denominator_bound);
          s.exhaustive = [&](auto const& visit) {
            for (auto const& t : h.layer(1)) {
              for (auto const& r : grid) {
                if (!visit(DiagonalCase{t, r})) {
                  return;
                }
              }
            }
          };
          s.random = [&](std::mt19937_64& g) {
            return DiagonalCase{h.random_layer(1, g),
                                grid[detail::uniform_index(grid.size(), g)]};
          };
          s.check = [&](DiagonalCase const& c) {
            GiryNary::Parts parts;
            parts.emplace(1, NaryPart<GiryTricocycloid, Value>{c.r.q01(), c.t});
            parts.emplace(2, NaryPart<GiryTricocycloid, Value>{
                                 q_star(c.r.q01()), c.t});
            Value mixed = m.fmap([](Value const& v) { return v.as_tagged().atom; },
                                 m.merge(GiryNary(std::move(parts))));
            return compare(mixed, c.t,
                           {{"r", c.r.str()}, {"input", value_to_json(c.t)}});
          };
          s.shrink = [&](DiagonalCase const& c) {
            std::vector<DiagonalCase> out;
            for (auto& t : m.shrink(c.t)) {
              out.push_back({std::move(t), c.r});
            }
            return out;
          };
          return run_search(s, rc, rng);
        }

        default:
          throw InapplicableLaw("not a value-level law");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  std::vector<LawId> all_laws() {
    std::vector<LawId> out;
    for (auto const& e : kLaws) {
      out.push_back(e.id);
    }
    return out;
  }

  std::string_view law_name(LawId law) {
    for (auto const& e : kLaws) {
      if (e.id == law) {
        return e.name;
      }
    }
    return "?";
  }

  LawId law_from_name(std::string_view name) {
    for (auto const& e : kLaws) {
      if (e.name == name) {
        return e.id;
      }
    }
    throw Error("unknown law \"" + std::string(name) + "\"");
  }

  std::string_view verdict_name(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::expected_fail:
        return "expected_fail";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  bool law_applicable(LawId law, MonadInstance const& m) {
    switch (law) {
      case LawId::convex_axioms:
      case LawId::phi_matches_oracle:
        return m.name == "dist";
      case LawId::expectation_d_iso:
        return m.name == "expectation";
      case LawId::star_pentagon:
      case LawId::star_hexagon:
      case LawId::tricocycloid_axiom:
      case LawId::tricocycloid_symmetry:
        return m.tensor_kind != TensorKind::cartesian;
      case LawId::diagonal_idempotent:
        return m.tensor_kind == TensorKind::giry_star;
      case LawId::hyper_direct_formula:
        return m.has_direct();
      default:
        return true;
    }
  }

  Expectation expected_outcome(LawId law, MonadInstance const& m) {
    switch (law) {
      case LawId::hyper_destroy_output:
      case LawId::diagonal_idempotent:
        return m.is_affine ? Expectation::holds : Expectation::fails;
      case LawId::hyper_trivial_input:
        return m.is_coaffine ? Expectation::holds : Expectation::fails;
      default:
        return Expectation::holds;
    }
  }

  bool LawReport::matches_expectation() const {
    if (expected == Expectation::holds) {
      return verdict == Verdict::pass;
    }
    return verdict == Verdict::expected_fail;
  }

  bool all_match(std::vector<LawReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](LawReport const& r) {
                         return r.matches_expectation();
                       });
  }

  LawReport run_law(LawId law, MonadInstance const& m, Budget const& b) {
    b.validate();
    if (!law_applicable(law, m)) {
      throw InapplicableLaw(std::string(law_name(law))
                            + " cannot be expressed for instance " + m.name
                            + " (" + std::string(tensor_kind_name(m.tensor_kind))
                            + " tensor)");
    }
    std::mt19937_64 rng(b.rng_seed
                        ^ fnv1a(std::string(law_name(law)) + "/" + m.name));
    bool const      giry = m.tensor_kind == TensorKind::giry_star;
    LawReport       r;

    switch (law) {
      case LawId::tricocycloid_axiom:
      case LawId::tricocycloid_symmetry: {
        CheckTally t;
        if (giry) {
          t = check_giry_tricocycloid(b.weight_denominator_bound,
                                      b.random_cases, rng);
        } else {
          // One point: both legs are the unique element.
          HTriple<TrivialTricocycloid> x{};
          t.record(check_tricocycloid_axiom<TrivialTricocycloid>(x),
                   [] { return json{{"h", "point"}}; });
          t.record(check_symmetry_axiom<TrivialTricocycloid>({}),
                   [] { return json{{"h", "point"}}; });
        }
        r = tally_report(law, m, t);
        break;
      }
      case LawId::star_pentagon:
      case LawId::star_hexagon:
        r = tally_report(law, m,
                         check_star_coherence(
                             giry, std::min(b.weight_denominator_bound, 6u)));
        break;
      case LawId::convex_axioms: {
        ConvexAxiomPlan plan;
        plan.size_a         = std::min<std::size_t>(2, b.max_carrier_size);
        plan.size_b         = plan.size_a;
        plan.max_den        = std::min(b.weight_denominator_bound, 4u);
        plan.full_rebracket = false;
        plan.sampled        = 20 * b.random_cases;
        r = tally_report(law, m, check_convex_star_axioms(plan, rng));
        break;
      }
      case LawId::phi_matches_oracle: {
        std::size_t s = std::min<std::size_t>(2, b.max_carrier_size);
        r = tally_report(law, m,
                         check_phi(s, s, b.weight_denominator_bound));
        break;
      }
      case LawId::expectation_d_iso:
        r = tally_report(
            law, m,
            check_expectation_iso(std::max<std::size_t>(4, b.max_carrier_size),
                                  b.weight_denominator_bound));
        break;
      default: {
        auto res    = run_value_law(law, m, b, rng);
        r.law       = law;
        r.instance  = m.name;
        r.cases_run = res.cases;
        if (res.counterexample) {
          r.verdict        = Verdict::fail;
          r.counterexample = res.counterexample;
        }
        break;
      }
    }

    r.expected = expected_outcome(law, m);
    if (r.expected == Expectation::fails) {
      r.verdict = r.counterexample ? Verdict::expected_fail
                                   : Verdict::inconclusive;
    }
    return r;
  }

  std::vector<LawReport> run_suite(MonadInstance const& m, Budget const& b) {
    std::vector<LawReport> out;
    for (auto law : all_laws()) {
      if (law_applicable(law, m)) {
        out.push_back(run_law(law, m, b));
      }
    }
    return out;
  }

  json report_to_json(LawReport const& r) {
    json j{{"law", law_name(r.law)},
           {"instance", r.instance},
           {"verdict", verdict_name(r.verdict)},
           {"expected",
            r.expected == Expectation::holds ? "pass" : "expected_fail"},
           {"matches", r.matches_expectation()},
           {"cases_run", r.cases_run}};
    if (r.counterexample) {
      j["counterexample"] = *r.counterexample;
    }
    return j;
  }

  json reports_to_json(std::vector<LawReport> const& rs) {
    json out = json::array();
    for (auto const& r : rs) {
      out.push_back(report_to_json(r));
    }
    return out;
  }

  void CheckTally::merge(CheckTally const& other) {
    if (failures == 0 && other.failures > 0) {
      first_failure = other.first_failure;
    }
    cases += other.cases;
    failures += other.failures;
  }

}  // namespace hypernorm
