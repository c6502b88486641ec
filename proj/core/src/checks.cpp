// Exhaustive checks over the typed constructions: the tricocycloid, star
// coherence, the coproduct of convex spaces, phi, and E = D.

#include <sstream>

#include "hypernorm/convex.hpp"
#include "hypernorm/expectation.hpp"
#include "hypernorm/laws.hpp"
#include "instance_support.hpp"

namespace hypernorm {

  namespace {
    template <typename X>
    std::vector<Dist<X>> all_dists(std::vector<X> const& atoms,
                                   unsigned              max_den,
                                   std::size_t           max_support) {
      std::vector<Dist<X>> out;
      for (std::size_t k = 1; k <= std::min(max_support, atoms.size()); ++k) {
        auto ws = detail::weight_vectors(k, max_den);
        for (auto const& idx :
             detail::index_combinations(atoms.size(), k, false)) {
          for (auto const& w : ws) {
            typename Dist<X>::Map m;
            for (std::size_t j = 0; j < k; ++j) {
              m.emplace(atoms[idx[j]], w[j]);
            }
            out.emplace_back(std::move(m));
          }
        }
      }
      return out;
    }

    std::vector<std::string> letters(std::size_t n, std::size_t pool) {
      return letters_carrier("X", n, pool).atoms();
    }

    std::string text(std::string const& s) {
      return s;
    }

    std::string text(Dist<std::string> const& d) {
      std::string out = "{";
      for (auto const& [x, m] : d) {
        out += (out.size() > 1 ? "," : "") + x + ":" + m.str();
      }
      return out + "}";
    }

    std::string text(Point) {
      return "pt";
    }

    std::string text(QUnit const& q) {
      return q.str();
    }

    template <Tricocycloid T, typename X, typename Y>
    std::string text(StarElem<T, X, Y> const& e) {
      using E = StarElem<T, X, Y>;
      return e.visit(overloaded{
          [](typename E::Left const& l) { return "left(" + text(l.value) + ")"; },
          [](typename E::Mid const& m) {
            return "mid(" + text(m.weight) + ", " + text(m.left) + ", "
                   + text(m.right) + ")";
          },
          [](typename E::Right const& r) {
            return "right(" + text(r.value) + ")";
          }});
    }

    std::string text(Dist<TaggedElem<std::string>> const& d) {
      std::string out = "{";
      for (auto const& [e, m] : d) {
        out += (out.size() > 1 ? "," : "") + std::to_string(e.tag) + ":"
               + e.atom + ":" + m.str();
      }
      return out + "}";
    }

    QUnit random_qunit(std::mt19937_64& rng) {
      unsigned long den = 2 + detail::uniform_index(999, rng);
      long          num = 1 + static_cast<long>(detail::uniform_index(den - 1, rng));
      return QUnit(num, den);
    }

    template <Tricocycloid T>
    CheckTally coherence_for(unsigned max_den) {
      using S  = std::string;
      auto w   = weight_grid<T>(max_den);
      auto ab  = all_star_elems<T, S, S>({"a"}, {"b"}, w);
      auto abc = all_star_elems<T>(ab, std::vector<S>{"c"}, w);
      CheckTally t;
      for (auto const& e : abc) {
        auto [top, bottom] = hexagon_sides(e);
        t.record(top == bottom, [&] {
          return json{{"diagram", "hexagon"},
                      {"input", text(e)},
                      {"lhs", text(top)},
                      {"rhs", text(bottom)}};
        });
      }
      auto abcd = all_star_elems<T>(abc, std::vector<S>{"d"}, w);
      for (auto const& e : abcd) {
        auto [top, bottom] = pentagon_sides(e);
        t.record(top == bottom, [&] {
          return json{{"diagram", "pentagon"},
                      {"input", text(e)},
                      {"lhs", text(top)},
                      {"rhs", text(bottom)}};
        });
      }
      return t;
    }

    Value to_value(Dist<TaggedElem<std::string>> const& w) {
      return Value::dist(pushforward(
          [](TaggedElem<std::string> const& e) {
            return tagged_atom(e.tag, e.atom);
          },
          w));
    }

    Value to_value(Dist<TaggedElem<Dist<std::string>>> const& w) {
      return Value::dist(pushforward(
          [](TaggedElem<Dist<std::string>> const& e) {
            return Value::tagged(
                e.tag, Value::dist(pushforward(
                           [](std::string const& a) { return Value::atom(a); },
                           e.atom)));
          },
          w));
    }

    std::vector<Dist<TaggedElem<std::string>>> binary_inputs(
        std::size_t size_a, std::size_t size_b, unsigned max_den) {
      std::vector<TaggedElem<std::string>> atoms;
      for (auto const& a : letters(size_a, 0)) {
        atoms.push_back(inject(1, a));
      }
      for (auto const& b : letters(size_b, 1)) {
        atoms.push_back(inject(2, b));
      }
      return all_dists(atoms, max_den, atoms.size());
    }
  }  // namespace

  CheckTally check_giry_tricocycloid(unsigned         max_den,
                                     std::size_t      random_cases,
                                     std::mt19937_64& rng) {
    using G   = GiryTricocycloid;
    auto grid = qunit_grid(max_den);
    CheckTally t;
    auto triple = [&](HTriple<G> const& x) {
      auto [lhs, rhs] = tricocycloid_axiom_sides<G>(x);
      t.record(lhs == rhs, [&] {
        return json{{"axiom", "rebracket"},
                    {"input", {x[0].str(), x[1].str(), x[2].str()}},
                    {"lhs", {lhs[0].str(), lhs[1].str(), lhs[2].str()}},
                    {"rhs", {rhs[0].str(), rhs[1].str(), rhs[2].str()}}};
      });
    };
    auto pair = [&](HPair<G> const& x) {
      auto [lhs, rhs] = symmetry_axiom_sides<G>(x);
      t.record(lhs == rhs, [&] {
        return json{{"axiom", "symmetry"},
                    {"input", {x.first.str(), x.second.str()}},
                    {"lhs", {lhs.first.str(), lhs.second.str()}},
                    {"rhs", {rhs.first.str(), rhs.second.str()}}};
      });
    };
    for (auto const& r : grid) {
      for (auto const& s : grid) {
        pair({r, s});
        for (auto const& u : grid) {
          triple({r, s, u});
        }
      }
    }
    for (std::size_t i = 0; i < random_cases; ++i) {
      QUnit r = random_qunit(rng), s = random_qunit(rng), u = random_qunit(rng);
      triple({r, s, u});
      pair({r, s});
    }
    return t;
  }

  CheckTally check_star_coherence(bool giry, unsigned max_den) {
    return giry ? coherence_for<GiryTricocycloid>(max_den)
                : coherence_for<TrivialTricocycloid>(max_den);
  }

  CheckTally check_convex_star_axioms(ConvexAxiomPlan const& plan,
                                      std::mt19937_64&       rng) {
    using S    = std::string;
    auto grid  = qunit_grid(plan.max_den);
    auto as    = all_dists(letters(plan.size_a, 0), plan.max_den, plan.size_a);
    auto bs    = all_dists(letters(plan.size_b, 1), plan.max_den, plan.size_b);
    auto elems = all_star_elems<GiryTricocycloid>(as, bs, grid);
    auto op    = convex_star(free_convex_space<S>(), free_convex_space<S>());

    CheckTally t;
    for (auto const& r : grid) {
      for (auto const& a : elems) {
        t.record(check_idempotent(op, r, a), [&] {
          return json{{"axiom", "idempotent"}, {"r", r.str()}, {"a", text(a)}};
        });
        for (auto const& b : elems) {
          t.record(check_twist(op, r, a, b), [&] {
            return json{{"axiom", "twist"},
                        {"r", r.str()},
                        {"a", text(a)},
                        {"b", text(b)}};
          });
        }
      }
    }
    auto rebracket = [&](QUnit const& r, QUnit const& s, auto const& a,
                         auto const& b, auto const& c) {
      t.record(check_rebracket(op, r, s, a, b, c), [&] {
        return json{{"axiom", "rebracket"},
                    {"r", r.str()},
                    {"s", s.str()},
                    {"a", text(a)},
                    {"b", text(b)},
                    {"c", text(c)}};
      });
    };
    if (plan.full_rebracket) {
      // The inner combinations s(a, b) and q(b, c) are tabulated once; each
      // case then costs the two outer combinations.
      std::size_t const n = elems.size();
      using Table         = std::vector<DistStar<S>>;
      auto tabulate       = [&](QUnit const& w) {
        Table out;
        out.reserve(n * n);
        for (auto const& x : elems) {
          for (auto const& y : elems) {
            out.push_back(op(w, x, y));
          }
        }
        return out;
      };
      std::map<QUnit, Table> inner;
      for (auto const& w : grid) {
        inner.emplace(w, tabulate(w));
      }
      for (auto const& r : grid) {
        for (auto const& s : grid) {
          auto [p, q] = v_giry(r, s);
          auto it     = inner.find(q);
          if (it == inner.end()) {
            it = inner.emplace(q, tabulate(q)).first;
          }
          Table const& left  = inner.at(s);
          Table const& right = it->second;
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              auto const& sab = left[a * n + b];
              for (std::size_t c = 0; c < n; ++c) {
                bool ok = op(r, sab, elems[c]) == op(p, elems[a], right[b * n + c]);
                t.record(ok, [&] {
                  return json{{"axiom", "rebracket"},
                              {"r", r.str()},
                              {"s", s.str()},
                              {"a", text(elems[a])},
                              {"b", text(elems[b])},
                              {"c", text(elems[c])}};
                });
              }
            }
          }
        }
      }
    } else {
      auto pick = [&](auto const& xs) -> auto const& {
        return xs[detail::uniform_index(xs.size(), rng)];
      };
      for (std::size_t i = 0; i < plan.sampled; ++i) {
        rebracket(pick(grid), pick(grid), pick(elems), pick(elems),
                  pick(elems));
      }
    }
    return t;
  }

  CheckTally check_phi(std::size_t size_a, std::size_t size_b, unsigned max_den) {
    using S = std::string;
    CheckTally t;
    for (auto const& w : binary_inputs(size_a, size_b, max_den)) {
      auto direct = phi(w);
      auto oracle = phi_oracle(w);
      t.record(direct == oracle, [&] {
        return json{{"property", "phi = phi_oracle"},
                    {"input", text(w)},
                    {"phi", text(direct)},
                    {"oracle", text(oracle)}};
      });
      auto back = phi_inv(direct);
      t.record(back == w, [&] {
        return json{{"property", "phi_inv . phi = id"},
                    {"input", text(w)},
                    {"result", text(back)}};
      });
      auto flat = nary_normalize<GiryTricocycloid, Dist<S>>(direct);
      t.record(flat == nary_phi(w, 2), [&] {
        return json{{"property", "binary phi = n-ary phi"},
                    {"input", text(w)}};
      });
    }
    auto grid  = qunit_grid(max_den);
    auto as    = all_dists(letters(size_a, 0), max_den, size_a);
    auto bs    = all_dists(letters(size_b, 1), max_den, size_b);
    for (auto const& e : all_star_elems<GiryTricocycloid>(as, bs, grid)) {
      auto again = phi(phi_inv(e));
      t.record(again == e, [&] {
        return json{{"property", "phi . phi_inv = id"},
                    {"input", text(e)},
                    {"result", text(again)}};
      });
    }
    return t;
  }

  CheckTally check_jacobs_composite(std::size_t size_a,
                                    std::size_t size_b,
                                    unsigned    max_den) {
    MonadInstance d = instance_dist();
    CheckTally    t;
    for (auto const& w : binary_inputs(size_a, size_b, max_den)) {
      Value generic = hypernorm_generic(d, to_value(w), 2);
      Value jacobs  = to_value(hypernorm_jacobs(w));
      t.record(generic == jacobs, [&] {
        return json{{"input", text(w)},
                    {"generic", generic.str()},
                    {"jacobs", jacobs.str()}};
      });
    }
    return t;
  }

  CheckTally check_expectation_iso(std::size_t max_size, unsigned max_den) {
    using S = std::string;
    CheckTally t;
    auto       fail = [](std::string what, std::string input) {
      return [what = std::move(what), input = std::move(input)] {
        return json{{"property", what}, {"input", input}};
      };
    };

    for (std::size_t n = 1; n <= max_size; ++n) {
      auto xs = letters(n, 0);
      for (auto const& d : all_dists(xs, max_den, n)) {
        auto e = ea_from_dist(d);
        t.record(ea_to_dist(e) == d, fail("round trip", text(d)));

        // Every subset, against the sum of point masses.
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::set<S> u;
          mpq_class   expect;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
              u.insert(xs[i]);
              expect += d.at(xs[i]).value();
            }
          }
          t.record(cmp(ea_measure(e, u).value(), expect) == 0,
                   fail("measure of a subset", text(d)));
          // Additivity over every disjoint V inside the complement of U.
          std::size_t rest = ((std::size_t{1} << n) - 1) & ~mask;
          for (std::size_t v = rest;; v = (v - 1) & rest) {
            std::set<S> vs, uv = u;
            for (std::size_t i = 0; i < n; ++i) {
              if (v & (std::size_t{1} << i)) {
                vs.insert(xs[i]);
                uv.insert(xs[i]);
              }
            }
            t.record(cmp(ea_measure(e, uv).value(),
                         ea_measure(e, u).value() + ea_measure(e, vs).value())
                         == 0,
                     fail("finite additivity", text(d)));
            if (v == 0) {
              break;
            }
          }
        }
        t.record(ea_measure(e, {}).is_zero()
                     && ea_measure(e, std::set<S>(xs.begin(), xs.end()))
                            .is_one(),
                 fail("empty and full set", text(d)));

        // Pushforward along every map into a two-point set.
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          auto f = [&](S const& x) {
            auto i = static_cast<std::size_t>(
                std::find(xs.begin(), xs.end(), x) - xs.begin());
            return (mask & (std::size_t{1} << i)) ? S("p") : S("q");
          };
          t.record(ea_to_dist(ea_pushforward(f, e)) == pushforward(f, d),
                   fail("pushforward", text(d)));
        }
      }
      for (auto const& x : xs) {
        t.record(ea_to_dist(ea_unit(x)) == dirac(x), fail("unit", x));
      }

      // Join of two-point mixtures of measures.
      auto pool = all_dists(xs, std::min(max_den, 3u), n);
      for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          for (auto const& r : qunit_grid(std::min(max_den, 3u))) {
            FinAddProb<FinAddProb<S>> outer(
                typename FinAddProb<FinAddProb<S>>::Map{
                    {ea_from_dist(pool[i]), r.q01()},
                    {ea_from_dist(pool[j]), q_star(r.q01())}});
            Dist<Dist<S>> douter(typename Dist<Dist<S>>::Map{
                {pool[i], r.q01()}, {pool[j], q_star(r.q01())}});
            t.record(ea_to_dist(ea_join(outer)) == dist_join(douter),
                     fail("join", text(pool[i]) + " / " + text(pool[j])));
          }
        }
      }
    }

    // Integrals against h(r, w, g) split as r.(integral over A) +
    // r*.(integral over B), for every f : A + B -> {0, 1/2, 1}.
    Q01 const levels[] = {Q01::zero(), Q01(1, 2), Q01::one()};
    for (std::size_t na = 1; na <= 2; ++na) {
      for (std::size_t nb = 1; nb <= 2; ++nb) {
        auto as = letters(na, 0);
        auto bs = letters(nb, 1);
        std::vector<TaggedElem<S>> points;
        for (auto const& a : as) {
          points.push_back(inject(1, a));
        }
        for (auto const& b : bs) {
          points.push_back(inject(2, b));
        }
        std::size_t nf = 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
          nf *= 3;
        }
        auto ws = all_dists(as, max_den, na);
        auto gs = all_dists(bs, max_den, nb);
        for (std::size_t code = 0; code < nf; ++code) {
          std::map<TaggedElem<S>, Q01> table;
          std::size_t                  c = code;
          for (auto const& p : points) {
            table.emplace(p, levels[c % 3]);
            c /= 3;
          }
          auto f = [&](TaggedElem<S> const& p) { return table.at(p); };
          for (auto const& w : ws) {
            for (auto const& g : gs) {
              FinAddProb<S> ew = ea_from_dist(w), eg = ea_from_dist(g);
              Q01 int_a = ea_integrate(ew, [&](S const& a) { return f(inject(1, a)); });
              Q01 int_b = ea_integrate(eg, [&](S const& b) { return f(inject(2, b)); });
              for (auto const& r : qunit_grid(max_den)) {
                EaNary<S>::Parts parts;
                parts.emplace(1, NaryPart<GiryTricocycloid, FinAddProb<S>>{
                                     r.q01(), ew});
                parts.emplace(2, NaryPart<GiryTricocycloid, FinAddProb<S>>{
                                     q_star(r.q01()), eg});
                auto      h   = ea_merge(EaNary<S>(std::move(parts)));
                mpq_class rhs = r.value() * int_a.value()
                                + (1 - r.value()) * int_b.value();
                t.record(cmp(ea_integrate(h, f).value(), rhs) == 0, [&] {
                  return json{{"property", "integral against h"},
                              {"r", r.str()},
                              {"w", text(w)},
                              {"g", text(g)}};
                });
              }
            }
          }
        }
      }
    }
    return t;
  }

}  // namespace hypernorm
