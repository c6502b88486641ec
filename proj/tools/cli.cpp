#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hypernorm/convex.hpp"
#include "hypernorm/laws.hpp"
#include "hypernorm/serialization.hpp"
#include "hypernorm/tricocycloid.hpp"

namespace hypernorm::cli {

  namespace {
    // Thrown for input problems that are not library errors.
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Options {
      std::string                  instance;
      std::string                  input = "-";
      std::string                  output = "json";
      std::optional<std::uint64_t> seed;
      Budget                       budget;
      std::vector<std::string>     laws;
      bool                         inverse = false;
      std::vector<std::string>     operands;
    };

    bool pretty(Options const& o) {
      return o.output == "pretty";
    }

    std::string read_all(Options const& o, std::istream& in) {
      if (o.input == "-") {
        return {std::istreambuf_iterator<char>(in), {}};
      }
      std::ifstream f(o.input, std::ios::binary);
      if (!f) {
        throw UsageError("cannot read input file \"" + o.input + "\"");
      }
      return {std::istreambuf_iterator<char>(f), {}};
    }

    json read_json(Options const& o, std::istream& in) {
      std::string text = read_all(o, in);
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        std::string what = e.what();
        auto        pos  = what.find("parse error");
        throw ParseError("input: "
                         + (pos == std::string::npos ? what : what.substr(pos)));
      }
    }

    json const& field(json const& j, std::string const& key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(located("input", "missing field \"" + key + "\""));
      }
      return j.at(key);
    }

    void emit(std::ostream& out, json const& j) {
      out << j.dump(2) << "\n";
    }

    std::string star_text(DistStar<std::string> const& e) {
      using E = DistStar<std::string>;
      auto d  = [](Dist<std::string> const& x) {
        std::string s = "{";
        for (auto const& [a, m] : x) {
          s += (s.size() > 1 ? "," : "") + a + ":" + m.str();
        }
        return s + "}";
      };
      return e.visit(overloaded{
          [&](E::Left const& l) { return "left(" + d(l.value) + ")"; },
          [&](E::Mid const& m) {
            return "mid(" + m.weight.str() + ", " + d(m.left) + ", "
                   + d(m.right) + ")";
          },
          [&](E::Right const& r) { return "right(" + d(r.value) + ")"; }});
    }

    std::string pair_text(std::pair<QUnit, QUnit> const& p) {
      return p.first.str() + " " + p.second.str();
    }

    json pair_json(std::pair<QUnit, QUnit> const& p) {
      return json::array({p.first.str(), p.second.str()});
    }

    json triple_json(HTriple<GiryTricocycloid> const& t) {
      return json::array({t[0].str(), t[1].str(), t[2].str()});
    }

    std::string triple_text(HTriple<GiryTricocycloid> const& t) {
      return t[0].str() + " " + t[1].str() + " " + t[2].str();
    }

    int cmd_hypernorm(Options const& o, std::istream& in, std::ostream& out,
                      std::ostream& err) {
      MonadInstance m   = instance_by_name(o.instance);
      json          doc = read_json(o, in);
      SumSignature  sig = signature_from_json(field(doc, "signature"));
      Value         v   = value_from_json(field(doc, "value"), m.value_kind);
      check_against(m, sig, v);

      Value result = hypernorm_generic(m, v, sig.arity());
      json  report{{"instance", m.name}, {"result", value_to_json(result)}};
      std::optional<Value> direct;
      if (m.has_direct()) {
        direct           = m.hypernorm_direct(v, sig.arity());
        report["direct"] = value_to_json(*direct);
      }
      if (pretty(o)) {
        out << result.str() << "\n";
        if (direct) {
          out << "direct formula: " << direct->str() << "\n";
        }
      } else {
        emit(out, report);
      }
      if (direct && !(*direct == result)) {
        err << "error: the generic and direct hypernormalisations differ\n";
        return exit_violation;
      }
      return exit_ok;
    }

    int cmd_check(Options const& o, std::ostream& out) {
      Budget b = o.budget;
      b.rng_seed = o.seed.value_or(0);
      b.validate();

      std::vector<MonadInstance> instances;
      if (o.instance.empty() || o.instance == "all") {
        instances = all_instances();
      } else {
        instances.push_back(instance_by_name(o.instance));
      }
      std::vector<LawId> laws;
      for (auto const& name : o.laws) {
        laws.push_back(law_from_name(name));
      }

      std::vector<LawReport> reports;
      for (auto const& m : instances) {
        if (laws.empty()) {
          auto rs = run_suite(m, b);
          reports.insert(reports.end(), rs.begin(), rs.end());
          continue;
        }
        for (auto law : laws) {
          if (law_applicable(law, m)) {
            reports.push_back(run_law(law, m, b));
          }
        }
      }

      if (pretty(o)) {
        for (auto const& r : reports) {
          out << r.instance << "  " << law_name(r.law) << "  "
              << verdict_name(r.verdict) << "  cases=" << r.cases_run
              << (r.matches_expectation() ? "" : "  UNEXPECTED") << "\n";
          if (r.counterexample) {
            out << "    counterexample: " << r.counterexample->dump() << "\n";
          }
        }
      } else {
        emit(out, reports_to_json(reports));
      }
      return all_match(reports) ? exit_ok : exit_violation;
    }

    int cmd_tricocycloid(Options const& o, std::ostream& out) {
      if (o.operands.empty()) {
        throw UsageError("tricocycloid needs an operation: v, v-inv, gamma, "
                         "axiom or symmetry");
      }
      std::string const&       op = o.operands.front();
      std::vector<std::string> args(o.operands.begin() + 1, o.operands.end());
      auto arity = [&](std::size_t n) {
        if (args.size() != n) {
          throw UsageError("tricocycloid " + op + " takes "
                           + std::to_string(n) + " rationals in (0,1), got "
                           + std::to_string(args.size()));
        }
        std::vector<QUnit> qs;
        for (std::size_t i = 0; i < n; ++i) {
          try {
            qs.push_back(QUnit::parse(args[i]));
          } catch (Error const& e) {
            throw RangeError("operand " + std::to_string(i + 1) + " (\""
                             + args[i] + "\"): " + e.what());
          }
        }
        return qs;
      };
      json input = json(args);

      if (op == "v" || op == "v-inv") {
        auto qs = arity(2);
        auto r  = op == "v" ? v_giry(qs[0], qs[1]) : v_giry_inv(qs[0], qs[1]);
        if (pretty(o)) {
          out << pair_text(r) << "\n";
        } else {
          emit(out, {{"op", op}, {"input", input}, {"output", pair_json(r)}});
        }
      } else if (op == "gamma") {
        auto  qs = arity(1);
        QUnit g  = gamma_giry(qs[0]);
        if (pretty(o)) {
          out << g.str() << "\n";
        } else {
          emit(out, {{"op", op}, {"input", input}, {"output", {g.str()}}});
        }
      } else if (op == "axiom") {
        auto qs         = arity(3);
        auto [lhs, rhs] = tricocycloid_axiom_sides<GiryTricocycloid>(
            {qs[0], qs[1], qs[2]});
        if (pretty(o)) {
          out << triple_text(lhs) << (lhs == rhs ? " = " : " != ")
              << triple_text(rhs) << "\n";
        } else {
          emit(out, {{"op", op},
                     {"input", input},
                     {"lhs", triple_json(lhs)},
                     {"rhs", triple_json(rhs)},
                     {"holds", lhs == rhs}});
        }
      } else if (op == "symmetry") {
        auto qs         = arity(2);
        auto [lhs, rhs] = symmetry_axiom_sides<GiryTricocycloid>({qs[0], qs[1]});
        if (pretty(o)) {
          out << pair_text(lhs) << (lhs == rhs ? " = " : " != ")
              << pair_text(rhs) << "\n";
        } else {
          emit(out, {{"op", op},
                     {"input", input},
                     {"lhs", pair_json(lhs)},
                     {"rhs", pair_json(rhs)},
                     {"holds", lhs == rhs}});
        }
      } else {
        throw UsageError("unknown tricocycloid operation \"" + op
                         + "\" (expected v, v-inv, gamma, axiom or symmetry)");
      }
      return exit_ok;
    }

    int cmd_star_eval(Options const& o, std::istream& in, std::ostream& out) {
      json  doc   = read_json(o, in);
      QUnit r     = qunit_from_json(field(doc, "r"), "r");
      auto  x     = dist_star_from_json(field(doc, "x"), "x");
      auto  y     = dist_star_from_json(field(doc, "y"), "y");
      auto  space = convex_star(free_convex_space<std::string>(),
                                free_convex_space<std::string>());
      auto  z     = space(r, x, y);
      if (pretty(o)) {
        out << star_text(z) << "\n";
      } else {
        emit(out, dist_star_to_json(z));
      }
      return exit_ok;
    }

    int cmd_phi(Options const& o, std::istream& in, std::ostream& out) {
      json doc = read_json(o, in);
      if (o.inverse) {
        auto w = phi_inv(dist_star_from_json(doc, "input"));
        if (pretty(o)) {
          out << tagged_dist_to_json(w).dump() << "\n";
        } else {
          emit(out, tagged_dist_to_json(w));
        }
        return exit_ok;
      }
      auto        w     = tagged_dist_from_json(doc, "input");
      std::size_t arity = 0;
      for (auto const& [e, m] : w) {
        arity = std::max(arity, e.tag);
      }
      if (arity <= 2) {
        auto e = phi(w);
        if (pretty(o)) {
          out << star_text(e) << "\n";
        } else {
          emit(out, dist_star_to_json(e));
        }
      } else {
        auto e = nary_phi(w, arity);
        if (pretty(o)) {
          for (auto const& [tag, p] : e.parts()) {
            out << tag << ": " << p.weight.str() << " "
                << atom_dist_to_json(p.value).dump() << "\n";
          }
        } else {
          emit(out, nary_to_json(e, atom_dist_to_json));
        }
      }
      return exit_ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Exact hypernormalisation for probability-like monads"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--output", o.output, "json or pretty")
          ->check(CLI::IsMember({"json", "pretty"}));
    };
    auto add_input = [&](CLI::App* sub) {
      sub->add_option("--input", o.input, "input file, - for stdin");
    };

    auto* hyper = app.add_subcommand("hypernorm", "hypernormalise a T-value");
    hyper->add_option("--instance", o.instance, "monad instance")->required();
    add_input(hyper);
    add_common(hyper);

    auto* check = app.add_subcommand("check", "run the law suite");
    check->add_option("--instance", o.instance, "monad instance or all")
        ->default_str("all");
    check->add_option("--law", o.laws, "restrict to these laws");
    check->add_option("--seed", o.seed, "random seed")
        ->envname("HYPERNORM_SEED");
    check->add_option("--max-carrier", o.budget.max_carrier_size);
    check->add_option("--max-tags", o.budget.max_tags);
    check->add_option("--denom-bound", o.budget.weight_denominator_bound);
    check->add_option("--random-cases", o.budget.random_cases);
    check->add_option("--exhaustive-support", o.budget.exhaustive_support);
    add_common(check);

    auto* tri = app.add_subcommand(
        "tricocycloid", "evaluate v, v-inv or gamma, or check an axiom");
    tri->add_option("operands", o.operands, "operation then rationals")
        ->required();
    add_common(tri);

    auto* star = app.add_subcommand(
        "star-eval", "combine two elements of DA * DB with weight r");
    add_input(star);
    add_common(star);

    auto* ph = app.add_subcommand("phi", "apply phi : D(A + B) -> DA * DB");
    ph->add_flag("--inverse", o.inverse, "apply phi_inv instead");
    add_input(ph);
    add_common(ph);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      if (hyper->parsed()) {
        return cmd_hypernorm(o, in, out, err);
      }
      if (check->parsed()) {
        return cmd_check(o, out);
      }
      if (tri->parsed()) {
        return cmd_tricocycloid(o, out);
      }
      if (star->parsed()) {
        return cmd_star_eval(o, in, out);
      }
      return cmd_phi(o, in, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
    } catch (json::exception const& e) {
      err << "error: malformed input: " << e.what() << "\n";
    }
    return exit_usage;
  }

}  // namespace hypernorm::cli
