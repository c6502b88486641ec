#include "hypernorm/monads.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hypernorm/error.hpp"

namespace hypernorm {

  std::string_view tensor_kind_name(TensorKind k) {
    switch (k) {
      case TensorKind::giry_star:
        return "giry_star";
      case TensorKind::cartesian:
        return "cartesian";
      case TensorKind::bar_times:
        return "bar_times";
    }
    return "?";
  }

  std::string tensor_str(TensorValue const& t) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](GiryNary const& e) {
                     os << "star(";
                     bool first = true;
                     for (auto const& [tag, p] : e.parts()) {
                       os << (first ? "" : ", ") << tag << ":" << p.weight
                          << "*" << p.value;
                       first = false;
                     }
                     os << ")";
                   },
                   [&](CartesianTuple const& c) {
                     os << "tuple(";
                     for (std::size_t i = 0; i < c.components.size(); ++i) {
                       os << (i ? ", " : "") << c.components[i];
                     }
                     os << ")";
                   },
                   [&](TrivialNary const& e) {
                     os << "bar(";
                     bool first = true;
                     for (auto const& [tag, p] : e.parts()) {
                       os << (first ? "" : ", ") << tag << ":" << p.value;
                       first = false;
                     }
                     os << ")";
                   }},
               t);
    return os.str();
  }

  std::vector<MonadInstance> all_instances() {
    return {instance_dist(),       instance_multiset(),
            instance_ne_multiset(), instance_powerset(),
            instance_ne_powerset(), instance_multidist(),
            instance_expectation()};
  }

  namespace {
    struct Alias {
      std::string_view alias;
      std::string_view name;
    };
    constexpr Alias kAliases[] = {
        {"D", "dist"},          {"M", "multiset"},
        {"S", "ne_multiset"},   {"Pf", "powerset"},
        {"Pne", "ne_powerset"}, {"Dm", "multidist"},
        {"E", "expectation"},
    };
  }  // namespace

  std::vector<std::string> instance_names() {
    std::vector<std::string> out;
    for (auto const& a : kAliases) {
      out.emplace_back(a.name);
    }
    return out;
  }

  MonadInstance instance_by_name(std::string_view name) {
    for (auto const& a : kAliases) {
      if (name == a.alias) {
        name = a.name;
        break;
      }
    }
    for (auto& m : all_instances()) {
      if (m.name == name) {
        return m;
      }
    }
    std::string known;
    for (auto const& a : kAliases) {
      known += (known.empty() ? "" : ", ") + std::string(a.name);
    }
    throw Error("unknown monad instance \"" + std::string(name)
                + "\" (known: " + known + ")");
  }

  TensorValue embed_units(MonadInstance const& m, TensorValue const& t) {
    return std::visit(
        overloaded{[&](GiryNary const& e) -> TensorValue {
                     return nary_map(m.unit, e);
                   },
                   [&](CartesianTuple const& c) -> TensorValue {
                     CartesianTuple out;
                     for (auto const& x : c.components) {
                       out.components.push_back(m.unit(x));
                     }
                     return out;
                   },
                   [&](TrivialNary const& e) -> TensorValue {
                     return nary_map(m.unit, e);
                   }},
        t);
  }

  Value hypernorm_generic(MonadInstance const& m,
                          Value const&         t,
                          std::size_t          arity) {
    return m.merge(embed_units(m, m.split(t, arity)));
  }

  std::vector<Value> value_points(Value const& t) {
    std::vector<Value> out;
    switch (t.kind()) {
      case ValueKind::dist:
        out = t.as_dist().support();
        break;
      case ValueKind::finadd:
        out = t.as_finadd().support();
        break;
      case ValueKind::bag:
        for (auto const& [x, n] : t.as_bag()) {
          out.push_back(x);
        }
        break;
      case ValueKind::set:
        out.assign(t.as_set().begin(), t.as_set().end());
        break;
      case ValueKind::multidist: {
        std::set<Value> pts;
        for (auto const& e : t.as_multidist()) {
          pts.insert(e.point);
        }
        out.assign(pts.begin(), pts.end());
        break;
      }
      default:
        throw SignatureError("expected a monad value, got the "
                             + std::string(kind_name(t.kind())) + " "
                             + t.str());
    }
    return out;
  }

  void check_against(MonadInstance const& m,
                     SumSignature const&  sig,
                     Value const&         t) {
    if (t.kind() != m.value_kind) {
      throw SignatureError("instance " + m.name + " expects a "
                           + std::string(kind_name(m.value_kind))
                           + ", got the "
                           + std::string(kind_name(t.kind())) + " "
                           + t.str());
    }
    m.validate(t);
    for (auto const& p : value_points(t)) {
      auto const& te = p.as_tagged();
      check_member(sig, TaggedElem<std::string>{te.tag, te.atom.as_atom()});
    }
  }

  Value tagged_atom(std::size_t tag, std::string const& atom) {
    return Value::tagged(tag, Value::atom(atom));
  }

  std::vector<Value> sum_atoms(SumSignature const& sig) {
    std::vector<Value> out;
    for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
      for (auto const& a : sig.component(tag).atoms()) {
        out.push_back(tagged_atom(tag, a));
      }
    }
    return out;
  }

}  // namespace hypernorm
