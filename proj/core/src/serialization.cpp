#include "hypernorm/serialization.hpp"

#include "hypernorm/error.hpp"

namespace hypernorm {

  std::string located(std::string const& where, std::string const& what) {
    return where + ": " + what;
  }

  namespace {
    [[noreturn]] void bad(std::string const& where, std::string const& what) {
      throw ParseError(located(where, what));
    }

    std::string const& expect_string(json const& j, std::string const& where) {
      if (!j.is_string()) {
        bad(where, "expected a string, got " + j.dump());
      }
      return j.get_ref<std::string const&>();
    }

    Value element(json const& j, std::string const& where) {
      try {
        return parse_value(expect_string(j, where));
      } catch (ParseError const& e) {
        if (std::string(e.what()).rfind(where, 0) == 0) {
          throw;
        }
        bad(where, e.what());
      }
    }

    std::size_t expect_count(json const& j, std::string const& where) {
      if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) {
        bad(where, "expected a positive integer count, got " + j.dump());
      }
      return j.get<std::size_t>();
    }

    Dist<Value>::Map weighted_object(json const& j, std::string const& where) {
      if (!j.is_object()) {
        bad(where, "expected an object of weights, got " + j.dump());
      }
      Dist<Value>::Map out;
      for (auto const& [k, w] : j.items()) {
        std::string field = where + "." + k;
        Value       x = element(json(k), field);
        if (!out.emplace(std::move(x), q01_from_json(w, field)).second) {
          bad(field, "duplicate key");
        }
      }
      return out;
    }

    template <typename T, typename Arg>
    T checked(Arg&& arg, std::string const& where) {
      try {
        return T(std::forward<Arg>(arg));
      } catch (RangeError const& e) {
        bad(where, e.what());
      }
    }
  }  // namespace

  Q01 q01_from_json(json const& j, std::string const& where) {
    if (j.is_number_integer() && (j.get<long>() == 0 || j.get<long>() == 1)) {
      return Q01(j.get<long>(), 1);
    }
    std::string const& s = expect_string(j, where);
    try {
      return Q01::parse(s);
    } catch (ParseError const& e) {
      bad(where, e.what());
    } catch (RangeError const& e) {
      throw RangeError(located(where, e.what()));
    }
  }

  QUnit qunit_from_json(json const& j, std::string const& where) {
    Q01 q = q01_from_json(j, where);
    try {
      return QUnit(q);
    } catch (RangeError const& e) {
      throw RangeError(located(where, e.what()));
    }
  }

  json value_to_json(Value const& v) {
    switch (v.kind()) {
      case ValueKind::atom:
      case ValueKind::tagged:
        return v.str();
      case ValueKind::dist: {
        json out = json::object();
        for (auto const& [x, m] : v.as_dist()) {
          out[x.str()] = m.str();
        }
        return out;
      }
      case ValueKind::finadd: {
        json out = json::object();
        for (auto const& [x, m] : v.as_finadd().singleton_masses()) {
          out[x.str()] = m.str();
        }
        return out;
      }
      case ValueKind::bag: {
        json out = json::array();
        for (auto const& [x, n] : v.as_bag()) {
          out.push_back({{"x", x.str()}, {"count", n}});
        }
        return out;
      }
      case ValueKind::set: {
        json out = json::array();
        for (auto const& x : v.as_set()) {
          out.push_back(x.str());
        }
        return out;
      }
      case ValueKind::multidist: {
        json out = json::array();
        for (auto const& e : v.as_multidist()) {
          out.push_back({{"w", e.weight.str()}, {"x", e.point.str()}});
        }
        return out;
      }
    }
    return nullptr;
  }

  Value value_from_json(json const& j, ValueKind kind, std::string const& where) {
    switch (kind) {
      case ValueKind::atom:
      case ValueKind::tagged: {
        Value v = element(j, where);
        if (v.kind() != kind) {
          bad(where, "expected a " + std::string(kind_name(kind)));
        }
        return v;
      }
      case ValueKind::dist:
        return Value::dist(
            checked<Dist<Value>>(weighted_object(j, where), where));
      case ValueKind::finadd:
        return Value::finadd(FinAddProb<Value>(
            checked<Dist<Value>>(weighted_object(j, where), where)));
      case ValueKind::bag: {
        if (!j.is_array()) {
          bad(where, "expected an array of {\"x\", \"count\"} objects");
        }
        Bag<Value> b;
        for (std::size_t i = 0; i < j.size(); ++i) {
          std::string field = where + "[" + std::to_string(i) + "]";
          auto const& e     = j[i];
          if (e.is_string()) {
            b.add(element(e, field));
            continue;
          }
          if (!e.is_object() || !e.contains("x")) {
            bad(field, "expected {\"x\": ..., \"count\": n}");
          }
          std::size_t n = e.contains("count")
                              ? expect_count(e["count"], field + ".count")
                              : 1;
          b.add(element(e["x"], field + ".x"), n);
        }
        return Value::bag(std::move(b));
      }
      case ValueKind::set: {
        if (!j.is_array()) {
          bad(where, "expected an array of elements");
        }
        FinSet<Value> s;
        for (std::size_t i = 0; i < j.size(); ++i) {
          s.insert(element(j[i], where + "[" + std::to_string(i) + "]"));
        }
        return Value::set(std::move(s));
      }
      case ValueKind::multidist: {
        if (!j.is_array()) {
          bad(where, "expected an array of {\"w\", \"x\"} objects");
        }
        MultiDist<Value>::Entries es;
        for (std::size_t i = 0; i < j.size(); ++i) {
          std::string field = where + "[" + std::to_string(i) + "]";
          auto const& e     = j[i];
          if (!e.is_object() || !e.contains("w") || !e.contains("x")) {
            bad(field, "expected {\"w\": weight, \"x\": element}");
          }
          es.push_back({q01_from_json(e["w"], field + ".w"),
                        element(e["x"], field + ".x")});
        }
        return Value::multidist(checked<MultiDist<Value>>(std::move(es), where));
      }
    }
    bad(where, "unsupported value kind");
  }

  json signature_to_json(SumSignature const& sig) {
    json out = json::array();
    for (auto const& c : sig.components()) {
      out.push_back({{"name", c.name()}, {"atoms", c.atoms()}});
    }
    return out;
  }

  SumSignature signature_from_json(json const& j, std::string const& where) {
    if (!j.is_array() || j.empty()) {
      bad(where, "expected a nonempty array of {\"name\", \"atoms\"}");
    }
    std::vector<Carrier> comps;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string field = where + "[" + std::to_string(i) + "]";
      auto const& c     = j[i];
      if (!c.is_object() || !c.contains("atoms") || !c["atoms"].is_array()) {
        bad(field, "expected {\"name\": ..., \"atoms\": [...]}");
      }
      std::string name = c.contains("name")
                             ? expect_string(c["name"], field + ".name")
                             : "A" + std::to_string(i + 1);
      std::vector<std::string> atoms;
      for (std::size_t k = 0; k < c["atoms"].size(); ++k) {
        std::string af = field + ".atoms[" + std::to_string(k) + "]";
        std::string a  = expect_string(c["atoms"][k], af);
        if (!is_atom_name(a)) {
          bad(af, "invalid atom name \"" + a + "\"");
        }
        atoms.push_back(std::move(a));
      }
      try {
        comps.emplace_back(std::move(name), std::move(atoms));
      } catch (SignatureError const& e) {
        throw SignatureError(located(field, e.what()));
      }
    }
    try {
      return SumSignature(std::move(comps));
    } catch (SignatureError const& e) {
      throw SignatureError(located(where, e.what()));
    }
  }

  json tensor_to_json(TensorValue const& t) {
    return std::visit(
        overloaded{
            [](GiryNary const& e) {
              json j      = nary_to_json(e, value_to_json);
              j["tensor"] = "giry_star";
              return j;
            },
            [](CartesianTuple const& c) {
              json comps = json::array();
              for (auto const& x : c.components) {
                comps.push_back(value_to_json(x));
              }
              return json{{"tensor", "cartesian"}, {"components", comps}};
            },
            [](TrivialNary const& e) {
              json active = json::array();
              json parts  = json::object();
              for (auto const& [tag, p] : e.parts()) {
                active.push_back(tag);
                parts[std::to_string(tag)] = value_to_json(p.value);
              }
              return json{{"tensor", "bar_times"},
                          {"active", active},
                          {"parts", parts}};
            }},
        t);
  }

  json tagged_to_json(TaggedElem<std::string> const& e) {
    return json{{"tag", e.tag}, {"atom", e.atom}};
  }

  TaggedElem<std::string> tagged_from_json(json const&        j,
                                           std::string const& where) {
    if (j.is_string()) {
      Value v = element(j, where);
      if (!v.is(ValueKind::tagged) || !v.as_tagged().atom.is(ValueKind::atom)) {
        bad(where, "expected a tagged atom such as \"1:a\"");
      }
      return {v.as_tagged().tag, v.as_tagged().atom.as_atom()};
    }
    if (!j.is_object() || !j.contains("tag") || !j.contains("atom")) {
      bad(where, "expected {\"tag\": i, \"atom\": name}");
    }
    if (!j["tag"].is_number_unsigned() || j["tag"].get<std::size_t>() == 0) {
      bad(where + ".tag", "expected a positive integer");
    }
    std::string atom = expect_string(j["atom"], where + ".atom");
    if (!is_atom_name(atom)) {
      bad(where + ".atom", "invalid atom name \"" + atom + "\"");
    }
    return {j["tag"].get<std::size_t>(), atom};
  }

  json atom_dist_to_json(Dist<std::string> const& d) {
    json out = json::object();
    for (auto const& [x, m] : d) {
      out[x] = m.str();
    }
    return out;
  }

  Dist<std::string> atom_dist_from_json(json const&        j,
                                        std::string const& where) {
    if (j.is_string()) {
      std::string const& a = j.get_ref<std::string const&>();
      if (!is_atom_name(a)) {
        bad(where, "invalid atom name \"" + a + "\"");
      }
      return dirac(a);
    }
    if (!j.is_object()) {
      bad(where, "expected a distribution object or an atom name");
    }
    Dist<std::string>::Map out;
    for (auto const& [k, w] : j.items()) {
      if (!is_atom_name(k)) {
        bad(where + "." + k, "invalid atom name");
      }
      out.emplace(k, q01_from_json(w, where + "." + k));
    }
    return checked<Dist<std::string>>(std::move(out), where);
  }

  Dist<TaggedElem<std::string>> tagged_dist_from_json(
      json const&        j,
      std::string const& where) {
    if (!j.is_object()) {
      bad(where, "expected an object such as {\"1:a\": \"1/2\", ...}");
    }
    Dist<TaggedElem<std::string>>::Map out;
    for (auto const& [k, w] : j.items()) {
      std::string field = where + "." + k;
      auto        e     = tagged_from_json(json(k), field);
      if (!out.emplace(e, q01_from_json(w, field)).second) {
        bad(field, "duplicate key");
      }
    }
    return checked<Dist<TaggedElem<std::string>>>(std::move(out), where);
  }

  json tagged_dist_to_json(Dist<TaggedElem<std::string>> const& d) {
    json out = json::object();
    for (auto const& [e, m] : d) {
      out[std::to_string(e.tag) + ":" + e.atom] = m.str();
    }
    return out;
  }

  json dist_star_to_json(DistStar<std::string> const& e) {
    return star_to_json(e, atom_dist_to_json, atom_dist_to_json);
  }

  DistStar<std::string> dist_star_from_json(json const&        j,
                                            std::string const& where) {
    if (!j.is_object() || j.size() != 1) {
      bad(where, "expected {\"left\": ...}, {\"mid\": ...} or {\"right\": ...}");
    }
    if (j.contains("left")) {
      return DistStar<std::string>::left(
          atom_dist_from_json(j["left"], where + ".left"));
    }
    if (j.contains("right")) {
      return DistStar<std::string>::right(
          atom_dist_from_json(j["right"], where + ".right"));
    }
    if (j.contains("mid")) {
      auto const& m = j["mid"];
      std::string f = where + ".mid";
      if (!m.is_object() || !m.contains("w") || !m.contains("x")
          || !m.contains("y")) {
        bad(f, "expected {\"w\": weight, \"x\": ..., \"y\": ...}");
      }
      return DistStar<std::string>::mid(qunit_from_json(m["w"], f + ".w"),
                                        atom_dist_from_json(m["x"], f + ".x"),
                                        atom_dist_from_json(m["y"], f + ".y"));
    }
    bad(where, "expected one of the keys left, mid, right");
  }

}  // namespace hypernorm
