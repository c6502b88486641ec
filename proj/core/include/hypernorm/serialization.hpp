#ifndef HYPERNORM_SERIALIZATION_HPP_
#define HYPERNORM_SERIALIZATION_HPP_

// JSON forms. Rationals are always strings ("1/3"). The outermost container
// of a monad value is rendered as JSON; the values inside it use the compact
// text form of parse_value.
//
//   distribution       {"1:a": "1/4", ...}
//   measure            {"1:a": "1/4", ...}   (singleton masses)
//   multiset           [{"x": "1:a", "count": 2}, ...]
//   set                ["1:a", ...]
//   multidistribution  [{"w": "1/2", "x": "a"}, ...]
//   tagged element     {"tag": 1, "atom": "a"}
//   star element       {"left": ...} | {"mid": {"w": "1/3", "x": ..., "y": ...}}
//                      | {"right": ...}
//   n-ary star         {"active": [1, 3], "weights": {"1": "1/2", ...},
//                       "parts": {"1": ..., "3": ...}}

#include <nlohmann/json.hpp>

#include <string>

#include "hypernorm/convex.hpp"
#include "hypernorm/monads.hpp"
#include "hypernorm/tagged_sum.hpp"
#include "hypernorm/value.hpp"

namespace hypernorm {

  using json = nlohmann::json;

  json  value_to_json(Value const& v);
  // `kind` resolves the shapes that JSON alone leaves ambiguous (an object
  // is a distribution or a measure, [] is a multiset or a set). `where`
  // names the field for error messages.
  Value value_from_json(json const&        j,
                        ValueKind          kind,
                        std::string const& where = "value");

  json         signature_to_json(SumSignature const& sig);
  SumSignature signature_from_json(json const&        j,
                                   std::string const& where = "signature");

  Q01   q01_from_json(json const& j, std::string const& where);
  QUnit qunit_from_json(json const& j, std::string const& where);

  json tensor_to_json(TensorValue const& t);

  json tagged_to_json(TaggedElem<std::string> const& e);
  TaggedElem<std::string> tagged_from_json(json const&        j,
                                           std::string const& where);

  // Distributions over atoms, e.g. {"a": "1/2", "b": "1/2"}; a bare atom
  // name is read as the Dirac distribution at it.
  json               atom_dist_to_json(Dist<std::string> const& d);
  Dist<std::string>  atom_dist_from_json(json const&        j,
                                         std::string const& where);
  Dist<TaggedElem<std::string>> tagged_dist_from_json(
      json const&        j,
      std::string const& where);
  json tagged_dist_to_json(Dist<TaggedElem<std::string>> const& d);

  template <typename X, typename Y, typename FX, typename FY>
  json star_to_json(GiryStar<X, Y> const& e, FX&& fx, FY&& fy) {
    using E = GiryStar<X, Y>;
    return e.visit(overloaded{
        [&](typename E::Left const& l) { return json{{"left", fx(l.value)}}; },
        [&](typename E::Mid const& m) {
          return json{{"mid",
                       {{"w", m.weight.str()},
                        {"x", fx(m.left)},
                        {"y", fy(m.right)}}}};
        },
        [&](typename E::Right const& r) {
          return json{{"right", fy(r.value)}};
        }});
  }

  template <typename X, typename FX>
  json nary_to_json(NaryStarElem<GiryTricocycloid, X> const& e, FX&& fx) {
    json active  = json::array();
    json weights = json::object();
    json parts   = json::object();
    for (auto const& [tag, p] : e.parts()) {
      active.push_back(tag);
      weights[std::to_string(tag)] = p.weight.str();
      parts[std::to_string(tag)]   = fx(p.value);
    }
    return json{{"active", active}, {"weights", weights}, {"parts", parts}};
  }

  // Star elements whose two sides are atom distributions.
  json        dist_star_to_json(DistStar<std::string> const& e);
  DistStar<std::string> dist_star_from_json(json const&        j,
                                            std::string const& where);

  // The data-bearing text of an exception, prefixed by the JSON location.
  std::string located(std::string const& where, std::string const& what);

}  // namespace hypernorm

#endif  // HYPERNORM_SERIALIZATION_HPP_
