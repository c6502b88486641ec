#include <set>

#include "hypernorm/error.hpp"
#include "hypernorm/laws.hpp"
#include "instance_support.hpp"

namespace hypernorm {

  namespace {
    std::string_view const kPools[] = {"abcd", "xyzw", "pqrs", "ijkl",
                                       "mnoh", "stuv", "efgh"};

    std::uint64_t fnv1a(std::string const& s) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    std::uint64_t signature_seed(Budget const& b, SumSignature const& sig,
                                 std::string const& salt) {
      return b.rng_seed ^ fnv1a(signature_to_json(sig).dump() + salt);
    }

    // The codomain carrier for tag i has min(|A_i|, 2) atoms.
    SumSignature codomain_for(SumSignature const& sig) {
      std::vector<Carrier> comps;
      for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
        std::size_t n = std::min<std::size_t>(sig.component(tag).size(), 2);
        comps.push_back(
            letters_carrier("B" + std::to_string(tag), n, 3 + tag));
      }
      return SumSignature(std::move(comps));
    }

    std::vector<TagMaps> dedupe_maps(std::vector<TagMaps> in,
                                     std::size_t          count) {
      std::set<std::vector<std::map<Value, Value>>> seen;
      std::vector<TagMaps>                          out;
      for (auto& m : in) {
        if (out.size() == count) {
          break;
        }
        if (seen.insert(m.maps).second) {
          out.push_back(std::move(m));
        }
      }
      return out;
    }
  }  // namespace

  void Budget::validate() const {
    if (max_carrier_size == 0 || max_tags == 0 || weight_denominator_bound < 2
        || exhaustive_support == 0) {
      throw RangeError(
          "budget limits must be positive (denominator bound at least 2)");
    }
  }

  Carrier letters_carrier(std::string const& name,
                          std::size_t        n,
                          std::size_t        pool) {
    std::vector<std::string> atoms;
    for (std::size_t k = 0; k < n; ++k) {
      if (pool < std::size(kPools) && k < kPools[pool].size()) {
        atoms.emplace_back(1, kPools[pool][k]);
      } else {
        atoms.push_back("u" + std::to_string(pool) + "_" + std::to_string(k));
      }
    }
    return Carrier(name, std::move(atoms));
  }

  std::vector<SumSignature> budget_signatures(Budget const& b) {
    std::vector<SumSignature> out;
    for (std::size_t k = 1; k <= b.max_tags; ++k) {
      std::vector<std::size_t> sizes(k, 1);
      while (true) {
        std::vector<Carrier> comps;
        for (std::size_t i = 0; i < k; ++i) {
          comps.push_back(letters_carrier(std::string(1, char('A' + i)),
                                          sizes[i], i));
        }
        out.emplace_back(std::move(comps));
        std::size_t i = k;
        while (i > 0 && sizes[i - 1] == b.max_carrier_size) {
          sizes[--i] = 1;
        }
        if (i == 0) {
          break;
        }
        ++sizes[i - 1];
      }
    }
    return out;
  }

  SumSignature random_signature(Budget const& b, std::mt19937_64& rng) {
    std::size_t          k = 1 + detail::uniform_index(b.max_tags, rng);
    std::vector<Carrier> comps;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t n = 1 + detail::uniform_index(b.max_carrier_size, rng);
      comps.push_back(letters_carrier(std::string(1, char('A' + i)), n, i));
    }
    return SumSignature(std::move(comps));
  }

  Value TagMaps::apply(std::size_t tag, Value const& atom) const {
    auto const& table = maps.at(tag - 1);
    auto        it    = table.find(atom);
    if (it == table.end()) {
      throw SignatureError("map for tag " + std::to_string(tag)
                           + " is undefined at " + atom.str());
    }
    return it->second;
  }

  json TagMaps::to_json() const {
    json out = json::object();
    for (std::size_t i = 0; i < maps.size(); ++i) {
      json table = json::object();
      for (auto const& [x, y] : maps[i]) {
        table[x.str()] = y.str();
      }
      out[std::to_string(i + 1)] = table;
    }
    return json{{"codomain", signature_to_json(codomain)}, {"maps", out}};
  }

  std::vector<TagMaps> plain_map_generator(Budget const&       b,
                                           SumSignature const& sig,
                                           std::size_t         count) {
    SumSignature         cod = codomain_for(sig);
    std::mt19937_64      rng(signature_seed(b, sig, "plain"));
    std::vector<TagMaps> out;
    // k -> k mod |B_i|, then every atom to the first atom, then random.
    for (int shape = 0; shape < 2; ++shape) {
      TagMaps t{cod, {}};
      for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
        auto const&            as = sig.component(tag).atoms();
        auto const&            bs = cod.component(tag).atoms();
        std::map<Value, Value> table;
        for (std::size_t k = 0; k < as.size(); ++k) {
          table.emplace(Value::atom(as[k]),
                        Value::atom(bs[shape == 0 ? k % bs.size() : 0]));
        }
        t.maps.push_back(std::move(table));
      }
      out.push_back(std::move(t));
    }
    for (std::size_t n = 0; n < 4 * count; ++n) {
      TagMaps t{cod, {}};
      for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
        auto const&            bs = cod.component(tag).atoms();
        std::map<Value, Value> table;
        for (auto const& a : sig.component(tag).atoms()) {
          table.emplace(Value::atom(a),
                        Value::atom(bs[detail::uniform_index(bs.size(), rng)]));
        }
        t.maps.push_back(std::move(table));
      }
      out.push_back(std::move(t));
    }
    return dedupe_maps(std::move(out), count);
  }

  std::vector<TagMaps> kleisli_generator(Budget const&        b,
                                         SumSignature const&  sig,
                                         MonadInstance const& m,
                                         std::size_t          count) {
    SumSignature    cod = codomain_for(sig);
    std::mt19937_64 rng(signature_seed(b, sig, "kleisli:" + m.name));
    ValueBudget     vb{b.exhaustive_support, b.weight_denominator_bound};

    std::vector<std::vector<Value>> targets;
    for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
      std::vector<Value> atoms;
      for (auto const& a : cod.component(tag).atoms()) {
        atoms.push_back(Value::atom(a));
      }
      targets.push_back(m.enumerate(atoms, vb));
    }

    std::vector<TagMaps> out;
    // First the Kleisli map of k -> k mod |B_i|, then random choices.
    {
      TagMaps t{cod, {}};
      for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
        auto const&            as = sig.component(tag).atoms();
        auto const&            bs = cod.component(tag).atoms();
        std::map<Value, Value> table;
        for (std::size_t k = 0; k < as.size(); ++k) {
          table.emplace(Value::atom(as[k]),
                        m.unit(Value::atom(bs[k % bs.size()])));
        }
        t.maps.push_back(std::move(table));
      }
      out.push_back(std::move(t));
    }
    for (std::size_t n = 0; n < 4 * count; ++n) {
      TagMaps t{cod, {}};
      for (std::size_t tag = 1; tag <= sig.arity(); ++tag) {
        auto const&            ts = targets[tag - 1];
        std::map<Value, Value> table;
        for (auto const& a : sig.component(tag).atoms()) {
          table.emplace(Value::atom(a),
                        ts[detail::uniform_index(ts.size(), rng)]);
        }
        t.maps.push_back(std::move(table));
      }
      out.push_back(std::move(t));
    }
    return dedupe_maps(std::move(out), count);
  }

}  // namespace hypernorm
