#ifndef HYPERNORM_LAWS_HPP_
#define HYPERNORM_LAWS_HPP_

// Checks the equational laws of a monad instance by evaluating both legs of
// each diagram on every input within a budget, then on random inputs.
// Failures are data: a report carries the first (shrunk) counterexample.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hypernorm/monads.hpp"
#include "hypernorm/serialization.hpp"

namespace hypernorm {

  enum class LawId {
    monad_left_unit,
    monad_right_unit,
    monad_assoc,
    iso_split_merge,
    convex_axioms,
    star_pentagon,
    star_hexagon,
    tricocycloid_axiom,
    tricocycloid_symmetry,
    phi_matches_oracle,
    hyper_direct_formula,
    hyper_left_inverse,
    hyper_idempotent,
    hyper_natural,
    hyper_kleisli_natural,
    hyper_destroy_output,
    hyper_trivial_input,
    diagonal_idempotent,
    expectation_d_iso,
  };

  std::vector<LawId> all_laws();
  std::string_view   law_name(LawId law);  // e.g. "hyper.left_inverse"
  LawId              law_from_name(std::string_view name);

  struct Budget {
    std::size_t   max_carrier_size         = 3;
    std::size_t   max_tags                 = 3;
    unsigned      weight_denominator_bound = 6;
    std::size_t   random_cases             = 1000;
    std::uint64_t rng_seed                 = 0;
    // Largest support (points, elements or entries) of a value in the
    // exhaustive phase; random cases may use up to max_carrier_size + 1.
    std::size_t exhaustive_support = 2;

    void validate() const;
  };

  enum class Verdict {
    pass,
    fail,           // an unexpected counterexample
    expected_fail,  // a predicted failure, with its counterexample
    inconclusive,   // a predicted failure for which no witness was found
  };

  std::string_view verdict_name(Verdict v);

  // What the theory predicts for a (law, instance) pair.
  enum class Expectation {
    holds,
    fails,  // documented failure; a witness must be found
  };

  struct LawReport {
    LawId                law;
    std::string          instance;
    Verdict              verdict = Verdict::pass;
    Expectation          expected = Expectation::holds;
    std::optional<json>  counterexample;
    std::size_t          cases_run = 0;

    // True iff the verdict is the one the expectation matrix predicts.
    bool matches_expectation() const;
  };

  bool        law_applicable(LawId law, MonadInstance const& m);
  Expectation expected_outcome(LawId law, MonadInstance const& m);

  // Throws InapplicableLaw if the instance cannot express the diagram.
  LawReport run_law(LawId law, MonadInstance const& m, Budget const& b);

  // Every applicable law, in the order of all_laws().
  std::vector<LawReport> run_suite(MonadInstance const& m, Budget const& b);

  bool all_match(std::vector<LawReport> const& reports);

  json report_to_json(LawReport const& r);
  json reports_to_json(std::vector<LawReport> const& rs);

  ////////////////////////////////////////////////////////////////////////
  // Inputs
  ////////////////////////////////////////////////////////////////////////

  // Sum signatures with 1..max_tags components of 1..max_carrier_size atoms
  // each, smallest first.
  std::vector<SumSignature> budget_signatures(Budget const& b);

  // A single carrier of n atoms named a, b, c, ...
  Carrier letters_carrier(std::string const& name,
                          std::size_t        n,
                          std::size_t        pool = 0);

  // A random signature within the budget.
  SumSignature random_signature(Budget const& b, std::mt19937_64& rng);

  // One function per tag, from the atoms of A_i to values over B_i (atoms
  // of B_i for plain maps, T-values for Kleisli maps).
  struct TagMaps {
    SumSignature                        codomain;
    std::vector<std::map<Value, Value>> maps;  // maps[i] for tag i + 1

    Value apply(std::size_t tag, Value const& atom) const;
    json  to_json() const;
  };

  // Deterministic (seeded by the budget seed and the signature) families
  // of tag-indexed maps used by the naturality squares.
  std::vector<TagMaps> plain_map_generator(Budget const&       b,
                                           SumSignature const& sig,
                                           std::size_t         count);
  std::vector<TagMaps> kleisli_generator(Budget const&        b,
                                         SumSignature const&  sig,
                                         MonadInstance const& m,
                                         std::size_t          count);

  ////////////////////////////////////////////////////////////////////////
  // Typed checks shared with the acceptance harness
  ////////////////////////////////////////////////////////////////////////

  struct CheckTally {
    std::size_t         cases = 0;
    std::size_t         failures = 0;
    std::optional<json> first_failure;

    template <typename Describe>
    void record(bool ok, Describe const& describe) {
      ++cases;
      if (!ok) {
        if (failures == 0) {
          first_failure = describe();
        }
        ++failures;
      }
    }
    void merge(CheckTally const& other);
  };

  // Rebracketing and symmetry axioms of the Giry tricocycloid over all
  // grid triples / pairs with denominators <= max_den, plus random ones.
  CheckTally check_giry_tricocycloid(unsigned         max_den,
                                     std::size_t      random_cases,
                                     std::mt19937_64& rng);

  // Pentagon (4-fold) and hexagon (3-fold) on stars of singleton carriers
  // with weights of denominator <= max_den; giry or trivial tricocycloid.
  CheckTally check_star_coherence(bool giry, unsigned max_den);

  // Convex-space axioms for D{A} * D{B}, the coproduct of the free convex
  // spaces on carriers of the given sizes, with all weights drawn from
  // denominators <= max_den. The rebracketing axiom is checked on every
  // triple when `full_rebracket` is set, otherwise on `sampled` random ones.
  struct ConvexAxiomPlan {
    std::size_t size_a = 2;
    std::size_t size_b = 2;
    unsigned    max_den = 4;
    bool        full_rebracket = true;
    std::size_t sampled = 0;
  };
  CheckTally check_convex_star_axioms(ConvexAxiomPlan const& plan,
                                      std::mt19937_64&       rng);

  // phi = phi_oracle and the two round trips, on distributions over
  // size_a + size_b atoms with denominators <= max_den, every support size.
  CheckTally check_phi(std::size_t size_a, std::size_t size_b, unsigned max_den);

  // hypernorm_jacobs = hypernorm_generic for D on the same inputs.
  CheckTally check_jacobs_composite(std::size_t size_a,
                                    std::size_t size_b,
                                    unsigned    max_den);

  // E = D on carriers of size 1..max_size: measures of all subsets,
  // additivity, unit, join and pushforward under the translation, and the
  // splitting of integrals against h(r, w, g).
  CheckTally check_expectation_iso(std::size_t max_size, unsigned max_den);

}  // namespace hypernorm

#endif  // HYPERNORM_LAWS_HPP_
