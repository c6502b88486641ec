#ifndef HYPERNORM_MONADS_HPP_
#define HYPERNORM_MONADS_HPP_

// A uniform record for the linear exponential monads in this library. Each
// instance knows its unit, functor action and multiplication, and the
// isomorphism split/merge between T(A_1 + ... + A_n) and the n-fold tensor
// of the TA_i in its monoidal structure. Hypernormalisation is derived from
// these alone; some instances also carry an independent closed formula.

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypernorm/star.hpp"
#include "hypernorm/tagged_sum.hpp"
#include "hypernorm/tricocycloid.hpp"
#include "hypernorm/value.hpp"

namespace hypernorm {

  enum class TensorKind {
    giry_star,  // A + (0,1) x A x B + B
    cartesian,  // A x B
    bar_times,  // A + A x B + B
  };

  std::string_view tensor_kind_name(TensorKind k);

  struct CartesianTuple {
    std::vector<Value> components;
    friend bool operator==(CartesianTuple const&, CartesianTuple const&)
        = default;
    friend auto operator<=>(CartesianTuple const&, CartesianTuple const&)
        = default;
  };

  using GiryNary    = NaryStarElem<GiryTricocycloid, Value>;
  using TrivialNary = NaryStarElem<TrivialTricocycloid, Value>;

  // An element of TA_1 (x) ... (x) TA_n in one of the three tensors.
  using TensorValue = std::variant<GiryNary, CartesianTuple, TrivialNary>;

  std::string tensor_str(TensorValue const& t);

  // Enumeration limits passed to an instance when it lists or samples its
  // values over a finite set of atoms.
  struct ValueBudget {
    std::size_t max_support = 2;  // points / elements / entries
    unsigned    max_den     = 6;  // weight denominators
  };

  using ValueMap = std::function<Value(Value const&)>;

  struct MonadInstance {
    std::string name;
    TensorKind  tensor_kind = TensorKind::giry_star;
    bool        is_affine   = false;
    bool        is_coaffine = false;
    ValueKind   value_kind  = ValueKind::dist;

    std::function<Value(Value const&)>                 unit;
    std::function<Value(ValueMap const&, Value const&)> fmap;
    std::function<Value(Value const&)>                 join;

    // T(A_1 + ... + A_n) -> tensor of TA_i, and back.
    std::function<TensorValue(Value const&, std::size_t)> split;
    std::function<Value(TensorValue const&)>              merge;

    // Optional closed formula for T(sum A_i) -> T(sum TA_i).
    std::function<Value(Value const&, std::size_t)> hypernorm_direct;

    // Throws unless the value is a well-formed T-value (e.g. nonempty for
    // the nonempty instances).
    std::function<void(Value const&)> validate;

    // Every T-value over `atoms` within the budget, smallest first.
    std::function<std::vector<Value>(std::vector<Value> const&,
                                     ValueBudget const&)>
        enumerate;

    // A random T-value over `atoms` within the budget.
    std::function<Value(std::vector<Value> const&, ValueBudget const&,
                        std::mt19937_64&)>
        sample;

    // Strictly smaller variants of a value, used to minimise counterexamples.
    std::function<std::vector<Value>(Value const&)> shrink;

    bool has_direct() const { return static_cast<bool>(hypernorm_direct); }
  };

  MonadInstance instance_dist();
  MonadInstance instance_multiset();
  MonadInstance instance_ne_multiset();
  MonadInstance instance_powerset();
  MonadInstance instance_ne_powerset();
  MonadInstance instance_multidist();
  MonadInstance instance_expectation();

  // All seven, in a fixed order.
  std::vector<MonadInstance> all_instances();

  // Accepts the canonical names and the short aliases D, M, S, Pf, Pne, Dm, E.
  MonadInstance instance_by_name(std::string_view name);

  std::vector<std::string> instance_names();

  // T(iota_i) applied componentwise: apply the unit of T to every component
  // of a tensor value, giving an element of the tensor of the TTA_i.
  TensorValue embed_units(MonadInstance const& m, TensorValue const& t);

  // merge . embed_units . split : T(sum A_i) -> T(sum TA_i).
  Value hypernorm_generic(MonadInstance const& m,
                          Value const&         t,
                          std::size_t          arity);

  // Throws SignatureError unless every tagged point of t lies in sig.
  void check_against(MonadInstance const& m,
                     SumSignature const&  sig,
                     Value const&         t);

  // Points of a T-value: the values it is built from, with repetition
  // removed.
  std::vector<Value> value_points(Value const& t);

  // Helpers for building sum values.
  Value      tagged_atom(std::size_t tag, std::string const& atom);
  std::vector<Value> sum_atoms(SumSignature const& sig);

}  // namespace hypernorm

#endif  // HYPERNORM_MONADS_HPP_
