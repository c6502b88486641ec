#ifndef HYPERNORM_VALUE_HPP_
#define HYPERNORM_VALUE_HPP_

// A dynamically typed, immutable value: an atom, a tagged value, or one of
// the container kinds produced by the monad instances. Values nest freely,
// which is what lets a single instance record act on X, TX, TTX and sums of
// these without a separate C++ type for each.

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "hypernorm/collections.hpp"
#include "hypernorm/dist.hpp"
#include "hypernorm/expectation.hpp"
#include "hypernorm/tagged_sum.hpp"

namespace hypernorm {

  enum class ValueKind {
    atom,
    tagged,
    dist,
    bag,
    set,
    multidist,
    finadd,
  };

  std::string_view kind_name(ValueKind k);

  class Value {
   public:
    static Value atom(std::string name);
    static Value tagged(std::size_t tag, Value inner);
    static Value dist(Dist<Value> d);
    static Value bag(Bag<Value> b);
    static Value set(FinSet<Value> s);
    static Value multidist(MultiDist<Value> m);
    static Value finadd(FinAddProb<Value> e);

    ValueKind kind() const noexcept;
    bool      is(ValueKind k) const noexcept { return kind() == k; }

    // Each accessor throws SignatureError if the value has another kind.
    std::string const&        as_atom() const;
    TaggedElem<Value> const&  as_tagged() const;
    Dist<Value> const&        as_dist() const;
    Bag<Value> const&         as_bag() const;
    FinSet<Value> const&      as_set() const;
    MultiDist<Value> const&   as_multidist() const;
    FinAddProb<Value> const&  as_finadd() const;

    // Compact text form; see parse_value.
    std::string str() const;

    friend bool                 operator==(Value const& a, Value const& b);
    friend std::strong_ordering operator<=>(Value const& a, Value const& b);

   private:
    struct Node;
    explicit Value(std::shared_ptr<Node const> node);

    std::shared_ptr<Node const> node_;
  };

  // Parses the compact text form:
  //   atom       [A-Za-z_*][A-Za-z0-9_.*'-]*
  //   tagged     N:value
  //   dist       {value:q, ...}
  //   finadd     E{value:q, ...}
  //   bag        <value, ...>
  //   set        [value, ...]
  //   multidist  (q*value, ...)
  // Whitespace between tokens is ignored. Throws ParseError with the
  // offending column.
  Value parse_value(std::string_view text);

  bool is_atom_name(std::string_view name);

  std::ostream& operator<<(std::ostream& os, Value const& v);

}  // namespace hypernorm

#endif  // HYPERNORM_VALUE_HPP_
