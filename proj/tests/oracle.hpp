#ifndef HYPERNORM_TESTS_ORACLE_HPP_
#define HYPERNORM_TESTS_ORACLE_HPP_

// Reference semantics used by the tests: an element of an iterated Giry star
// denotes a probability distribution over its leaves. These functions
// compute that distribution by plain arithmetic on mpq_class, without going
// through the library's combinators.

#include <gmpxx.h>

#include <map>
#include <string>

#include "hypernorm/dist.hpp"
#include "hypernorm/star.hpp"

namespace oracle {

  using Weights = std::map<std::string, mpq_class>;

  inline void add(Weights& out, Weights const& w, mpq_class const& scale) {
    for (auto const& [k, v] : w) {
      mpq_class x = v * scale;
      if (sgn(x) != 0) {
        out[k] += x;
      }
    }
  }

  inline Weights flatten(std::string const& leaf) {
    return {{leaf, 1}};
  }

  inline Weights flatten(hypernorm::Dist<std::string> const& d) {
    Weights out;
    for (auto const& [x, m] : d) {
      out[x] = m.value();
    }
    return out;
  }

  template <typename X, typename Y>
  Weights flatten(
      hypernorm::StarElem<hypernorm::GiryTricocycloid, X, Y> const& e) {
    Weights out;
    if (e.is_left()) {
      add(out, flatten(e.left_value()), 1);
    } else if (e.is_right()) {
      add(out, flatten(e.right_value()), 1);
    } else {
      auto const& m = e.mid_value();
      add(out, flatten(m.left), m.weight.value());
      add(out, flatten(m.right), 1 - m.weight.value());
    }
    return out;
  }

  // r.x + r*.y
  inline Weights mix(mpq_class const& r, Weights const& x, Weights const& y) {
    Weights out;
    add(out, x, r);
    add(out, y, 1 - r);
    return out;
  }

}  // namespace oracle

#endif  // HYPERNORM_TESTS_ORACLE_HPP_
