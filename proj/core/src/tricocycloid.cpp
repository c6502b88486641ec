#include "hypernorm/tricocycloid.hpp"

namespace hypernorm {

  std::pair<QUnit, QUnit> v_giry(QUnit const& r, QUnit const& s) {
    return {q_mul(r, s), q_fusion(r, s)};
  }

  std::pair<QUnit, QUnit> v_giry_inv(QUnit const& p, QUnit const& q) {
    mpq_class r = p.value() + q.value() * (1 - p.value());
    return {QUnit(Q01(r)), QUnit(Q01(mpq_class(p.value() / r)))};
  }

  QUnit gamma_giry(QUnit const& r) {
    return q_star(r);
  }

}  // namespace hypernorm
