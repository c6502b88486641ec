#ifndef HYPERNORM_RATIONAL_HPP_
#define HYPERNORM_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hypernorm {

  // Exact rational in the closed unit interval [0,1], always in lowest terms.
  class Q01 {
   public:
    Q01() = default;
    explicit Q01(mpq_class const& q);
    Q01(long num, unsigned long den);

    static Q01 zero() { return Q01(); }
    static Q01 one() { return Q01(1, 1); }

    // Accepts "num/den", "0" and "1". Non-reduced input is reduced.
    static Q01 parse(std::string_view text);

    mpq_class const& value() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return cmp(q_, 1) == 0; }
    bool is_interior() const noexcept { return !is_zero() && !is_one(); }

    std::string str() const;

    friend bool operator==(Q01 const& a, Q01 const& b) noexcept {
      return cmp(a.q_, b.q_) == 0;
    }
    friend std::strong_ordering operator<=>(Q01 const& a,
                                            Q01 const& b) noexcept {
      return cmp(a.q_, b.q_) <=> 0;
    }

   private:
    mpq_class q_;
  };

  // Exact rational in the open interval (0,1).
  class QUnit {
   public:
    explicit QUnit(Q01 const& q);
    QUnit(long num, unsigned long den);

    static QUnit parse(std::string_view text);

    Q01 const&        q01() const noexcept { return q_; }
    mpq_class const&  value() const noexcept { return q_.value(); }
    operator Q01 const&() const noexcept { return q_; }  // NOLINT

    std::string str() const { return q_.str(); }

    friend bool operator==(QUnit const&, QUnit const&) = default;
    friend std::strong_ordering operator<=>(QUnit const& a,
                                            QUnit const& b) noexcept {
      return a.q_ <=> b.q_;
    }

   private:
    Q01 q_;
  };

  std::ostream& operator<<(std::ostream& os, Q01 const& q);
  std::ostream& operator<<(std::ostream& os, QUnit const& q);

  Q01   q_mul(Q01 const& a, Q01 const& b);
  QUnit q_mul(QUnit const& a, QUnit const& b);

  // r* = 1 - r
  Q01   q_star(Q01 const& r);
  QUnit q_star(QUnit const& r);

  // r(1-s)/(1-rs), the second coordinate of the Giry tricocycloid.
  QUnit q_fusion(QUnit const& r, QUnit const& s);

  // Checked arithmetic: each throws RangeError if the result leaves [0,1].
  Q01 q_add(Q01 const& a, Q01 const& b);
  Q01 q_sub(Q01 const& a, Q01 const& b);
  // a / b, requires b > 0 and a <= b.
  Q01 q_div(Q01 const& a, Q01 const& b);

  // Every element of (0,1) with denominator <= max_den, ascending.
  std::vector<QUnit> qunit_grid(unsigned max_den);

}  // namespace hypernorm

#endif  // HYPERNORM_RATIONAL_HPP_
