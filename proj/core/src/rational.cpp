#include "hypernorm/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "hypernorm/error.hpp"

namespace hypernorm {

  namespace {
    bool all_digits(std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
    }

    void check_unit_interval(mpq_class const& q) {
      if (sgn(q) < 0 || cmp(q, 1) > 0) {
        throw RangeError("rational " + q.get_str() + " lies outside [0,1]");
      }
    }
  }  // namespace

  Q01::Q01(mpq_class const& q) : q_(q) {
    q_.canonicalize();
    check_unit_interval(q_);
  }

  Q01::Q01(long num, unsigned long den) {
    if (den == 0) {
      throw RangeError("zero denominator");
    }
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
    check_unit_interval(q_);
  }

  Q01 Q01::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den
        = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational \"" + std::string(text)
                       + "\" (expected num/den)");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    return Q01(mpq_class(n, d));
  }

  std::string Q01::str() const {
    return q_.get_str();
  }

  QUnit::QUnit(Q01 const& q) : q_(q) {
    if (!q_.is_interior()) {
      throw RangeError("weight " + q_.str()
                       + " is not strictly inside the open interval (0,1)");
    }
  }

  QUnit::QUnit(long num, unsigned long den) : QUnit(Q01(num, den)) {}

  QUnit QUnit::parse(std::string_view text) {
    return QUnit(Q01::parse(text));
  }

  std::ostream& operator<<(std::ostream& os, Q01 const& q) {
    return os << q.str();
  }

  std::ostream& operator<<(std::ostream& os, QUnit const& q) {
    return os << q.str();
  }

  Q01 q_mul(Q01 const& a, Q01 const& b) {
    return Q01(mpq_class(a.value() * b.value()));
  }

  QUnit q_mul(QUnit const& a, QUnit const& b) {
    return QUnit(q_mul(a.q01(), b.q01()));
  }

  Q01 q_star(Q01 const& r) {
    return Q01(mpq_class(1 - r.value()));
  }

  QUnit q_star(QUnit const& r) {
    return QUnit(q_star(r.q01()));
  }

  QUnit q_fusion(QUnit const& r, QUnit const& s) {
    mpq_class rs = r.value() * s.value();
    return QUnit(Q01(mpq_class(r.value() * (1 - s.value()) / (1 - rs))));
  }

  Q01 q_add(Q01 const& a, Q01 const& b) {
    return Q01(mpq_class(a.value() + b.value()));
  }

  Q01 q_sub(Q01 const& a, Q01 const& b) {
    return Q01(mpq_class(a.value() - b.value()));
  }

  Q01 q_div(Q01 const& a, Q01 const& b) {
    if (b.is_zero()) {
      throw ZeroMassError();
    }
    return Q01(mpq_class(a.value() / b.value()));
  }

  std::vector<QUnit> qunit_grid(unsigned max_den) {
    std::vector<QUnit> grid;
    for (unsigned den = 2; den <= max_den; ++den) {
      for (unsigned num = 1; num < den; ++num) {
        QUnit q(num, den);
        if (q.value().get_den() == den) {
          grid.push_back(q);
        }
      }
    }
    std::sort(grid.begin(), grid.end());
    return grid;
  }

}  // namespace hypernorm
