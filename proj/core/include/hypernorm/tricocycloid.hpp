#ifndef HYPERNORM_TRICOCYCLOID_HPP_
#define HYPERNORM_TRICOCYCLOID_HPP_

#include <array>
#include <compare>
#include <concepts>
#include <string_view>
#include <utility>

#include "hypernorm/rational.hpp"

namespace hypernorm {

  // The single element of a one-point set.
  struct Point {
    friend bool operator==(Point, Point) = default;
    friend std::strong_ordering operator<=>(Point, Point) = default;
  };

  // A tricocycloid (H, v) with symmetry gamma, in the cartesian category of
  // finite sets. `mass` is the bookkeeping type used when flattening an
  // iterated star element into its n-ary normal form: splitting a mass along
  // a mixing coordinate h, and recovering h from two component masses.
  template <typename T>
  concept Tricocycloid = requires(typename T::carrier const& h,
                                  typename T::mass const&    m) {
    typename T::carrier;
    typename T::mass;
    { T::name } -> std::convertible_to<std::string_view>;
    { T::v(h, h) } -> std::same_as<std::pair<typename T::carrier,
                                             typename T::carrier>>;
    { T::v_inv(h, h) } -> std::same_as<std::pair<typename T::carrier,
                                                 typename T::carrier>>;
    { T::gamma(h) } -> std::same_as<typename T::carrier>;
    { T::unit_mass() } -> std::same_as<typename T::mass>;
    { T::split_mass(h, m) } -> std::same_as<std::pair<typename T::mass,
                                                      typename T::mass>>;
    { T::join_mass(m, m) } -> std::same_as<typename T::carrier>;
    { T::add_mass(m, m) } -> std::same_as<typename T::mass>;
  };

  // v(r,s) = (rs, r s* / (rs)*)
  std::pair<QUnit, QUnit> v_giry(QUnit const& r, QUnit const& s);
  // v^-1(p,q) = (p + q p*, p / (p + q p*))
  std::pair<QUnit, QUnit> v_giry_inv(QUnit const& p, QUnit const& q);
  // gamma(r) = r*
  QUnit gamma_giry(QUnit const& r);

  struct GiryTricocycloid {
    using carrier = QUnit;
    using mass    = Q01;

    static constexpr std::string_view name = "giry";

    static std::pair<QUnit, QUnit> v(QUnit const& r, QUnit const& s) {
      return v_giry(r, s);
    }
    static std::pair<QUnit, QUnit> v_inv(QUnit const& p, QUnit const& q) {
      return v_giry_inv(p, q);
    }
    static QUnit gamma(QUnit const& r) {
      return gamma_giry(r);
    }

    static Q01 unit_mass() {
      return Q01::one();
    }
    static std::pair<Q01, Q01> split_mass(QUnit const& w, Q01 const& m) {
      return {q_mul(m, w), q_mul(m, q_star(w.q01()))};
    }
    static QUnit join_mass(Q01 const& left, Q01 const& right) {
      return QUnit(q_div(left, q_add(left, right)));
    }
    static Q01 add_mass(Q01 const& a, Q01 const& b) {
      return q_add(a, b);
    }
  };

  // The terminal tricocycloid: H = 1. Its star is A + A x B + B.
  struct TrivialTricocycloid {
    using carrier = Point;
    using mass    = Point;

    static constexpr std::string_view name = "trivial";

    static std::pair<Point, Point> v(Point, Point) {
      return {};
    }
    static std::pair<Point, Point> v_inv(Point, Point) {
      return {};
    }
    static Point gamma(Point) {
      return {};
    }
    static Point unit_mass() {
      return {};
    }
    static std::pair<Point, Point> split_mass(Point, Point) {
      return {};
    }
    static Point join_mass(Point, Point) {
      return {};
    }
    static Point add_mass(Point, Point) {
      return {};
    }
  };

  static_assert(Tricocycloid<GiryTricocycloid>);
  static_assert(Tricocycloid<TrivialTricocycloid>);

  template <Tricocycloid T>
  using HPair = std::pair<typename T::carrier, typename T::carrier>;

  template <Tricocycloid T>
  using HTriple = std::array<typename T::carrier, 3>;

  // Both legs of (v x 1)(1 x sigma)(v x 1) = (1 x v)(v x 1)(1 x v), where
  // sigma swaps the two adjacent H factors it is applied to.
  template <Tricocycloid T>
  std::pair<HTriple<T>, HTriple<T>> tricocycloid_axiom_sides(
      HTriple<T> const& x) {
    auto [a, b] = T::v(x[0], x[1]);
    // (a, b, x2) -> (a, x2, b)
    auto [c, d]  = T::v(a, x[2]);
    HTriple<T> lhs{c, d, b};

    auto [e, f] = T::v(x[1], x[2]);
    auto [g, h] = T::v(x[0], e);
    auto [i, j] = T::v(h, f);
    HTriple<T> rhs{g, i, j};
    return {lhs, rhs};
  }

  template <Tricocycloid T>
  bool check_tricocycloid_axiom(HTriple<T> const& x) {
    auto [lhs, rhs] = tricocycloid_axiom_sides<T>(x);
    return lhs == rhs;
  }

  // Both legs of (1 x gamma) v (1 x gamma) = v (gamma x 1) v.
  template <Tricocycloid T>
  std::pair<HPair<T>, HPair<T>> symmetry_axiom_sides(HPair<T> const& x) {
    auto [a, b] = T::v(x.first, T::gamma(x.second));
    HPair<T> lhs{a, T::gamma(b)};

    auto [c, d] = T::v(x.first, x.second);
    auto rhs    = T::v(T::gamma(c), d);
    return {lhs, rhs};
  }

  template <Tricocycloid T>
  bool check_symmetry_axiom(HPair<T> const& x) {
    auto [lhs, rhs] = symmetry_axiom_sides<T>(x);
    return lhs == rhs;
  }

}  // namespace hypernorm

#endif  // HYPERNORM_TRICOCYCLOID_HPP_
