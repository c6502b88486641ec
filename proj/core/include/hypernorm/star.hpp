#ifndef HYPERNORM_STAR_HPP_
#define HYPERNORM_STAR_HPP_

// The star tensor A * B = A + (H x A x B) + B generated by a tricocycloid H,
// with its associator, symmetry, unitors and n-ary normal form.

#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "hypernorm/error.hpp"
#include "hypernorm/tricocycloid.hpp"

namespace hypernorm {

  // The empty set; the unit of every star tensor. It has no values.
  struct Empty {
    Empty() = delete;
    friend bool operator==(Empty const&, Empty const&) = default;
    friend std::strong_ordering operator<=>(Empty const&, Empty const&)
        = default;
  };

  template <typename X>
  struct StarLeft {
    X value;
    friend bool operator==(StarLeft const&, StarLeft const&) = default;
    friend auto operator<=>(StarLeft const&, StarLeft const&) = default;
  };

  template <typename H, typename X, typename Y>
  struct StarMid {
    H weight;
    X left;
    Y right;
    friend bool operator==(StarMid const&, StarMid const&) = default;
    friend auto operator<=>(StarMid const&, StarMid const&) = default;
  };

  template <typename Y>
  struct StarRight {
    Y value;
    friend bool operator==(StarRight const&, StarRight const&) = default;
    friend auto operator<=>(StarRight const&, StarRight const&) = default;
  };

  template <Tricocycloid T, typename X, typename Y>
  class StarElem {
   public:
    using tricocycloid = T;
    using weight_type  = typename T::carrier;
    using left_type    = X;
    using right_type   = Y;
    using Left         = StarLeft<X>;
    using Mid          = StarMid<weight_type, X, Y>;
    using Right        = StarRight<Y>;

    static StarElem left(X x) {
      return StarElem(Left{std::move(x)});
    }
    static StarElem mid(weight_type w, X x, Y y) {
      return StarElem(Mid{std::move(w), std::move(x), std::move(y)});
    }
    static StarElem right(Y y) {
      return StarElem(Right{std::move(y)});
    }

    bool is_left() const noexcept {
      return std::holds_alternative<Left>(alt_);
    }
    bool is_mid() const noexcept {
      return std::holds_alternative<Mid>(alt_);
    }
    bool is_right() const noexcept {
      return std::holds_alternative<Right>(alt_);
    }

    X const& left_value() const {
      return std::get<Left>(alt_).value;
    }
    Mid const& mid_value() const {
      return std::get<Mid>(alt_);
    }
    Y const& right_value() const {
      return std::get<Right>(alt_).value;
    }

    template <typename F>
    decltype(auto) visit(F&& f) const {
      return std::visit(std::forward<F>(f), alt_);
    }

    friend bool operator==(StarElem const&, StarElem const&) = default;
    friend auto operator<=>(StarElem const&, StarElem const&) = default;

   private:
    explicit StarElem(std::variant<Left, Mid, Right> alt)
        : alt_(std::move(alt)) {}

    std::variant<Left, Mid, Right> alt_;
  };

  template <typename E>
  struct is_star_elem : std::false_type {};

  template <Tricocycloid T, typename X, typename Y>
  struct is_star_elem<StarElem<T, X, Y>> : std::true_type {};

  template <typename E>
  inline constexpr bool is_star_elem_v = is_star_elem<E>::value;

  template <typename... Fs>
  struct overloaded : Fs... {
    using Fs::operator()...;
  };
  template <typename... Fs>
  overloaded(Fs...) -> overloaded<Fs...>;

  ////////////////////////////////////////////////////////////////////////
  // Structure maps
  ////////////////////////////////////////////////////////////////////////

  // (A * B) * C -> A * (B * C). Only the H H A B C summand is non-trivial:
  // it goes through v x 1 x 1 x 1 followed by the middle swap.
  template <Tricocycloid T, typename A, typename B, typename C>
  StarElem<T, A, StarElem<T, B, C>> star_assoc(
      StarElem<T, StarElem<T, A, B>, C> const& e) {
    using AB  = StarElem<T, A, B>;
    using BC  = StarElem<T, B, C>;
    using Out = StarElem<T, A, BC>;
    return e.visit(overloaded{
        [](typename StarElem<T, AB, C>::Left const& l) -> Out {
          return l.value.visit(overloaded{
              [](typename AB::Left const& a) { return Out::left(a.value); },
              [](typename AB::Mid const& m) {
                return Out::mid(m.weight, m.left, BC::left(m.right));
              },
              [](typename AB::Right const& b) {
                return Out::right(BC::left(b.value));
              }});
        },
        [](typename StarElem<T, AB, C>::Mid const& outer) -> Out {
          return outer.left.visit(overloaded{
              [&](typename AB::Left const& a) {
                return Out::mid(outer.weight, a.value, BC::right(outer.right));
              },
              [&](typename AB::Mid const& inner) {
                auto [p, q] = T::v(outer.weight, inner.weight);
                return Out::mid(p, inner.left,
                                BC::mid(q, inner.right, outer.right));
              },
              [&](typename AB::Right const& b) {
                return Out::right(BC::mid(outer.weight, b.value, outer.right));
              }});
        },
        [](typename StarElem<T, AB, C>::Right const& c) -> Out {
          return Out::right(BC::right(c.value));
        }});
  }

  // A * (B * C) -> (A * B) * C, using v^-1 on the H A H B C summand.
  template <Tricocycloid T, typename A, typename B, typename C>
  StarElem<T, StarElem<T, A, B>, C> star_assoc_inv(
      StarElem<T, A, StarElem<T, B, C>> const& e) {
    using AB  = StarElem<T, A, B>;
    using BC  = StarElem<T, B, C>;
    using Out = StarElem<T, AB, C>;
    return e.visit(overloaded{
        [](typename StarElem<T, A, BC>::Left const& a) -> Out {
          return Out::left(AB::left(a.value));
        },
        [](typename StarElem<T, A, BC>::Mid const& outer) -> Out {
          return outer.right.visit(overloaded{
              [&](typename BC::Left const& b) {
                return Out::left(AB::mid(outer.weight, outer.left, b.value));
              },
              [&](typename BC::Mid const& inner) {
                auto [r, s] = T::v_inv(outer.weight, inner.weight);
                return Out::mid(r, AB::mid(s, outer.left, inner.left),
                                inner.right);
              },
              [&](typename BC::Right const& c) {
                return Out::mid(outer.weight, AB::left(outer.left), c.value);
              }});
        },
        [](typename StarElem<T, A, BC>::Right const& r) -> Out {
          return r.value.visit(overloaded{
              [](typename BC::Left const& b) {
                return Out::left(AB::right(b.value));
              },
              [](typename BC::Mid const& m) {
                return Out::mid(m.weight, AB::right(m.left), m.right);
              },
              [](typename BC::Right const& c) { return Out::right(c.value); }});
        }});
  }

  // A * B -> B * A via gamma on the H A B summand.
  template <Tricocycloid T, typename A, typename B>
  StarElem<T, B, A> star_sym(StarElem<T, A, B> const& e) {
    using Out = StarElem<T, B, A>;
    return e.visit(overloaded{
        [](typename StarElem<T, A, B>::Left const& a) {
          return Out::right(a.value);
        },
        [](typename StarElem<T, A, B>::Mid const& m) {
          return Out::mid(T::gamma(m.weight), m.right, m.left);
        },
        [](typename StarElem<T, A, B>::Right const& b) {
          return Out::left(b.value);
        }});
  }

  // f * g = f + (H x f x g) + g, for arbitrary functions f and g.
  template <Tricocycloid T, typename A, typename B, typename F, typename G>
  auto star_map(F&& f, G&& g, StarElem<T, A, B> const& e) {
    using A2  = std::decay_t<std::invoke_result_t<F&, A const&>>;
    using B2  = std::decay_t<std::invoke_result_t<G&, B const&>>;
    using Out = StarElem<T, A2, B2>;
    return e.visit(overloaded{
        [&](typename StarElem<T, A, B>::Left const& a) {
          return Out::left(f(a.value));
        },
        [&](typename StarElem<T, A, B>::Mid const& m) {
          return Out::mid(m.weight, f(m.left), g(m.right));
        },
        [&](typename StarElem<T, A, B>::Right const& b) {
          return Out::right(g(b.value));
        }});
  }

  // A * 0 -> A
  template <Tricocycloid T, typename A>
  A star_unit_elim(StarElem<T, A, Empty> const& e) {
    if (!e.is_left()) {
      throw SignatureError("A * 0 is inhabited only by left(a)");
    }
    return e.left_value();
  }

  // 0 * B -> B
  template <Tricocycloid T, typename B>
  B star_unit_elim_right(StarElem<T, Empty, B> const& e) {
    if (!e.is_right()) {
      throw SignatureError("0 * B is inhabited only by right(b)");
    }
    return e.right_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // n-ary normal form
  ////////////////////////////////////////////////////////////////////////

  template <Tricocycloid T, typename X>
  struct NaryPart {
    typename T::mass weight;
    X                value;
    friend bool operator==(NaryPart const&, NaryPart const&) = default;
    friend auto operator<=>(NaryPart const&, NaryPart const&) = default;
  };

  // An element of the n-fold star X_1 * ... * X_n, independent of bracketing:
  // a nonempty set of active tags, each carrying a part and (for the Giry
  // tricocycloid) a positive weight, the weights summing to 1.
  template <Tricocycloid T, typename X>
  class NaryStarElem {
   public:
    using Parts = std::map<std::size_t, NaryPart<T, X>>;

    explicit NaryStarElem(Parts parts) : parts_(std::move(parts)) {
      if (parts_.empty()) {
        throw SignatureError("n-ary star element needs an active tag");
      }
      if (parts_.begin()->first == 0) {
        throw SignatureError("tags are 1-based");
      }
      if constexpr (std::same_as<typename T::mass, Q01>) {
        mpq_class total;
        for (auto const& [tag, p] : parts_) {
          if (p.weight.is_zero()) {
            throw RangeError("active tag " + std::to_string(tag)
                             + " has zero weight");
          }
          total += p.weight.value();
        }
        if (cmp(total, 1) != 0) {
          throw RangeError("n-ary star weights sum to " + total.get_str()
                           + ", not 1");
        }
      }
    }

    Parts const& parts() const noexcept { return parts_; }

    std::vector<std::size_t> active() const {
      std::vector<std::size_t> tags;
      for (auto const& kv : parts_) {
        tags.push_back(kv.first);
      }
      return tags;
    }

    bool contains(std::size_t tag) const {
      return parts_.count(tag) != 0;
    }
    typename T::mass const& weight(std::size_t tag) const {
      return parts_.at(tag).weight;
    }
    X const& part(std::size_t tag) const {
      return parts_.at(tag).value;
    }
    std::size_t max_tag() const {
      return parts_.rbegin()->first;
    }

    friend bool operator==(NaryStarElem const&, NaryStarElem const&)
        = default;
    friend auto operator<=>(NaryStarElem const&, NaryStarElem const&)
        = default;

   private:
    Parts parts_;
  };

  // Apply f to every part, keeping tags and weights.
  template <Tricocycloid T, typename X, typename F>
  auto nary_map(F&& f, NaryStarElem<T, X> const& e) {
    using Y = std::decay_t<std::invoke_result_t<F&, X const&>>;
    typename NaryStarElem<T, Y>::Parts out;
    for (auto const& [tag, p] : e.parts()) {
      out.emplace(tag, NaryPart<T, Y>{p.weight, f(p.value)});
    }
    return NaryStarElem<T, Y>(std::move(out));
  }

  // Number of Leaf-typed positions in an iterated star type.
  template <typename E, typename Leaf>
  struct star_leaf_count {
    static constexpr std::size_t value = 1;
  };

  template <Tricocycloid T, typename X, typename Y, typename Leaf>
    requires(!std::same_as<StarElem<T, X, Y>, Leaf>)
  struct star_leaf_count<StarElem<T, X, Y>, Leaf> {
    static constexpr std::size_t value
        = star_leaf_count<X, Leaf>::value + star_leaf_count<Y, Leaf>::value;
  };

  namespace detail {
    template <Tricocycloid T, typename Leaf, typename E>
    void collect_leaves(E const&                             e,
                        std::size_t                          offset,
                        typename T::mass const&              m,
                        typename NaryStarElem<T, Leaf>::Parts& out) {
      if constexpr (std::same_as<E, Leaf>) {
        out.emplace(offset + 1, NaryPart<T, Leaf>{m, e});
      } else {
        static_assert(is_star_elem_v<E>, "leaf type mismatch");
        using X = typename E::left_type;
        constexpr std::size_t shift = star_leaf_count<X, Leaf>::value;
        e.visit(overloaded{
            [&](typename E::Left const& l) {
              collect_leaves<T, Leaf>(l.value, offset, m, out);
            },
            [&](typename E::Mid const& mid) {
              auto [ml, mr] = T::split_mass(mid.weight, m);
              collect_leaves<T, Leaf>(mid.left, offset, ml, out);
              collect_leaves<T, Leaf>(mid.right, offset + shift, mr, out);
            },
            [&](typename E::Right const& r) {
              collect_leaves<T, Leaf>(r.value, offset + shift, m, out);
            }});
      }
    }
  }  // namespace detail

  // Flatten an iterated star element, bracketed in any way, whose leaves all
  // have type Leaf. Leaf positions are numbered left to right from 1.
  template <Tricocycloid T, typename Leaf, typename E>
  NaryStarElem<T, Leaf> nary_normalize(E const& e) {
    typename NaryStarElem<T, Leaf>::Parts parts;
    detail::collect_leaves<T, Leaf>(e, 0, T::unit_mass(), parts);
    return NaryStarElem<T, Leaf>(std::move(parts));
  }

  // ((X * X) * X) * ... with n leaves.
  template <Tricocycloid T, typename X, std::size_t N>
  struct left_bracketed {
    using type = StarElem<T, typename left_bracketed<T, X, N - 1>::type, X>;
  };

  template <Tricocycloid T, typename X>
  struct left_bracketed<T, X, 1> {
    using type = X;
  };

  template <Tricocycloid T, typename X, std::size_t N>
  using left_bracketed_t = typename left_bracketed<T, X, N>::type;

  namespace detail {
    template <Tricocycloid T, typename X, std::size_t K>
    std::optional<std::pair<left_bracketed_t<T, X, K>, typename T::mass>>
    debracket_prefix(NaryStarElem<T, X> const& e) {
      std::optional<std::pair<X, typename T::mass>> cur;
      if (e.contains(K)) {
        cur.emplace(e.part(K), e.weight(K));
      }
      if constexpr (K == 1) {
        return cur;
      } else {
        using Out = left_bracketed_t<T, X, K>;
        auto prev = debracket_prefix<T, X, K - 1>(e);
        if (prev && cur) {
          return std::pair{
              Out::mid(T::join_mass(prev->second, cur->second),
                       std::move(prev->first), std::move(cur->first)),
              T::add_mass(prev->second, cur->second)};
        }
        if (prev) {
          return std::pair{Out::left(std::move(prev->first)), prev->second};
        }
        if (cur) {
          return std::pair{Out::right(std::move(cur->first)), cur->second};
        }
        return std::nullopt;
      }
    }
  }  // namespace detail

  // Rebuild the canonical fully-left-bracketed element over N components.
  template <std::size_t N, Tricocycloid T, typename X>
  left_bracketed_t<T, X, N> nary_debracket(NaryStarElem<T, X> const& e) {
    static_assert(N >= 1);
    if (e.max_tag() > N) {
      throw SignatureError("n-ary element uses tag "
                           + std::to_string(e.max_tag()) + " beyond arity "
                           + std::to_string(N));
    }
    return detail::debracket_prefix<T, X, N>(e)->first;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coherence diagrams
  ////////////////////////////////////////////////////////////////////////

  // The two composites ((A*B)*C)*D -> A*(B*(C*D)) of the pentagon.
  template <Tricocycloid T, typename A, typename B, typename C, typename D>
  auto pentagon_sides(
      StarElem<T, StarElem<T, StarElem<T, A, B>, C>, D> const& e) {
    auto id    = [](auto const& x) { return x; };
    auto assoc = [](auto const& x) { return star_assoc(x); };

    auto top = star_assoc(star_assoc(e));
    auto bottom
        = star_map<T>(id, assoc, star_assoc(star_map<T>(assoc, id, e)));
    return std::pair{top, bottom};
  }

  template <Tricocycloid T, typename A, typename B, typename C, typename D>
  bool pentagon_check(
      StarElem<T, StarElem<T, StarElem<T, A, B>, C>, D> const& e) {
    auto [top, bottom] = pentagon_sides(e);
    return top == bottom;
  }

  // The two composites (A*B)*C -> B*(C*A) of the hexagon.
  template <Tricocycloid T, typename A, typename B, typename C>
  auto hexagon_sides(StarElem<T, StarElem<T, A, B>, C> const& e) {
    auto id  = [](auto const& x) { return x; };
    auto sym = [](auto const& x) { return star_sym(x); };

    auto top    = star_assoc(star_sym(star_assoc(e)));
    auto bottom = star_map<T>(id, sym, star_assoc(star_map<T>(sym, id, e)));
    return std::pair{top, bottom};
  }

  template <Tricocycloid T, typename A, typename B, typename C>
  bool hexagon_check(StarElem<T, StarElem<T, A, B>, C> const& e) {
    auto [top, bottom] = hexagon_sides(e);
    return top == bottom;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // H-values with denominator <= max_den; the single point for trivial H.
  template <Tricocycloid T>
  std::vector<typename T::carrier> weight_grid(unsigned max_den) {
    if constexpr (std::same_as<typename T::carrier, QUnit>) {
      return qunit_grid(max_den);
    } else {
      return {typename T::carrier{}};
    }
  }

  template <Tricocycloid T, typename X, typename Y>
  std::vector<StarElem<T, X, Y>> all_star_elems(
      std::vector<X> const&                    xs,
      std::vector<Y> const&                    ys,
      std::vector<typename T::carrier> const& weights) {
    using E = StarElem<T, X, Y>;
    std::vector<E> out;
    out.reserve(xs.size() + ys.size() + weights.size() * xs.size() * ys.size());
    for (auto const& x : xs) {
      out.push_back(E::left(x));
    }
    for (auto const& w : weights) {
      for (auto const& x : xs) {
        for (auto const& y : ys) {
          out.push_back(E::mid(w, x, y));
        }
      }
    }
    for (auto const& y : ys) {
      out.push_back(E::right(y));
    }
    return out;
  }

}  // namespace hypernorm

#endif  // HYPERNORM_STAR_HPP_
