#ifndef HYPERNORM_TAGGED_SUM_HPP_
#define HYPERNORM_TAGGED_SUM_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hypernorm {

  // A named finite set with a canonical element order.
  class Carrier {
   public:
    Carrier() = default;
    Carrier(std::string name, std::vector<std::string> atoms);

    std::string const&              name() const noexcept { return name_; }
    std::vector<std::string> const& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool        contains(std::string const& atom) const;

    friend bool operator==(Carrier const&, Carrier const&) = default;

   private:
    std::string              name_;
    std::vector<std::string> atoms_;
  };

  // The components A_1, ..., A_n of a finite disjoint union; tags are 1-based.
  class SumSignature {
   public:
    SumSignature() = default;
    explicit SumSignature(std::vector<Carrier> components);

    std::size_t arity() const noexcept { return components_.size(); }
    Carrier const& component(std::size_t tag) const;
    std::vector<Carrier> const& components() const noexcept {
      return components_;
    }
    bool valid_tag(std::size_t tag) const noexcept {
      return tag >= 1 && tag <= components_.size();
    }

    friend bool operator==(SumSignature const&, SumSignature const&)
        = default;

   private:
    std::vector<Carrier> components_;
  };

  // iota_tag(atom)
  template <typename X>
  struct TaggedElem {
    std::size_t tag = 1;
    X           atom;

    friend bool operator==(TaggedElem const&, TaggedElem const&) = default;
    friend auto operator<=>(TaggedElem const&, TaggedElem const&) = default;
  };

  template <typename X>
  TaggedElem<X> inject(std::size_t tag, X atom) {
    return TaggedElem<X>{tag, std::move(atom)};
  }

  // Throws SignatureError unless `e` names an atom of the tagged component.
  void check_member(SumSignature const&              sig,
                    TaggedElem<std::string> const&   e);

}  // namespace hypernorm

#endif  // HYPERNORM_TAGGED_SUM_HPP_
