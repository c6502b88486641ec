#include "hypernorm/tagged_sum.hpp"

#include <algorithm>
#include <set>

#include "hypernorm/error.hpp"

namespace hypernorm {

  Carrier::Carrier(std::string name, std::vector<std::string> atoms)
      : name_(std::move(name)), atoms_(std::move(atoms)) {
    std::set<std::string> seen;
    for (auto const& a : atoms_) {
      if (!seen.insert(a).second) {
        throw SignatureError("carrier " + name_ + " lists atom \"" + a
                             + "\" twice");
      }
    }
  }

  bool Carrier::contains(std::string const& atom) const {
    return std::find(atoms_.begin(), atoms_.end(), atom) != atoms_.end();
  }

  SumSignature::SumSignature(std::vector<Carrier> components)
      : components_(std::move(components)) {
    std::set<std::string> names;
    for (auto const& c : components_) {
      if (!names.insert(c.name()).second) {
        throw SignatureError("component name " + c.name()
                             + " appears twice in the signature");
      }
    }
  }

  Carrier const& SumSignature::component(std::size_t tag) const {
    if (!valid_tag(tag)) {
      throw SignatureError("tag " + std::to_string(tag)
                           + " out of range (signature has "
                           + std::to_string(components_.size())
                           + " components)");
    }
    return components_[tag - 1];
  }

  void check_member(SumSignature const& sig, TaggedElem<std::string> const& e) {
    Carrier const& c = sig.component(e.tag);
    if (!c.contains(e.atom)) {
      throw SignatureError("atom \"" + e.atom + "\" is not in component "
                           + c.name() + " (tag " + std::to_string(e.tag)
                           + ")");
    }
  }

}  // namespace hypernorm
