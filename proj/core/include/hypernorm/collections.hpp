#ifndef HYPERNORM_COLLECTIONS_HPP_
#define HYPERNORM_COLLECTIONS_HPP_

// Finite multisets, finite sets and multidistributions, all stored in a
// canonical sorted form so that equality is structural.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hypernorm/error.hpp"
#include "hypernorm/rational.hpp"

namespace hypernorm {

  // A finite multiset: element -> positive multiplicity.
  template <typename X>
  class Bag {
   public:
    using Counts         = std::map<X, std::size_t>;
    using const_iterator = typename Counts::const_iterator;

    Bag() = default;

    explicit Bag(std::vector<X> const& xs) {
      for (auto const& x : xs) {
        add(x);
      }
    }

    static Bag from_counts(Counts counts) {
      Bag b;
      for (auto& [x, n] : counts) {
        b.add(x, n);
      }
      return b;
    }

    void add(X const& x, std::size_t n = 1) {
      if (n == 0) {
        return;
      }
      counts_[x] += n;
      size_ += n;
    }

    // Multiset union (sum of multiplicities).
    void add_all(Bag const& other) {
      for (auto const& [x, n] : other.counts_) {
        add(x, n);
      }
    }

    std::size_t count(X const& x) const {
      auto it = counts_.find(x);
      return it == counts_.end() ? 0 : it->second;
    }

    Counts const& counts() const noexcept { return counts_; }
    std::size_t   size() const noexcept { return size_; }
    bool          empty() const noexcept { return size_ == 0; }
    std::size_t   distinct() const noexcept { return counts_.size(); }

    // Elements listed with repetition, in sorted order.
    std::vector<X> elements() const {
      std::vector<X> out;
      out.reserve(size_);
      for (auto const& [x, n] : counts_) {
        out.insert(out.end(), n, x);
      }
      return out;
    }

    const_iterator begin() const noexcept { return counts_.begin(); }
    const_iterator end() const noexcept { return counts_.end(); }

    friend bool operator==(Bag const& a, Bag const& b) {
      return a.counts_ == b.counts_;
    }
    friend auto operator<=>(Bag const& a, Bag const& b) {
      return a.counts_ <=> b.counts_;
    }

   private:
    Counts      counts_;
    std::size_t size_ = 0;
  };

  template <typename X>
  class FinSet {
   public:
    using Elems          = std::set<X>;
    using const_iterator = typename Elems::const_iterator;

    FinSet() = default;
    explicit FinSet(Elems elems) : elems_(std::move(elems)) {}
    explicit FinSet(std::vector<X> const& xs) : elems_(xs.begin(), xs.end()) {}

    void insert(X const& x) { elems_.insert(x); }
    void insert_all(FinSet const& other) {
      elems_.insert(other.elems_.begin(), other.elems_.end());
    }
    bool contains(X const& x) const { return elems_.count(x) != 0; }

    Elems const&   elems() const noexcept { return elems_; }
    std::size_t    size() const noexcept { return elems_.size(); }
    bool           empty() const noexcept { return elems_.empty(); }
    const_iterator begin() const noexcept { return elems_.begin(); }
    const_iterator end() const noexcept { return elems_.end(); }

    friend bool operator==(FinSet const& a, FinSet const& b) {
      return a.elems_ == b.elems_;
    }
    friend auto operator<=>(FinSet const& a, FinSet const& b) {
      return a.elems_ <=> b.elems_;
    }

   private:
    Elems elems_;
  };

  // One weighted point of a multidistribution.
  template <typename X>
  struct MultiEntry {
    Q01 weight;
    X   point;

    friend bool operator==(MultiEntry const&, MultiEntry const&) = default;
    friend auto operator<=>(MultiEntry const& a, MultiEntry const& b) {
      if (auto c = a.point <=> b.point; c != 0) {
        return c;
      }
      return a.weight <=> b.weight;
    }
  };

  // A formal convex combination r_1 x_1 + ... + r_n x_n in which equal
  // points are kept apart: 1.x and 1/2.x + 1/2.x are different values.
  template <typename X>
  class MultiDist {
   public:
    using Entries        = std::vector<MultiEntry<X>>;
    using const_iterator = typename Entries::const_iterator;

    explicit MultiDist(Entries entries) : entries_(std::move(entries)) {
      if (entries_.empty()) {
        throw RangeError("multidistribution needs at least one entry");
      }
      mpq_class total;
      for (auto const& e : entries_) {
        if (e.weight.is_zero()) {
          throw RangeError("multidistribution entry with weight 0");
        }
        total += e.weight.value();
      }
      if (cmp(total, 1) != 0) {
        throw RangeError("multidistribution weights sum to "
                         + total.get_str() + ", expected 1");
      }
      std::sort(entries_.begin(), entries_.end());
    }

    Entries const& entries() const noexcept { return entries_; }
    std::size_t    size() const noexcept { return entries_.size(); }
    const_iterator begin() const noexcept { return entries_.begin(); }
    const_iterator end() const noexcept { return entries_.end(); }

    friend bool operator==(MultiDist const& a, MultiDist const& b) {
      return a.entries_ == b.entries_;
    }
    friend auto operator<=>(MultiDist const& a, MultiDist const& b) {
      return a.entries_ <=> b.entries_;
    }

   private:
    Entries entries_;
  };

  template <typename X>
  MultiDist<X> multi_unit(X x) {
    return MultiDist<X>({MultiEntry<X>{Q01::one(), std::move(x)}});
  }

}  // namespace hypernorm

#endif  // HYPERNORM_COLLECTIONS_HPP_
