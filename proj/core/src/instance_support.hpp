#ifndef HYPERNORM_SRC_INSTANCE_SUPPORT_HPP_
#define HYPERNORM_SRC_INSTANCE_SUPPORT_HPP_

// Shared enumeration and sampling helpers for the monad instances.

#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hypernorm/monads.hpp"

namespace hypernorm::detail {

  // Index tuples i_1 < ... < i_k into a list of n items (repeat = false), or
  // i_1 <= ... <= i_k (repeat = true), in lexicographic order.
  std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                           std::size_t k,
                                                           bool repeat);

  // All k-tuples of positive weights with denominators <= max_den that sum
  // to 1.
  std::vector<std::vector<Q01>> weight_vectors(std::size_t k, unsigned max_den);

  // k positive weights summing to 1, as reduced ratios of random integers
  // in [1, max_den].
  std::vector<Q01> random_weights(std::size_t k,
                                  unsigned max_den,
                                  std::mt19937_64& rng);

  std::size_t uniform_index(std::size_t n, std::mt19937_64& rng);

  // k distinct positions out of n (k <= n), in ascending order.
  std::vector<std::size_t> random_subset(std::size_t n,
                                         std::size_t k,
                                         std::mt19937_64& rng);

  // k positions out of n with repetition, in ascending order.
  std::vector<std::size_t> random_multiset(std::size_t n,
                                           std::size_t k,
                                           std::mt19937_64& rng);

  // Weights equal to 1/k each.
  std::vector<Q01> uniform_weights(std::size_t k);

  // Rescales positive masses so they sum to 1.
  std::vector<Q01> renormalised(std::vector<Q01> const& ws);

  // Keeps the first occurrence of every value.
  std::vector<Value> dedupe(std::vector<Value> values);

  TensorValue make_trivial_nary(std::vector<std::pair<std::size_t, Value>> parts);

}  // namespace hypernorm::detail

#endif  // HYPERNORM_SRC_INSTANCE_SUPPORT_HPP_
