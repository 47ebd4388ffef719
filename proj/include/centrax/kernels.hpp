#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version
// and an OpenMP version; both return identical results (same elements,
// same order) and the tests hold them to that.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "centrax/partition.hpp"

namespace centrax::kernels {

  using IndexPair = std::pair<std::size_t, std::size_t>;

  // Predicate over an index range; must be safe to call concurrently.
  using IndexPredicate = std::function<bool(std::size_t)>;

  namespace serial {
    // Least family containing the identity on n points and the generators,
    // closed under join. Sorted canonically.
    std::vector<Congruence> join_closure(std::size_t                 n,
                                         std::span<Congruence const> generators);

    // All (i, j) with con[i] meet con[j] = identity and con[i] o con[j] =
    // universal, in lexicographic order.
    std::vector<IndexPair> factor_pair_indices(std::span<Congruence const> con);

    // Least index in [0, count) for which holds() is false.
    std::optional<std::size_t> first_failure(std::size_t count, IndexPredicate const& holds);
  }  // namespace serial

  namespace parallel {
    std::vector<Congruence> join_closure(std::size_t                 n,
                                         std::span<Congruence const> generators);

    std::vector<IndexPair> factor_pair_indices(std::span<Congruence const> con);

    std::optional<std::size_t> first_failure(std::size_t count, IndexPredicate const& holds);
  }  // namespace parallel

  // theta and delta are complementary factor congruences. Uses the block
  // map x -> (block of x in theta, block of x in delta): it is injective
  // iff theta meet delta is the identity, and then the composition is
  // universal iff the block counts multiply to n.
  bool complementary(Congruence const& theta, Congruence const& delta);

  // Number of threads the parallel kernels will use.
  int thread_count();

}  // namespace centrax::kernels
