#pragma once

#include <cstddef>
#include <cstdint>

#include "prefalloc/instance.hpp"
#include "prefalloc/poly/solution.hpp"

namespace prefalloc::poly {

struct DirectedMatchingsTrace {
  Solution solution;
  /// Arc vertices of the auxiliary graph and how many of them the optimal
  /// matching covers.
  std::size_t arc_vertices = 0;
  std::size_t arc_vertices_matched = 0;
  std::int64_t matching_weight = 0;
};

/// Minimum total dissatisfaction when every preference graph is a directed
/// matching, via a maximum-weight matching on the item/copy/arc graph.
/// Throws DomainError when some graph is not a directed matching.
Solution minsum_directed_matchings(const Instance& inst);
DirectedMatchingsTrace minsum_directed_matchings_trace(const Instance& inst);

}  // namespace prefalloc::poly
