#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace prefalloc::kernels {

struct VertexWeightedGraph {
  std::vector<std::int64_t> weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct IndependentSet {
  /// Ascending vertex indices.
  std::vector<std::size_t> vertices;
  std::int64_t weight = 0;
  /// Weight of the complementary minimum vertex cover.
  std::int64_t cover_weight = 0;
};

/// Maximum-weight independent set of a bipartite graph: the complement of a
/// minimum-weight vertex cover read off an s-t min cut. Throws DomainError
/// for negative weights, self-loops or an odd cycle.
IndependentSet bipartite_mwis(const VertexWeightedGraph& g);

}  // namespace prefalloc::kernels
