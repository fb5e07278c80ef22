#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prefalloc::kernels {

/// Row-major integer cost matrix. All rows have the same length.
using CostMatrix = std::vector<std::vector<std::int64_t>>;

inline constexpr std::int64_t kUnassigned = -1;

struct Assignment {
  /// Column assigned to each row, or kUnassigned.
  std::vector<std::int64_t> row_to_col;
  /// Total cost for lsap, bottleneck entry for lbap.
  std::int64_t value = 0;
};

/// Minimum-cost assignment saturating the smaller side (Hungarian method,
/// O(n^2 m)). Throws DomainError on an empty or ragged matrix.
Assignment lsap(const CostMatrix& cost);

/// Assignment saturating the smaller side that minimizes the largest cost
/// used. Binary search over the distinct entries with a cardinality matching
/// as the feasibility test.
Assignment lbap(const CostMatrix& cost);

/// Maximum-cardinality matching in a bipartite graph given by left adjacency
/// lists. Returns the right partner of each left vertex or kUnassigned.
std::vector<std::int64_t> max_cardinality_matching(std::size_t left, std::size_t right,
                                                   const std::vector<std::vector<std::size_t>>& adjacency);

struct WeightedEdge {
  std::size_t left;
  std::size_t right;
  std::int64_t weight;
};

struct WeightedBipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<WeightedEdge> edges;
};

struct Matching {
  /// Indices into the input edge list, ascending.
  std::vector<std::size_t> edges;
  std::int64_t weight = 0;
};

/// Maximum-weight matching, not necessarily of maximum cardinality. Edges
/// of weight zero are never reported. Throws DomainError on an out-of-range
/// endpoint, a negative weight or a duplicate edge.
Matching max_weight_matching(const WeightedBipartiteGraph& g);

}  // namespace prefalloc::kernels
