#pragma once

#include "prefalloc/instance.hpp"
#include "prefalloc/kernels/assignment.hpp"
#include "prefalloc/poly/solution.hpp"

namespace prefalloc::poly {

struct PathOptions {
  /// Keep only the top min(|V_i|, k) items of each path in the matrix.
  bool truncate = true;
};

/// Agent-by-column cost matrix with n item columns followed by k "nothing"
/// columns. Cell (i, v) holds the number of predecessors of v on G_i, or
/// |V_i| when v is not on G_i (or truncated away); "nothing" costs |V_i|.
/// Throws DomainError unless every graph is a path or empty.
kernels::CostMatrix path_cost_matrix(const Instance& inst, const PathOptions& options = {});

/// Every preference graph a single path (or empty). One item per agent;
/// sum solved as an assignment problem, max as a bottleneck assignment.
Solution minsum_paths(const Instance& inst, const PathOptions& options = {});
Solution minmax_paths(const Instance& inst, const PathOptions& options = {});

/// Every preference graph a disjoint union of paths. Each agent is split
/// into one virtual agent per component, solved with minsum_paths, and
/// merged back.
Solution minsum_disjoint_paths(const Instance& inst);

}  // namespace prefalloc::poly
