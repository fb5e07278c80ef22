#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc {

enum class GraphClass { OutStar, OutTree, Path, DisjointPaths, DirectedMatching, UnionOutStars, GeneralDAG };

std::string_view to_string(GraphClass c) noexcept;

/// Every class the graph belongs to, in enum order. The empty graph is a
/// disjoint union of paths, a directed matching and a union of out-stars. An
/// isolated vertex is a star, tree and path but not a matching. GeneralDAG is
/// reported only when nothing else applies.
std::vector<GraphClass> classes_of(const PreferenceGraph& g);

bool is_out_star(const PreferenceGraph& g);
bool is_out_tree(const PreferenceGraph& g);
bool is_path(const PreferenceGraph& g);
bool is_disjoint_paths(const PreferenceGraph& g);
bool is_directed_matching(const PreferenceGraph& g);
bool is_union_of_out_stars(const PreferenceGraph& g);

/// Vertices of in- or out-degree greater than one.
std::vector<ItemIndex> junction_vertices(const PreferenceGraph& g);

struct JunctionSummary {
  std::vector<std::vector<ItemIndex>> per_agent;
  std::size_t gamma = 0;
};

JunctionSummary junctions(const Instance& inst);

enum class SolverChoice {
  MinSumDirectedMatchings,
  MinSumPaths,
  MinSumDisjointPaths,
  MinSumTwoStarForests,
  MinMaxPaths,
  MinMaxTwoMatchings,
  JunctionFpt,
  Oracle,
  OracleTooLarge,
};

std::string_view to_string(SolverChoice c) noexcept;

struct DispatchLimits {
  std::uint64_t oracle_limit = 10'000'000;
  std::size_t gamma_limit = 6;
};

/// Oracle limit from PREFALLOC_ORACLE_LIMIT when set and valid, otherwise
/// the default.
std::uint64_t oracle_limit_from_env();

/// True iff the exhaustive oracle accepts the instance under `limit`.
bool oracle_fits(const Instance& inst, std::uint64_t limit);

SolverChoice dispatch(const Instance& inst, Objective objective, const DispatchLimits& limits = {});

}  // namespace prefalloc
