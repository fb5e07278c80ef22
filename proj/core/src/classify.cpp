#include "prefalloc/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace prefalloc {

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::OutStar: return "OutStar";
    case GraphClass::OutTree: return "OutTree";
    case GraphClass::Path: return "Path";
    case GraphClass::DisjointPaths: return "DisjointPaths";
    case GraphClass::DirectedMatching: return "DirectedMatching";
    case GraphClass::UnionOutStars: return "UnionOutStars";
    case GraphClass::GeneralDAG: return "GeneralDAG";
  }
  return "?";
}

std::string_view to_string(SolverChoice c) noexcept {
  switch (c) {
    case SolverChoice::MinSumDirectedMatchings: return "minsum-matchings";
    case SolverChoice::MinSumPaths: return "minsum-paths";
    case SolverChoice::MinSumDisjointPaths: return "minsum-disjoint-paths";
    case SolverChoice::MinSumTwoStarForests: return "minsum-two-star-forests";
    case SolverChoice::MinMaxPaths: return "minmax-paths";
    case SolverChoice::MinMaxTwoMatchings: return "minmax-two-matchings";
    case SolverChoice::JunctionFpt: return "junction-fpt";
    case SolverChoice::Oracle: return "oracle";
    case SolverChoice::OracleTooLarge: return "oracle-too-large";
  }
  return "?";
}

bool is_disjoint_paths(const PreferenceGraph& g) {
  return std::all_of(g.items().begin(), g.items().end(),
                     [&](ItemIndex v) { return g.in_degree(v) <= 1 && g.out_degree(v) <= 1; });
}

bool is_path(const PreferenceGraph& g) {
  return !g.empty() && is_disjoint_paths(g) && g.roots().size() == 1;
}

bool is_out_tree(const PreferenceGraph& g) {
  if (g.empty() || g.roots().size() != 1) return false;
  return std::all_of(g.items().begin(), g.items().end(), [&](ItemIndex v) { return g.in_degree(v) <= 1; });
}

bool is_out_star(const PreferenceGraph& g) {
  const auto roots = g.roots();
  if (g.empty() || roots.size() != 1) return false;
  return g.out_degree(roots.front()) == g.size() - 1;
}

bool is_directed_matching(const PreferenceGraph& g) {
  return std::all_of(g.items().begin(), g.items().end(), [&](ItemIndex v) { return g.degree(v) == 1; });
}

bool is_union_of_out_stars(const PreferenceGraph& g) {
  for (const Arc& arc : g.arcs()) {
    if (g.in_degree(arc.from) != 0 || g.in_degree(arc.to) != 1 || g.out_degree(arc.to) != 0) return false;
  }
  return true;
}

std::vector<GraphClass> classes_of(const PreferenceGraph& g) {
  std::vector<GraphClass> result;
  if (is_out_star(g)) result.push_back(GraphClass::OutStar);
  if (is_out_tree(g)) result.push_back(GraphClass::OutTree);
  if (is_path(g)) result.push_back(GraphClass::Path);
  if (is_disjoint_paths(g)) result.push_back(GraphClass::DisjointPaths);
  if (is_directed_matching(g)) result.push_back(GraphClass::DirectedMatching);
  if (is_union_of_out_stars(g)) result.push_back(GraphClass::UnionOutStars);
  if (result.empty()) result.push_back(GraphClass::GeneralDAG);
  return result;
}

std::vector<ItemIndex> junction_vertices(const PreferenceGraph& g) {
  std::vector<ItemIndex> result;
  for (ItemIndex v : g.items()) {
    if (g.in_degree(v) > 1 || g.out_degree(v) > 1) result.push_back(v);
  }
  return result;
}

JunctionSummary junctions(const Instance& inst) {
  JunctionSummary summary;
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    summary.per_agent.push_back(junction_vertices(inst.graph(a)));
    summary.gamma += summary.per_agent.back().size();
  }
  return summary;
}

std::uint64_t oracle_limit_from_env() {
  const DispatchLimits defaults;
  const char* text = std::getenv("PREFALLOC_ORACLE_LIMIT");
  if (text == nullptr || *text == '\0') return defaults.oracle_limit;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end == nullptr || *end != '\0') return defaults.oracle_limit;
  return value;
}

bool oracle_fits(const Instance& inst, std::uint64_t limit) {
  return inst.item_count() <= 64 && enumeration_size(inst) <= limit;
}

namespace {

template <typename Pred>
bool all_agents(const Instance& inst, Pred pred) {
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    if (!pred(inst.graph(a))) return false;
  }
  return true;
}

}  // namespace

SolverChoice dispatch(const Instance& inst, Objective objective, const DispatchLimits& limits) {
  const auto path_or_empty = [](const PreferenceGraph& g) { return g.empty() || is_path(g); };
  if (objective == Objective::Sum) {
    if (all_agents(inst, is_directed_matching)) return SolverChoice::MinSumDirectedMatchings;
    if (all_agents(inst, path_or_empty)) return SolverChoice::MinSumPaths;
    if (all_agents(inst, is_disjoint_paths)) return SolverChoice::MinSumDisjointPaths;
    if (inst.agent_count() == 2 && all_agents(inst, is_union_of_out_stars)) return SolverChoice::MinSumTwoStarForests;
    if (junctions(inst).gamma <= limits.gamma_limit) return SolverChoice::JunctionFpt;
  } else {
    if (all_agents(inst, path_or_empty)) return SolverChoice::MinMaxPaths;
    if (inst.agent_count() == 2 && all_agents(inst, is_directed_matching)) return SolverChoice::MinMaxTwoMatchings;
  }
  return oracle_fits(inst, limits.oracle_limit) ? SolverChoice::Oracle : SolverChoice::OracleTooLarge;
}

}  // namespace prefalloc
