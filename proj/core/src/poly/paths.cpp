#include "prefalloc/poly/paths.hpp"

#include <algorithm>
#include <map>

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"

namespace prefalloc::poly {

namespace {

// Position of each vertex along the path, i.e. its number of predecessors.
std::vector<std::int64_t> positions(const PreferenceGraph& g, std::size_t n) {
  std::vector<std::int64_t> pos(n, -1);
  for (ItemIndex v : g.items()) pos[v] = static_cast<std::int64_t>(g.predecessors(v).size());
  return pos;
}

Solution solve(const Instance& inst, const PathOptions& options, Objective objective) {
  const std::size_t k = inst.agent_count();
  Solution result;
  result.allocation = Allocation(k);
  if (k == 0) return result;
  const kernels::CostMatrix cost = path_cost_matrix(inst, options);
  const kernels::Assignment assignment = objective == Objective::Sum ? kernels::lsap(cost) : kernels::lbap(cost);
  for (AgentIndex a = 0; a < k; ++a) {
    const std::int64_t c = assignment.row_to_col[a];
    const auto nothing = static_cast<std::int64_t>(inst.graph(a).size());
    if (c < 0 || static_cast<std::size_t>(c) >= inst.item_count()) continue;
    if (cost[a][static_cast<std::size_t>(c)] == nothing) continue;
    result.allocation.assign(a, static_cast<ItemIndex>(c));
  }
  result.value = objective_value(inst, result.allocation, objective);
  return result;
}

}  // namespace

kernels::CostMatrix path_cost_matrix(const Instance& inst, const PathOptions& options) {
  const std::size_t n = inst.item_count();
  const std::size_t k = inst.agent_count();
  kernels::CostMatrix cost(k);
  for (AgentIndex a = 0; a < k; ++a) {
    const auto& g = inst.graph(a);
    if (!g.empty() && !is_path(g)) throw DomainError("graph of agent '" + inst.agent_id(a) + "' is not a path");
    const auto size = static_cast<std::int64_t>(g.size());
    const std::int64_t keep = options.truncate ? std::min<std::int64_t>(size, static_cast<std::int64_t>(k)) : size;
    const auto pos = positions(g, n);
    cost[a].assign(n + k, size);
    for (ItemIndex v = 0; v < n; ++v) {
      if (pos[v] >= 0 && pos[v] < keep) cost[a][v] = pos[v];
    }
  }
  return cost;
}

Solution minsum_paths(const Instance& inst, const PathOptions& options) {
  return solve(inst, options, Objective::Sum);
}

Solution minmax_paths(const Instance& inst, const PathOptions& options) {
  return solve(inst, options, Objective::Max);
}

Solution minsum_disjoint_paths(const Instance& inst) {
  InstanceSpec spec;
  spec.items.assign(inst.items().begin(), inst.items().end());
  std::map<std::string, AgentIndex> owner;
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    const auto& g = inst.graph(a);
    if (!is_disjoint_paths(g)) {
      throw DomainError("graph of agent '" + inst.agent_id(a) + "' is not a disjoint union of paths");
    }
    std::size_t component = 0;
    for (ItemIndex root : g.roots()) {
      AgentSpec part;
      part.id = inst.agent_id(a) + "#" + std::to_string(component++);
      for (ItemIndex v = root;;) {
        part.items.push_back(inst.item_name(v));
        const auto next = g.out_neighbors(v);
        if (next.empty()) break;
        part.arcs.emplace_back(inst.item_name(v), inst.item_name(next.front()));
        v = next.front();
      }
      owner[part.id] = a;
      spec.agents.push_back(std::move(part));
    }
  }
  std::vector<std::string> dropped;
  const Instance expanded = make_instance(spec, &dropped);
  const Solution split = minsum_paths(expanded);

  Solution result;
  result.allocation = Allocation(inst.agent_count());
  for (AgentIndex b = 0; b < expanded.agent_count(); ++b) {
    const AgentIndex a = owner.at(expanded.agent_id(b));
    for (ItemIndex v : split.allocation.bundle(b)) {
      result.allocation.assign(a, *inst.find_item(expanded.item_name(v)));
    }
  }
  result.value = objective_value(inst, result.allocation, Objective::Sum);
  return result;
}

}  // namespace prefalloc::poly
