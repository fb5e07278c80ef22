#include "prefalloc/poly/star_forests.hpp"

#include <algorithm>
#include <array>

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/kernels/independent_set.hpp"

namespace prefalloc::poly {

void require_two_star_forests(const Instance& inst) {
  if (inst.agent_count() != 2) throw DomainError("two-agent star forest solver needs exactly two agents");
  for (AgentIndex a = 0; a < 2; ++a) {
    if (!is_union_of_out_stars(inst.graph(a))) {
      throw DomainError("graph of agent '" + inst.agent_id(a) + "' is not a disjoint union of out-stars");
    }
  }
}

namespace {

bool personal(const Instance& inst, ItemIndex v) { return inst.desired_by(v).size() == 1; }

// Agent for which v is a one-root item, if any.
std::optional<AgentIndex> one_root_of(const Instance& inst, ItemIndex v) {
  if (personal(inst, v)) return std::nullopt;
  const bool root0 = inst.graph(0).in_degree(v) == 0;
  const bool root1 = inst.graph(1).in_degree(v) == 0;
  if (root0 == root1) return std::nullopt;
  return root0 ? AgentIndex{0} : AgentIndex{1};
}

void give(Allocation& alloc, ItemIndex v, AgentIndex a) {
  alloc.unassign(1 - a, v);
  alloc.assign(a, v);
}

struct Rules {
  Allocation result;
  std::vector<bool> touched;
  std::vector<ItemIndex> conflicts;
};

Rules run_rules(const Instance& inst, const Allocation& start, AgentIndex first) {
  require_two_star_forests(inst);
  Rules rules{start, std::vector<bool>(inst.item_count(), false), {}};
  for (ItemIndex v = 0; v < inst.item_count(); ++v) {
    if (personal(inst, v)) {
      give(rules.result, v, inst.desired_by(v).front());
      rules.touched[v] = true;
    }
  }
  for (const AgentIndex i : std::array<AgentIndex, 2>{first, static_cast<AgentIndex>(1 - first)}) {
    const AgentIndex j = 1 - i;
    for (ItemIndex v = 0; v < inst.item_count(); ++v) {
      if (one_root_of(inst, v) != i) continue;
      give(rules.result, v, i);
      rules.touched[v] = true;
      for (ItemIndex u : inst.graph(i).out_neighbors(v)) {
        if (personal(inst, u)) continue;
        if (rules.touched[u]) {
          if (rules.result.owner(u) != j) rules.conflicts.push_back(u);
          continue;
        }
        give(rules.result, u, j);
        rules.touched[u] = true;
      }
    }
  }
  std::sort(rules.conflicts.begin(), rules.conflicts.end());
  rules.conflicts.erase(std::unique(rules.conflicts.begin(), rules.conflicts.end()), rules.conflicts.end());
  return rules;
}

}  // namespace

Allocation apply_preassignment_rules(const Instance& inst, const Allocation& start, AgentIndex first) {
  return run_rules(inst, start, first).result;
}

PreassignmentReport preassign_two_star_forests(const Instance& inst) {
  Rules rules = run_rules(inst, Allocation(inst.agent_count()), 0);
  PreassignmentReport report;
  report.assigned = std::move(rules.result);
  report.conflicts = std::move(rules.conflicts);
  for (ItemIndex v = 0; v < inst.item_count(); ++v) {
    if (!rules.touched[v]) report.remaining.push_back(v);
  }
  return report;
}

Solution minsum_two_star_forests(const Instance& inst) {
  const PreassignmentReport pre = preassign_two_star_forests(inst);
  std::array<std::vector<ItemIndex>, 2> covered;
  for (AgentIndex a = 0; a < 2; ++a) covered[a] = inst.graph(a).dominated_set(pre.assigned.bundle(a));

  // Vertex 2 * r + a stands for giving remaining item r to agent a.
  const std::size_t m = pre.remaining.size();
  std::vector<std::size_t> slot(inst.item_count(), m);
  for (std::size_t r = 0; r < m; ++r) slot[pre.remaining[r]] = r;
  kernels::VertexWeightedGraph gp;
  gp.weights.assign(2 * m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const ItemIndex v = pre.remaining[r];
    for (AgentIndex a = 0; a < 2; ++a) {
      const auto& g = inst.graph(a);
      const ItemIndex self[] = {v};
      std::int64_t gain = 0;
      for (ItemIndex u : g.dominated_set(self)) {
        if (!std::binary_search(covered[a].begin(), covered[a].end(), u)) ++gain;
      }
      gp.weights[2 * r + a] = gain;
      for (ItemIndex u : g.out_neighbors(v)) {
        if (slot[u] < m) gp.edges.emplace_back(2 * r + a, 2 * slot[u] + a);
      }
    }
    gp.edges.emplace_back(2 * r, 2 * r + 1);
  }
  const kernels::IndependentSet set = kernels::bipartite_mwis(gp);

  Solution solution;
  solution.allocation = pre.assigned;
  for (std::size_t x : set.vertices) {
    if (gp.weights[x] > 0) solution.allocation.assign(static_cast<AgentIndex>(x % 2), pre.remaining[x / 2]);
  }
  const auto baseline = profile(inst, pre.assigned).sum();
  solution.value = static_cast<std::int64_t>(baseline) - set.weight;
  return solution;
}

}  // namespace prefalloc::poly
