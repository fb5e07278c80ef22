#include "prefalloc/poly/directed_matchings.hpp"

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/kernels/assignment.hpp"

namespace prefalloc::poly {

DirectedMatchingsTrace minsum_directed_matchings_trace(const Instance& inst) {
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    if (!is_directed_matching(inst.graph(a))) {
      throw DomainError("graph of agent '" + inst.agent_id(a) + "' is not a directed matching");
    }
  }
  const std::size_t n = inst.item_count();
  const auto big = static_cast<std::int64_t>(2 * n);

  // Left side: one copy x(i, j) per agent and item of V_i. Right side: the
  // item vertices z_j first, then one vertex y per arc.
  kernels::WeightedBipartiteGraph h;
  h.right = n;
  struct Copy {
    AgentIndex agent;
    ItemIndex item;
  };
  std::vector<Copy> copies;
  std::vector<std::size_t> s_edge;
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    const auto& g = inst.graph(a);
    std::vector<std::size_t> copy_of(n, 0);
    for (ItemIndex v : g.items()) {
      copy_of[v] = copies.size();
      copies.push_back({a, v});
      s_edge.push_back(h.edges.size());
      h.edges.push_back({copy_of[v], v, g.out_degree(v) == 1 ? 2 : 1});
    }
    for (const Arc& arc : g.arcs()) {
      const std::size_t y = h.right++;
      h.edges.push_back({copy_of[arc.from], y, big});
      h.edges.push_back({copy_of[arc.to], y, big});
    }
  }
  h.left = copies.size();

  const kernels::Matching m = kernels::max_weight_matching(h);
  DirectedMatchingsTrace trace;
  trace.solution.allocation = Allocation(inst.agent_count());
  trace.arc_vertices = h.right - n;
  trace.matching_weight = m.weight;
  std::int64_t matched_t = 0;
  std::vector<bool> is_s(h.edges.size(), false);
  for (std::size_t e : s_edge) is_s[e] = true;
  for (std::size_t e : m.edges) {
    if (is_s[e]) {
      const Copy& c = copies[h.edges[e].left];
      trace.solution.allocation.assign(c.agent, c.item);
    } else {
      ++matched_t;
    }
  }
  trace.arc_vertices_matched = static_cast<std::size_t>(matched_t);
  const std::int64_t satisfaction = m.weight - big * matched_t;
  trace.solution.value = static_cast<std::int64_t>(inst.total_graph_size()) - satisfaction;
  return trace;
}

Solution minsum_directed_matchings(const Instance& inst) { return minsum_directed_matchings_trace(inst).solution; }

}  // namespace prefalloc::poly
