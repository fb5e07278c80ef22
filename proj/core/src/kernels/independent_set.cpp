#include "prefalloc/kernels/independent_set.hpp"

#include <queue>

#include "prefalloc/error.hpp"
#include "prefalloc/kernels/flow.hpp"

namespace prefalloc::kernels {

namespace {

std::vector<int> two_coloring(const VertexWeightedGraph& g) {
  const std::size_t n = g.weights.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : g.edges) {
    if (a >= n || b >= n) throw DomainError("independent set edge endpoint out of range");
    if (a == b) throw DomainError("independent set graph has a self-loop");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          throw DomainError("graph is not bipartite");
        }
      }
    }
  }
  return color;
}

}  // namespace

IndependentSet bipartite_mwis(const VertexWeightedGraph& g) {
  for (std::int64_t w : g.weights) {
    if (w < 0) throw DomainError("independent set weights must be non-negative");
  }
  const auto color = two_coloring(g);
  const std::size_t n = g.weights.size();

  FlowNetwork net;
  net.vertex_count = n + 2;
  net.source = n;
  net.sink = n + 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0) {
      net.add_arc(net.source, v, g.weights[v]);
    } else {
      net.add_arc(v, net.sink, g.weights[v]);
    }
  }
  for (const auto& [a, b] : g.edges) {
    const auto [l, r] = color[a] == 0 ? std::pair{a, b} : std::pair{b, a};
    net.add_arc(l, r, std::nullopt);
  }
  const MaxFlow cut = max_flow(net);

  // Cover: left vertices cut off from s, right vertices reachable from s.
  IndependentSet result;
  result.cover_weight = cut.value;
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_cover = color[v] == 0 ? !cut.source_side[v] : cut.source_side[v];
    if (!in_cover) {
      result.vertices.push_back(v);
      result.weight += g.weights[v];
    }
  }
  return result;
}

}  // namespace prefalloc::kernels
