#include "prefalloc/kernels/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

#include "prefalloc/error.hpp"

namespace prefalloc::kernels {

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::optional<std::int64_t> upper,
                                 std::int64_t lower, std::int64_t profit) {
  arcs.push_back({from, to, lower, upper, profit});
  return arcs.size() - 1;
}

std::int64_t FlowNetwork::infinity() const {
  std::int64_t total = 1;
  for (const auto& arc : arcs) {
    total += arc.lower;
    if (arc.upper) total += *arc.upper;
  }
  return total;
}

namespace {

void check_network(const FlowNetwork& net) {
  if (net.source >= net.vertex_count || net.sink >= net.vertex_count || net.source == net.sink) {
    throw DomainError("flow network needs distinct source and sink vertices");
  }
  for (const auto& arc : net.arcs) {
    if (arc.from >= net.vertex_count || arc.to >= net.vertex_count) throw DomainError("flow arc endpoint out of range");
    if (arc.lower < 0 || (arc.upper && *arc.upper < arc.lower)) throw DomainError("flow arc bounds are inconsistent");
    if (arc.profit < 0) throw DomainError("flow arc profit is negative");
    if (arc.profit != 0 && !arc.upper) throw DomainError("an unbounded flow arc cannot carry profit");
  }
}

// Residual graph shared by both algorithms. Edge 2k is forward, 2k+1 its
// reverse.
struct Residual {
  struct Edge {
    std::size_t to;
    std::int64_t cap;
    std::int64_t cost;
  };

  explicit Residual(std::size_t n) : adj(n) {}

  std::size_t add(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    adj[from].push_back(edges.size());
    edges.push_back({to, cap, cost});
    adj[to].push_back(edges.size());
    edges.push_back({from, 0, -cost});
    return edges.size() - 2;
  }

  std::vector<std::vector<std::size_t>> adj;
  std::vector<Edge> edges;
};

std::int64_t dinic(Residual& g, std::size_t s, std::size_t t) {
  const std::size_t n = g.adj.size();
  std::int64_t total = 0;
  std::vector<std::int64_t> level(n);
  std::vector<std::size_t> next(n);
  while (true) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<std::size_t> queue;
    level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : g.adj[v]) {
        const auto& edge = g.edges[e];
        if (edge.cap > 0 && level[edge.to] < 0) {
          level[edge.to] = level[v] + 1;
          queue.push(edge.to);
        }
      }
    }
    if (level[t] < 0) return total;
    std::fill(next.begin(), next.end(), 0);
    // Iterative blocking-flow DFS.
    while (true) {
      std::vector<std::size_t> stack_edges;
      std::size_t v = s;
      bool found = false;
      while (true) {
        if (v == t) {
          found = true;
          break;
        }
        bool advanced = false;
        for (; next[v] < g.adj[v].size(); ++next[v]) {
          const std::size_t e = g.adj[v][next[v]];
          const auto& edge = g.edges[e];
          if (edge.cap > 0 && level[edge.to] == level[v] + 1) {
            stack_edges.push_back(e);
            v = edge.to;
            advanced = true;
            break;
          }
        }
        if (advanced) continue;
        if (v == s) break;
        level[v] = -1;
        const std::size_t back = stack_edges.back();
        stack_edges.pop_back();
        v = g.edges[back ^ 1].to;
        ++next[v];
      }
      if (!found) break;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t e : stack_edges) push = std::min(push, g.edges[e].cap);
      for (std::size_t e : stack_edges) {
        g.edges[e].cap -= push;
        g.edges[e ^ 1].cap += push;
      }
      total += push;
    }
  }
}

std::vector<bool> reachable(const Residual& g, std::size_t s) {
  std::vector<bool> seen(g.adj.size(), false);
  std::vector<std::size_t> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.adj[v]) {
      const auto& edge = g.edges[e];
      if (edge.cap > 0 && !seen[edge.to]) {
        seen[edge.to] = true;
        stack.push_back(edge.to);
      }
    }
  }
  return seen;
}

// Successive shortest paths from s to t; requires non-negative reduced costs
// at the start. Returns the amount routed (at most `limit`).
std::int64_t min_cost_flow(Residual& g, std::size_t s, std::size_t t, std::int64_t limit) {
  const std::size_t n = g.adj.size();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> potential(n, 0);
  std::int64_t routed = 0;
  while (routed < limit) {
    std::vector<std::int64_t> dist(n, kInf);
    std::vector<std::size_t> via(n, std::numeric_limits<std::size_t>::max());
    using Entry = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (std::size_t e : g.adj[v]) {
        const auto& edge = g.edges[e];
        if (edge.cap <= 0) continue;
        const std::int64_t nd = d + edge.cost + potential[v] - potential[edge.to];
        if (nd < dist[edge.to]) {
          dist[edge.to] = nd;
          via[edge.to] = e;
          heap.emplace(nd, edge.to);
        }
      }
    }
    if (dist[t] == kInf) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
    std::int64_t push = limit - routed;
    for (std::size_t v = t; v != s; v = g.edges[via[v] ^ 1].to) push = std::min(push, g.edges[via[v]].cap);
    for (std::size_t v = t; v != s; v = g.edges[via[v] ^ 1].to) {
      g.edges[via[v]].cap -= push;
      g.edges[via[v] ^ 1].cap += push;
    }
    routed += push;
  }
  return routed;
}

}  // namespace

MaxFlow max_flow(const FlowNetwork& net) {
  check_network(net);
  const std::int64_t inf = net.infinity();
  Residual g(net.vertex_count);
  std::vector<std::size_t> index;
  std::vector<std::int64_t> capacity;
  for (const auto& arc : net.arcs) {
    if (arc.lower != 0 || arc.profit != 0) throw DomainError("max_flow takes arcs without lower bounds or profits");
    capacity.push_back(arc.upper.value_or(inf));
    index.push_back(g.add(arc.from, arc.to, capacity.back(), 0));
  }
  MaxFlow result;
  result.value = dinic(g, net.source, net.sink);
  result.source_side = reachable(g, net.source);
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    result.flow.push_back(g.edges[index[k] ^ 1].cap);
    const auto& arc = net.arcs[k];
    if (result.source_side[arc.from] && !result.source_side[arc.to]) result.cut_capacity += capacity[k];
  }
  return result;
}

std::optional<ProfitFlow> max_profit_flow(const FlowNetwork& net) {
  check_network(net);
  const std::int64_t inf = net.infinity();
  const std::size_t n = net.vertex_count;
  const std::size_t super_source = n;
  const std::size_t super_sink = n + 1;
  Residual g(n + 2);
  std::vector<std::int64_t> excess(n, 0);
  std::vector<std::size_t> index;
  std::vector<std::int64_t> base;

  for (const auto& arc : net.arcs) {
    const std::int64_t span = arc.upper.value_or(inf) - arc.lower;
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
    if (arc.profit > 0) {
      // Start saturated; the residual reverse edge lets the solver back off.
      const std::size_t e = g.add(arc.to, arc.from, span, arc.profit);
      excess[arc.to] += span;
      excess[arc.from] -= span;
      index.push_back(e);
      base.push_back(arc.lower + span);
    } else {
      index.push_back(g.add(arc.from, arc.to, span, 0));
      base.push_back(arc.lower);
    }
  }
  g.add(net.sink, net.source, inf, 0);

  std::int64_t required = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      g.add(super_source, v, excess[v], 0);
      required += excess[v];
    } else if (excess[v] < 0) {
      g.add(v, super_sink, -excess[v], 0);
    }
  }
  if (min_cost_flow(g, super_source, super_sink, required) < required) return std::nullopt;

  ProfitFlow result;
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    const auto& arc = net.arcs[k];
    // For a pre-saturated arc the stored edge runs backwards; flow on it
    // cancels the saturation.
    const std::int64_t moved = g.edges[index[k] ^ 1].cap;
    const std::int64_t f = arc.profit > 0 ? base[k] - moved : base[k] + moved;
    result.flow.push_back(f);
    result.profit += f * arc.profit;
    if (arc.from == net.source) result.value += f;
    if (arc.to == net.source) result.value -= f;
  }
  return result;
}

}  // namespace prefalloc::kernels
