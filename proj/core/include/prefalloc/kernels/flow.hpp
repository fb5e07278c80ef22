#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace prefalloc::kernels {

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t lower = 0;
  /// Empty means unbounded.
  std::optional<std::int64_t> upper;
  std::int64_t profit = 0;
};

/// Directed network with distinguished source and sink. Unbounded arcs are
/// replaced internally by 1 + (sum of all finite bounds).
struct FlowNetwork {
  std::size_t vertex_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<FlowArc> arcs;

  std::size_t add_vertex() { return vertex_count++; }
  std::size_t add_arc(std::size_t from, std::size_t to, std::optional<std::int64_t> upper, std::int64_t lower = 0,
                      std::int64_t profit = 0);

  /// Value used in place of an unbounded capacity.
  std::int64_t infinity() const;
};

struct MaxFlow {
  std::int64_t value = 0;
  /// Flow on each arc of the input network.
  std::vector<std::int64_t> flow;
  /// Vertices reachable from the source in the final residual network.
  std::vector<bool> source_side;
  /// Capacity of the arcs leaving `source_side`; equals `value`.
  std::int64_t cut_capacity = 0;
};

/// Dinic's algorithm. Lower bounds and profits must be zero (DomainError
/// otherwise).
MaxFlow max_flow(const FlowNetwork& net);

struct ProfitFlow {
  std::vector<std::int64_t> flow;
  std::int64_t profit = 0;
  /// Net flow leaving the source.
  std::int64_t value = 0;
};

/// Feasible integral s-t flow (lower <= f <= upper on every arc, value >= 0)
/// maximizing the total profit, or nullopt when the lower bounds cannot be
/// met. Profits must be non-negative and unbounded arcs carry none
/// (DomainError otherwise). Solved as a min-cost circulation: lower bounds
/// are shifted out, profitable arcs are pre-saturated, and the imbalance is
/// routed by successive shortest paths with potentials.
std::optional<ProfitFlow> max_profit_flow(const FlowNetwork& net);

}  // namespace prefalloc::kernels
