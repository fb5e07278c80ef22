#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/kernels/assignment.hpp"
#include "prefalloc/kernels/flow.hpp"
#include "prefalloc/kernels/independent_set.hpp"
#include "prefalloc/random.hpp"
#include "prefalloc/reductions/sources.hpp"

// Reference implementations for tests. Deliberately simple and written
// against raw arcs only, without the library's reachability or enumeration
// code.
namespace naive {

using prefalloc::Allocation;
using prefalloc::Instance;
using prefalloc::Objective;

using Profile = std::vector<std::size_t>;

/// Dissatisfaction of each agent, recomputed by DFS over the arcs.
Profile profile_of(const Instance& inst, const Allocation& alloc);

struct Optimum {
  std::int64_t value = 0;
  std::uint64_t vectors = 0;
};

/// Enumerates every item -> (nobody | desiring agent) vector.
Optimum optimum(const Instance& inst, Objective objective);
std::set<Profile> profiles(const Instance& inst);

std::int64_t lsap(const prefalloc::kernels::CostMatrix& cost);
std::int64_t lbap(const prefalloc::kernels::CostMatrix& cost);
/// Cost of a claimed assignment, or nullopt when it is not injective or
/// does not saturate the smaller side.
std::optional<std::int64_t> assignment_cost(const prefalloc::kernels::CostMatrix& cost,
                                            const std::vector<std::int64_t>& row_to_col, bool bottleneck);

/// Minimum s-t cut capacity over all vertex bipartitions (zero lower
/// bounds; unbounded arcs count as `infinity`).
std::int64_t min_cut(const prefalloc::kernels::FlowNetwork& net, std::int64_t infinity);
/// Best profit of a feasible flow of non-negative value, capping unbounded
/// arcs at `cap`.
std::optional<std::int64_t> max_profit(const prefalloc::kernels::FlowNetwork& net, std::int64_t cap);

std::int64_t mwis(const prefalloc::kernels::VertexWeightedGraph& g);
bool is_independent(const prefalloc::kernels::VertexWeightedGraph& g, const std::vector<std::size_t>& set);

/// Random instance of class `cls` with between 1 and `max_items` items and
/// between 1 (or `min_agents`) and `max_agents` agents.
Instance random_instance(prefalloc::gen::RandomClass cls, std::size_t max_items, std::size_t max_agents,
                         prefalloc::gen::Rng& rng, std::size_t min_agents = 1);

/// 3q elements and 3q sets: a planted exact cover plus two more random
/// partitions of the ground set into triples, shuffled together.
struct PlantedX3C {
  prefalloc::reductions::X3CInstance x3c;
  prefalloc::reductions::ExactCover cover;
};
PlantedX3C planted_x3c(std::size_t q, prefalloc::gen::Rng& rng);

/// Clauses over three distinct variables, each satisfied by `assignment`.
struct PlantedSat {
  prefalloc::reductions::Cnf3Formula formula;
  prefalloc::reductions::TruthAssignment assignment;
};
PlantedSat planted_sat(std::uint32_t variables, std::size_t clauses, prefalloc::gen::Rng& rng);

}  // namespace naive
