#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "prefalloc/allocation.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc {

enum class Objective { Sum, Max };

std::string_view to_string(Objective objective) noexcept;
std::optional<Objective> parse_objective(std::string_view text) noexcept;

/// Per-agent dissatisfaction vector, indexed by AgentIndex.
struct DissatisfactionProfile {
  std::vector<std::size_t> values;

  std::size_t sum() const noexcept;
  std::size_t max() const noexcept;
  std::int64_t aggregate(Objective objective) const noexcept;

  friend auto operator<=>(const DissatisfactionProfile&, const DissatisfactionProfile&) = default;
};

/// Number of items of V_i not dominated by the bundle of agent i.
/// Throws ValidationError when `alloc` is invalid for `inst`.
std::size_t dissatisfaction(const Instance& inst, const Allocation& alloc, AgentIndex agent);
/// |V_i| - dissatisfaction.
std::size_t satisfaction(const Instance& inst, const Allocation& alloc, AgentIndex agent);
DissatisfactionProfile profile(const Instance& inst, const Allocation& alloc);
std::int64_t objective_value(const Instance& inst, const Allocation& alloc, Objective objective);

/// True iff no agent holds two items where one dominates the other.
bool is_minimal(const Instance& inst, const Allocation& alloc);
/// Drops every item dominated by another item of the same bundle. Leaves the
/// profile unchanged.
Allocation minimize(const Instance& inst, const Allocation& alloc);

/// Number of item -> (nobody | desiring agent) assignment vectors, i.e. the
/// product over items of (1 + |agents desiring it|). Saturates at UINT64_MAX.
std::uint64_t enumeration_size(const Instance& inst) noexcept;

}  // namespace prefalloc
