#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prefalloc/error.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc {

/// Map agent -> bundle of items, index-based against one Instance. Bundles
/// are kept sorted. Disjointness and membership (bundle of agent i lies in
/// V_i) are not enforced on mutation; see validate_allocation.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::size_t agent_count) : bundles_(agent_count) {}

  std::size_t agent_count() const noexcept { return bundles_.size(); }
  std::span<const ItemIndex> bundle(AgentIndex a) const { return bundles_.at(a); }

  void assign(AgentIndex a, ItemIndex v);
  void unassign(AgentIndex a, ItemIndex v);
  /// Adds every item of `other` to this allocation (same agent count).
  void merge(const Allocation& other);

  /// First agent (ascending) holding `v`.
  std::optional<AgentIndex> owner(ItemIndex v) const;
  std::size_t assigned_count() const noexcept;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::vector<ItemIndex>> bundles_;
};

/// Allocation as it appears in JSON: agent id -> item ids.
using NamedAllocation = std::map<std::string, std::vector<std::string>>;

NamedAllocation to_named(const Instance& inst, const Allocation& alloc);

/// Every violation of: known agents, known items, pairwise disjointness, and
/// bundle(i) ⊆ V_i. Empty result means valid.
std::vector<Violation> validate_allocation(const Instance& inst, const NamedAllocation& alloc);
std::vector<Violation> validate_allocation(const Instance& inst, const Allocation& alloc);

/// Converts a named allocation. In lenient mode items outside the receiving
/// agent's graph are dropped with a warning instead of being reported.
/// Throws ValidationError listing all remaining violations.
Allocation resolve_allocation(const Instance& inst, const NamedAllocation& alloc, bool lenient = false,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace prefalloc
