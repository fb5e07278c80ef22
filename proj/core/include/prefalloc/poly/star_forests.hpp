#pragma once

#include <vector>

#include "prefalloc/instance.hpp"
#include "prefalloc/poly/solution.hpp"

namespace prefalloc::poly {

struct PreassignmentReport {
  /// Personal items, one-root items and the forced leaves of one-root items.
  Allocation assigned;
  /// Items left for the independent-set stage, ascending.
  std::vector<ItemIndex> remaining;
  /// Leaves forced towards both agents (out-neighbors of one-root items in
  /// both graphs). They are dominated for both agents whoever holds them,
  /// so the first rule applied wins.
  std::vector<ItemIndex> conflicts;
};

/// Throws DomainError unless there are two agents whose graphs are
/// disjoint unions of out-stars.
void require_two_star_forests(const Instance& inst);

/// Applies the forcing rules to `start`: every personal item goes to its
/// agent, every one-root item to the agent where it is a root, and that
/// root's shared out-neighbors to the other agent. Rules for agent `first`
/// run before those of the other agent; a conflicted leaf keeps the owner
/// set by the earlier rule. Items the rules do not touch keep their owner.
Allocation apply_preassignment_rules(const Instance& inst, const Allocation& start, AgentIndex first = 0);

/// The rules applied to the empty allocation.
PreassignmentReport preassign_two_star_forests(const Instance& inst);

/// Min-sum dissatisfaction for two agents with out-star forests: the
/// preassignment, then a maximum-weight independent set over the remaining
/// (item, agent) pairs. The weight of (v, i) is the number of items v newly
/// dominates for agent i on top of the preassignment.
Solution minsum_two_star_forests(const Instance& inst);

}  // namespace prefalloc::poly
