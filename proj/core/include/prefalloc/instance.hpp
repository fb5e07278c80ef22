#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace prefalloc {

/// Position of an item in the instance's canonical (sorted) item universe.
using ItemIndex = std::uint32_t;
/// Position of an agent in the instance's canonical (sorted) agent list.
using AgentIndex = std::uint32_t;

struct Arc {
  ItemIndex from;
  ItemIndex to;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One agent's preference DAG over a subset of the item universe. An arc
/// (a, b) means a is preferred over b; preference is transitive.
///
/// Immutable after construction. Reachability is precomputed once in the
/// constructor, so every query is a lookup and the object can be shared
/// across threads.
class PreferenceGraph {
 public:
  PreferenceGraph() = default;

  /// Throws DomainError on an arc endpoint outside `items`, a self-loop, a
  /// duplicate item or arc, or a directed cycle.
  PreferenceGraph(std::vector<ItemIndex> items, std::vector<Arc> arcs);

  /// Sorted ascending.
  std::span<const ItemIndex> items() const noexcept { return items_; }
  /// Sorted ascending.
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(ItemIndex v) const noexcept;

  std::size_t in_degree(ItemIndex v) const;
  std::size_t out_degree(ItemIndex v) const;
  std::size_t degree(ItemIndex v) const { return in_degree(v) + out_degree(v); }
  std::span<const ItemIndex> out_neighbors(ItemIndex v) const;
  std::span<const ItemIndex> in_neighbors(ItemIndex v) const;

  /// All u != v reachable from v. Sorted.
  std::vector<ItemIndex> successors(ItemIndex v) const;
  /// All u != v that reach v. Sorted.
  std::vector<ItemIndex> predecessors(ItemIndex v) const;
  /// True iff u != v and there is a directed path from u to v.
  bool precedes(ItemIndex u, ItemIndex v) const;
  /// `s` together with every successor of an element of `s`. Sorted.
  std::vector<ItemIndex> dominated_set(std::span<const ItemIndex> s) const;
  std::size_t dominated_count(std::span<const ItemIndex> s) const;
  /// Vertices with in-degree zero. Sorted.
  std::vector<ItemIndex> roots() const;

 private:
  std::size_t local(ItemIndex v) const;

  std::vector<ItemIndex> items_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ItemIndex>> out_;
  std::vector<std::vector<ItemIndex>> in_;
  // reach_[x] has bit y set iff local vertex y is a strict successor of x.
  std::vector<boost::dynamic_bitset<>> reach_;
};

struct Agent {
  std::string id;
  PreferenceGraph graph;
};

/// Name-level description of an instance, used by the parser and the
/// generators. Order is irrelevant; `make_instance` canonicalizes.
struct AgentSpec {
  std::string id;
  std::vector<std::string> items;
  std::vector<std::pair<std::string, std::string>> arcs;
};

struct InstanceSpec {
  std::vector<std::string> items;
  std::vector<AgentSpec> agents;
};

/// Item universe plus one preference graph per agent, in canonical form:
/// items and agents are sorted by id, and every item is desired by at least
/// one agent.
class Instance {
 public:
  Instance() = default;

  std::size_t item_count() const noexcept { return items_.size(); }
  std::size_t agent_count() const noexcept { return agents_.size(); }
  std::span<const std::string> items() const noexcept { return items_; }
  std::span<const Agent> agents() const noexcept { return agents_; }

  const std::string& item_name(ItemIndex v) const { return items_.at(v); }
  const std::string& agent_id(AgentIndex a) const { return agents_.at(a).id; }
  const PreferenceGraph& graph(AgentIndex a) const { return agents_.at(a).graph; }

  std::optional<ItemIndex> find_item(std::string_view name) const;
  std::optional<AgentIndex> find_agent(std::string_view id) const;

  /// Agents whose graph contains `v`, ascending.
  std::span<const AgentIndex> desired_by(ItemIndex v) const { return desired_by_.at(v); }
  /// Sum over agents of |V_i|.
  std::size_t total_graph_size() const noexcept;

  InstanceSpec to_spec() const;

  friend Instance make_instance(const InstanceSpec& spec, std::vector<std::string>* warnings);

 private:
  std::vector<std::string> items_;
  std::vector<Agent> agents_;
  std::vector<std::vector<AgentIndex>> desired_by_;
};

/// Validates and canonicalizes `spec`. Items desired by no agent are dropped
/// and reported through `warnings` (when non-null). Errors are ParseError
/// with a JSON-pointer position ("/agents/2/arcs/0").
Instance make_instance(const InstanceSpec& spec, std::vector<std::string>* warnings = nullptr);

}  // namespace prefalloc
