#include "prefalloc/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "prefalloc/error.hpp"

namespace prefalloc {

namespace {

// Kahn's algorithm over local indices. Returns an empty vector when the
// graph has a cycle (and n > 0).
std::vector<std::size_t> topological_order(const std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& targets : out) {
    for (std::size_t y : targets) ++indegree[y];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) order.push_back(x);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t y : out[order[head]]) {
      if (--indegree[y] == 0) order.push_back(y);
    }
  }
  if (order.size() != n) return {};
  return order;
}

}  // namespace

PreferenceGraph::PreferenceGraph(std::vector<ItemIndex> items, std::vector<Arc> arcs)
    : items_(std::move(items)), arcs_(std::move(arcs)) {
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw DomainError("preference graph lists an item twice");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw DomainError("preference graph contains a duplicate arc");
  }

  const std::size_t n = items_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  std::vector<std::vector<std::size_t>> local_out(n);
  for (const Arc& arc : arcs_) {
    if (arc.from == arc.to) throw DomainError("preference graph contains a self-loop");
    if (!contains(arc.from) || !contains(arc.to)) {
      throw DomainError("arc endpoint is not a vertex of the preference graph");
    }
    const std::size_t x = local(arc.from);
    const std::size_t y = local(arc.to);
    out_[x].push_back(arc.to);
    in_[y].push_back(arc.from);
    local_out[x].push_back(y);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());

  const auto order = topological_order(local_out);
  if (n > 0 && order.empty()) throw DomainError("preference graph is not acyclic");

  reach_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    for (std::size_t y : local_out[x]) {
      reach_[x].set(y);
      reach_[x] |= reach_[y];
    }
  }
}

bool PreferenceGraph::contains(ItemIndex v) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), v);
}

std::size_t PreferenceGraph::local(ItemIndex v) const {
  const auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) {
    throw DomainError("item " + std::to_string(v) + " is not a vertex of the preference graph");
  }
  return static_cast<std::size_t>(it - items_.begin());
}

std::size_t PreferenceGraph::in_degree(ItemIndex v) const { return in_[local(v)].size(); }
std::size_t PreferenceGraph::out_degree(ItemIndex v) const { return out_[local(v)].size(); }

std::span<const ItemIndex> PreferenceGraph::out_neighbors(ItemIndex v) const { return out_[local(v)]; }
std::span<const ItemIndex> PreferenceGraph::in_neighbors(ItemIndex v) const { return in_[local(v)]; }

std::vector<ItemIndex> PreferenceGraph::successors(ItemIndex v) const {
  const auto& bits = reach_[local(v)];
  std::vector<ItemIndex> result;
  for (auto y = bits.find_first(); y != boost::dynamic_bitset<>::npos; y = bits.find_next(y)) {
    result.push_back(items_[y]);
  }
  return result;
}

std::vector<ItemIndex> PreferenceGraph::predecessors(ItemIndex v) const {
  const std::size_t y = local(v);
  std::vector<ItemIndex> result;
  for (std::size_t x = 0; x < items_.size(); ++x) {
    if (reach_[x].test(y)) result.push_back(items_[x]);
  }
  return result;
}

bool PreferenceGraph::precedes(ItemIndex u, ItemIndex v) const { return reach_[local(u)].test(local(v)); }

std::vector<ItemIndex> PreferenceGraph::dominated_set(std::span<const ItemIndex> s) const {
  boost::dynamic_bitset<> covered(items_.size());
  for (ItemIndex v : s) {
    const std::size_t x = local(v);
    covered.set(x);
    covered |= reach_[x];
  }
  std::vector<ItemIndex> result;
  result.reserve(covered.count());
  for (auto y = covered.find_first(); y != boost::dynamic_bitset<>::npos; y = covered.find_next(y)) {
    result.push_back(items_[y]);
  }
  return result;
}

std::size_t PreferenceGraph::dominated_count(std::span<const ItemIndex> s) const {
  boost::dynamic_bitset<> covered(items_.size());
  for (ItemIndex v : s) {
    const std::size_t x = local(v);
    covered.set(x);
    covered |= reach_[x];
  }
  return covered.count();
}

std::vector<ItemIndex> PreferenceGraph::roots() const {
  std::vector<ItemIndex> result;
  for (std::size_t x = 0; x < items_.size(); ++x) {
    if (in_[x].empty()) result.push_back(items_[x]);
  }
  return result;
}

std::optional<ItemIndex> Instance::find_item(std::string_view name) const {
  const auto it = std::lower_bound(items_.begin(), items_.end(), name);
  if (it == items_.end() || *it != name) return std::nullopt;
  return static_cast<ItemIndex>(it - items_.begin());
}

std::optional<AgentIndex> Instance::find_agent(std::string_view id) const {
  const auto it = std::lower_bound(agents_.begin(), agents_.end(), id,
                                   [](const Agent& a, std::string_view key) { return a.id < key; });
  if (it == agents_.end() || it->id != id) return std::nullopt;
  return static_cast<AgentIndex>(it - agents_.begin());
}

std::size_t Instance::total_graph_size() const noexcept {
  std::size_t total = 0;
  for (const auto& agent : agents_) total += agent.graph.size();
  return total;
}

InstanceSpec Instance::to_spec() const {
  InstanceSpec spec;
  spec.items = items_;
  for (const auto& agent : agents_) {
    AgentSpec a;
    a.id = agent.id;
    for (ItemIndex v : agent.graph.items()) a.items.push_back(items_[v]);
    for (const Arc& arc : agent.graph.arcs()) a.arcs.emplace_back(items_[arc.from], items_[arc.to]);
    spec.agents.push_back(std::move(a));
  }
  return spec;
}

Instance make_instance(const InstanceSpec& spec, std::vector<std::string>* warnings) {
  std::set<std::string> universe;
  for (std::size_t i = 0; i < spec.items.size(); ++i) {
    const auto& name = spec.items[i];
    const std::string where = "/items/" + std::to_string(i);
    if (name.empty()) throw ParseError(where, "item id must be a non-empty string");
    if (!universe.insert(name).second) throw ParseError(where, "duplicate item id '" + name + "'");
  }

  std::set<std::string> agent_ids;
  std::set<std::string> desired;
  for (std::size_t a = 0; a < spec.agents.size(); ++a) {
    const auto& agent = spec.agents[a];
    const std::string where = "/agents/" + std::to_string(a);
    if (agent.id.empty()) throw ParseError(where + "/id", "agent id must be a non-empty string");
    if (!agent_ids.insert(agent.id).second) {
      throw ParseError(where + "/id", "duplicate agent id '" + agent.id + "'");
    }
    std::set<std::string> own;
    for (std::size_t i = 0; i < agent.items.size(); ++i) {
      const auto& name = agent.items[i];
      const std::string at = where + "/items/" + std::to_string(i);
      if (!universe.contains(name)) throw ParseError(at, "item '" + name + "' is not in the item universe");
      if (!own.insert(name).second) throw ParseError(at, "item '" + name + "' listed twice for agent '" + agent.id + "'");
      desired.insert(name);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < agent.arcs.size(); ++i) {
      const auto& [from, to] = agent.arcs[i];
      const std::string at = where + "/arcs/" + std::to_string(i);
      if (!own.contains(from)) throw ParseError(at, "arc endpoint '" + from + "' is not an item of agent '" + agent.id + "'");
      if (!own.contains(to)) throw ParseError(at, "arc endpoint '" + to + "' is not an item of agent '" + agent.id + "'");
      if (from == to) throw ParseError(at, "self-loop on item '" + from + "'");
      if (!seen.insert(agent.arcs[i]).second) throw ParseError(at, "duplicate arc ('" + from + "', '" + to + "')");
    }
  }

  Instance inst;
  for (const auto& name : universe) {
    if (desired.contains(name)) {
      inst.items_.push_back(name);
    } else if (warnings != nullptr) {
      warnings->push_back("item '" + name + "' is desired by no agent; dropped");
    }
  }

  std::vector<std::size_t> order(spec.agents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return spec.agents[x].id < spec.agents[y].id; });

  for (std::size_t a : order) {
    const auto& agent = spec.agents[a];
    std::vector<ItemIndex> items;
    for (const auto& name : agent.items) items.push_back(*inst.find_item(name));
    std::vector<Arc> arcs;
    for (const auto& [from, to] : agent.arcs) arcs.push_back({*inst.find_item(from), *inst.find_item(to)});
    try {
      inst.agents_.push_back({agent.id, PreferenceGraph(std::move(items), std::move(arcs))});
    } catch (const DomainError& e) {
      throw ParseError("/agents/" + std::to_string(a), std::string(e.what()) + " (agent '" + agent.id + "')");
    }
  }

  inst.desired_by_.assign(inst.items_.size(), {});
  for (AgentIndex a = 0; a < inst.agents_.size(); ++a) {
    for (ItemIndex v : inst.agents_[a].graph.items()) inst.desired_by_[v].push_back(a);
  }
  return inst;
}

}  // namespace prefalloc
