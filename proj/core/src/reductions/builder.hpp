#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prefalloc/allocation.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc::reductions::detail {

inline std::string name(const std::string& prefix, std::size_t a) { return prefix + ":" + std::to_string(a); }
inline std::string name(const std::string& prefix, std::size_t a, std::size_t b) {
  return prefix + ":" + std::to_string(a) + ":" + std::to_string(b);
}

// Name-level instance assembly. Agents keep insertion order until
// make_instance canonicalizes.
class Builder {
 public:
  void item(const std::string& v) {
    if (items_.insert(v).second) spec_.items.push_back(v);
  }

  void arc(const std::string& agent, const std::string& from, const std::string& to) {
    vertex(agent, from);
    vertex(agent, to);
    spec_.agents[slot(agent)].arcs.emplace_back(from, to);
  }

  void path(const std::string& agent, const std::vector<std::string>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i + 1 < vertices.size()) {
        arc(agent, vertices[i], vertices[i + 1]);
      } else {
        vertex(agent, vertices[i]);
      }
    }
  }

  void vertex(const std::string& agent, const std::string& v) {
    item(v);
    const std::size_t a = slot(agent);
    if (agent_items_[a].insert(v).second) spec_.agents[a].items.push_back(v);
  }

  Instance build() const { return make_instance(spec_); }

 private:
  std::size_t slot(const std::string& agent) {
    const auto [it, fresh] = index_.emplace(agent, spec_.agents.size());
    if (fresh) {
      spec_.agents.push_back(AgentSpec{agent, {}, {}});
      agent_items_.emplace_back();
    }
    return it->second;
  }

  InstanceSpec spec_;
  std::set<std::string> items_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::set<std::string>> agent_items_;
};

inline ItemIndex item_of(const Instance& inst, const std::string& v) {
  const auto found = inst.find_item(v);
  if (!found) throw std::logic_error("generated instance lacks item " + v);
  return *found;
}

inline AgentIndex agent_of(const Instance& inst, const std::string& a) {
  const auto found = inst.find_agent(a);
  if (!found) throw std::logic_error("generated instance lacks agent " + a);
  return *found;
}

inline void give(const Instance& inst, Allocation& alloc, const std::string& agent, const std::string& v) {
  alloc.assign(agent_of(inst, agent), item_of(inst, v));
}

inline bool holds(const Instance& inst, const Allocation& alloc, const std::string& agent, const std::string& v) {
  const auto bundle = alloc.bundle(agent_of(inst, agent));
  const ItemIndex item = item_of(inst, v);
  return std::find(bundle.begin(), bundle.end(), item) != bundle.end();
}

// Rejects invalid allocations and allocations above the threshold.
inline void require_within(const Instance& inst, const Allocation& alloc, Objective objective,
                           std::int64_t threshold) {
  if (alloc.agent_count() != inst.agent_count()) throw DomainError("allocation has the wrong number of agents");
  if (!validate_allocation(inst, alloc).empty()) throw DomainError("allocation is not valid for the instance");
  const std::int64_t value = objective_value(inst, alloc, objective);
  if (value > threshold) {
    throw DomainError(std::string(to_string(objective)) + " dissatisfaction " + std::to_string(value) +
                      " exceeds the threshold " + std::to_string(threshold));
  }
}

// The forward construction must always meet its own threshold.
inline void ensure_within(const Instance& inst, const Allocation& alloc, Objective objective,
                          std::int64_t threshold) {
  if (objective_value(inst, alloc, objective) > threshold) {
    throw std::logic_error("forward witness misses the threshold");
  }
}

}  // namespace prefalloc::reductions::detail
