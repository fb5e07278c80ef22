#include "prefalloc/allocation.hpp"

#include <algorithm>
#include <set>

namespace prefalloc {

void Allocation::assign(AgentIndex a, ItemIndex v) {
  auto& bundle = bundles_.at(a);
  const auto it = std::lower_bound(bundle.begin(), bundle.end(), v);
  if (it == bundle.end() || *it != v) bundle.insert(it, v);
}

void Allocation::unassign(AgentIndex a, ItemIndex v) {
  auto& bundle = bundles_.at(a);
  const auto it = std::lower_bound(bundle.begin(), bundle.end(), v);
  if (it != bundle.end() && *it == v) bundle.erase(it);
}

void Allocation::merge(const Allocation& other) {
  if (other.agent_count() != agent_count()) throw DomainError("cannot merge allocations over different agent sets");
  for (AgentIndex a = 0; a < bundles_.size(); ++a) {
    for (ItemIndex v : other.bundles_[a]) assign(a, v);
  }
}

std::optional<AgentIndex> Allocation::owner(ItemIndex v) const {
  for (AgentIndex a = 0; a < bundles_.size(); ++a) {
    if (std::binary_search(bundles_[a].begin(), bundles_[a].end(), v)) return a;
  }
  return std::nullopt;
}

std::size_t Allocation::assigned_count() const noexcept {
  std::size_t total = 0;
  for (const auto& bundle : bundles_) total += bundle.size();
  return total;
}

NamedAllocation to_named(const Instance& inst, const Allocation& alloc) {
  NamedAllocation named;
  for (AgentIndex a = 0; a < alloc.agent_count(); ++a) {
    auto& items = named[inst.agent_id(a)];
    for (ItemIndex v : alloc.bundle(a)) items.push_back(inst.item_name(v));
    std::sort(items.begin(), items.end());
  }
  return named;
}

namespace {

std::vector<Violation> check(const Instance& inst, const NamedAllocation& alloc, bool lenient,
                             Allocation* resolved, std::vector<std::string>* warnings) {
  std::vector<Violation> violations;
  std::set<std::string> taken;
  for (const auto& [agent_id, items] : alloc) {
    const auto agent = inst.find_agent(agent_id);
    if (!agent) {
      violations.push_back({Violation::Kind::UnknownAgent, agent_id, {}});
      continue;
    }
    for (const auto& name : items) {
      const auto item = inst.find_item(name);
      if (!item) {
        violations.push_back({Violation::Kind::UnknownItem, agent_id, name});
        continue;
      }
      if (!inst.graph(*agent).contains(*item)) {
        if (lenient) {
          if (warnings != nullptr) {
            warnings->push_back("item '" + name + "' is irrelevant for agent '" + agent_id + "'; dropped");
          }
        } else {
          violations.push_back({Violation::Kind::IrrelevantItem, agent_id, name});
        }
        continue;
      }
      if (!taken.insert(name).second) {
        violations.push_back({Violation::Kind::Overlap, agent_id, name});
        continue;
      }
      if (resolved != nullptr) resolved->assign(*agent, *item);
    }
  }
  return violations;
}

}  // namespace

std::vector<Violation> validate_allocation(const Instance& inst, const NamedAllocation& alloc) {
  return check(inst, alloc, false, nullptr, nullptr);
}

std::vector<Violation> validate_allocation(const Instance& inst, const Allocation& alloc) {
  std::vector<Violation> violations;
  if (alloc.agent_count() != inst.agent_count()) {
    violations.push_back({Violation::Kind::UnknownAgent, "#" + std::to_string(alloc.agent_count()), {}});
    return violations;
  }
  std::vector<bool> taken(inst.item_count(), false);
  for (AgentIndex a = 0; a < alloc.agent_count(); ++a) {
    for (ItemIndex v : alloc.bundle(a)) {
      if (v >= inst.item_count()) {
        violations.push_back({Violation::Kind::UnknownItem, inst.agent_id(a), "#" + std::to_string(v)});
        continue;
      }
      if (!inst.graph(a).contains(v)) {
        violations.push_back({Violation::Kind::IrrelevantItem, inst.agent_id(a), inst.item_name(v)});
        continue;
      }
      if (taken[v]) {
        violations.push_back({Violation::Kind::Overlap, inst.agent_id(a), inst.item_name(v)});
        continue;
      }
      taken[v] = true;
    }
  }
  return violations;
}

Allocation resolve_allocation(const Instance& inst, const NamedAllocation& alloc, bool lenient,
                              std::vector<std::string>* warnings) {
  Allocation resolved(inst.agent_count());
  auto violations = check(inst, alloc, lenient, &resolved, warnings);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return resolved;
}

}  // namespace prefalloc
