#include "prefalloc/evaluate.hpp"

#include <algorithm>
#include <limits>

namespace prefalloc {

std::string_view to_string(Objective objective) noexcept {
  return objective == Objective::Sum ? "sum" : "max";
}

std::optional<Objective> parse_objective(std::string_view text) noexcept {
  if (text == "sum") return Objective::Sum;
  if (text == "max") return Objective::Max;
  return std::nullopt;
}

std::size_t DissatisfactionProfile::sum() const noexcept {
  std::size_t total = 0;
  for (std::size_t d : values) total += d;
  return total;
}

std::size_t DissatisfactionProfile::max() const noexcept {
  std::size_t best = 0;
  for (std::size_t d : values) best = std::max(best, d);
  return best;
}

std::int64_t DissatisfactionProfile::aggregate(Objective objective) const noexcept {
  return static_cast<std::int64_t>(objective == Objective::Sum ? sum() : max());
}

namespace {

void require_valid(const Instance& inst, const Allocation& alloc) {
  auto violations = validate_allocation(inst, alloc);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

std::size_t unchecked_dissatisfaction(const Instance& inst, const Allocation& alloc, AgentIndex agent) {
  const auto& g = inst.graph(agent);
  return g.size() - g.dominated_count(alloc.bundle(agent));
}

}  // namespace

std::size_t dissatisfaction(const Instance& inst, const Allocation& alloc, AgentIndex agent) {
  require_valid(inst, alloc);
  if (agent >= inst.agent_count()) throw DomainError("unknown agent index " + std::to_string(agent));
  return unchecked_dissatisfaction(inst, alloc, agent);
}

std::size_t satisfaction(const Instance& inst, const Allocation& alloc, AgentIndex agent) {
  return inst.graph(agent).size() - dissatisfaction(inst, alloc, agent);
}

DissatisfactionProfile profile(const Instance& inst, const Allocation& alloc) {
  require_valid(inst, alloc);
  DissatisfactionProfile result;
  result.values.reserve(inst.agent_count());
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    result.values.push_back(unchecked_dissatisfaction(inst, alloc, a));
  }
  return result;
}

std::int64_t objective_value(const Instance& inst, const Allocation& alloc, Objective objective) {
  return profile(inst, alloc).aggregate(objective);
}

bool is_minimal(const Instance& inst, const Allocation& alloc) {
  for (AgentIndex a = 0; a < alloc.agent_count(); ++a) {
    const auto& g = inst.graph(a);
    const auto bundle = alloc.bundle(a);
    for (ItemIndex u : bundle) {
      for (ItemIndex v : bundle) {
        if (u != v && g.precedes(u, v)) return false;
      }
    }
  }
  return true;
}

Allocation minimize(const Instance& inst, const Allocation& alloc) {
  Allocation result(alloc.agent_count());
  for (AgentIndex a = 0; a < alloc.agent_count(); ++a) {
    const auto& g = inst.graph(a);
    const auto bundle = alloc.bundle(a);
    for (ItemIndex v : bundle) {
      const bool dominated = std::any_of(bundle.begin(), bundle.end(),
                                         [&](ItemIndex u) { return u != v && g.precedes(u, v); });
      if (!dominated) result.assign(a, v);
    }
  }
  return result;
}

std::uint64_t enumeration_size(const Instance& inst) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (ItemIndex v = 0; v < inst.item_count(); ++v) {
    const std::uint64_t choices = 1 + inst.desired_by(v).size();
    if (size > kMax / choices) return kMax;
    size *= choices;
  }
  return size;
}

}  // namespace prefalloc
