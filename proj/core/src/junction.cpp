#include "prefalloc/junction.hpp"

#include <algorithm>
#include <limits>

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/kernels/flow.hpp"

namespace prefalloc::junction {

std::vector<JunctionSlot> junction_slots(const Instance& inst) {
  std::vector<JunctionSlot> slots;
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    for (ItemIndex v : junction_vertices(inst.graph(a))) slots.push_back({a, v});
  }
  return slots;
}

std::vector<ItemIndex> CaseAssignment::with(AgentIndex agent, JunctionCase c) const {
  std::vector<ItemIndex> result;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (slots[s].agent == agent && cases[s] == c) result.push_back(slots[s].item);
  }
  return result;
}

std::uint64_t case_count(std::size_t gamma) {
  if (gamma >= 32) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (2 * gamma);
}

CaseAssignment case_at(const std::vector<JunctionSlot>& slots, std::uint64_t index) {
  CaseAssignment ca;
  ca.slots = slots;
  ca.cases.assign(slots.size(), JunctionCase::AllocatedSelf);
  for (std::size_t s = slots.size(); s-- > 0;) {
    ca.cases[s] = static_cast<JunctionCase>(1 + index % 4);
    index /= 4;
  }
  return ca;
}

namespace {

void check_gamma(std::size_t gamma, std::size_t limit) {
  if (gamma > limit) {
    throw SizeLimitError("junction enumeration needs gamma <= " + std::to_string(limit) + ", instance has gamma " +
                             std::to_string(gamma),
                         gamma, limit);
  }
}

bool any_precedes(const PreferenceGraph& g, const std::vector<ItemIndex>& from, const std::vector<ItemIndex>& to) {
  for (ItemIndex u : from) {
    for (ItemIndex v : to) {
      if (g.precedes(u, v)) return true;
    }
  }
  return false;
}

std::vector<ItemIndex> join(std::vector<ItemIndex> a, const std::vector<ItemIndex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool contains(const std::vector<ItemIndex>& set, ItemIndex v) { return std::find(set.begin(), set.end(), v) != set.end(); }

}  // namespace

std::vector<CaseAssignment> enumerate_cases(const Instance& inst, std::size_t gamma_limit) {
  const auto slots = junction_slots(inst);
  check_gamma(slots.size(), gamma_limit);
  std::vector<CaseAssignment> result;
  const std::uint64_t count = case_count(slots.size());
  for (std::uint64_t index = 0; index < count; ++index) result.push_back(case_at(slots, index));
  return result;
}

std::optional<std::string> check_feasibility(const Instance& inst, const CaseAssignment& ca) {
  for (std::size_t s = 0; s < ca.slots.size(); ++s) {
    for (std::size_t t = s + 1; t < ca.slots.size(); ++t) {
      if (ca.cases[s] == JunctionCase::AllocatedSelf && ca.cases[t] == JunctionCase::AllocatedSelf &&
          ca.slots[s].item == ca.slots[t].item && ca.slots[s].agent != ca.slots[t].agent) {
        return "item '" + inst.item_name(ca.slots[s].item) + "' is allocated to two agents";
      }
    }
  }
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    const auto& g = inst.graph(a);
    const auto j1 = ca.with(a, JunctionCase::AllocatedSelf);
    const auto j2 = ca.with(a, JunctionCase::PredecessorAllocated);
    const auto j3 = ca.with(a, JunctionCase::SuccessorAllocated);
    const auto j4 = ca.with(a, JunctionCase::NoneInCone);
    const std::string who = " for agent '" + inst.agent_id(a) + "'";
    for (ItemIndex v : j2) {
      if (g.in_degree(v) == 0) return "case-2 junction '" + inst.item_name(v) + "' has no predecessor" + who;
    }
    for (ItemIndex v : j3) {
      if (g.out_degree(v) == 0) return "case-3 junction '" + inst.item_name(v) + "' has no successor" + who;
    }
    if (any_precedes(g, join(j1, j2), j3)) return "a case-1 or case-2 junction precedes a case-3 junction" + who;
    if (any_precedes(g, j4, join(j1, j3))) return "a case-4 junction precedes a case-1 or case-3 junction" + who;
    if (any_precedes(g, join(j1, j2), j4)) return "a case-4 junction follows a case-1 or case-2 junction" + who;
    if (any_precedes(g, join(j1, j2), j1)) return "a case-1 junction follows a case-1 or case-2 junction" + who;
  }
  return std::nullopt;
}

std::vector<Segment> segments(const Instance& inst, AgentIndex agent) {
  const auto& g = inst.graph(agent);
  const auto junction = junction_vertices(g);
  const auto is_junction = [&](ItemIndex v) { return std::binary_search(junction.begin(), junction.end(), v); };
  std::vector<Segment> result;
  for (ItemIndex v : g.items()) {
    if (is_junction(v)) continue;
    const auto in = g.in_neighbors(v);
    if (!in.empty() && !is_junction(in.front())) continue;  // not the first vertex of its run
    Segment seg;
    seg.agent = agent;
    if (!in.empty()) seg.start = in.front();
    for (ItemIndex x = v;;) {
      seg.items.push_back(x);
      const auto out = g.out_neighbors(x);
      if (out.empty()) break;
      if (is_junction(out.front())) {
        seg.end = out.front();
        break;
      }
      x = out.front();
    }
    result.push_back(std::move(seg));
  }
  return result;
}

namespace {

// Catalog pieces of one agent for one choice of guessed pairs.
struct AgentPart {
  std::vector<Segment> segments;
  std::vector<std::vector<std::size_t>> mandatory;
  std::vector<std::size_t> optional;
};

std::vector<AgentPart> agent_parts(const Instance& inst, const CaseAssignment& ca, AgentIndex a) {
  const auto& g = inst.graph(a);
  const auto j1 = ca.with(a, JunctionCase::AllocatedSelf);
  const auto j2 = ca.with(a, JunctionCase::PredecessorAllocated);
  const auto j3 = ca.with(a, JunctionCase::SuccessorAllocated);
  const auto j12 = join(j1, j2);
  const auto j13 = join(j1, j3);

  std::vector<Segment> usable;
  for (auto& seg : segments(inst, a)) {
    const bool start_ok = !seg.start || contains(j3, *seg.start);
    const bool end_ok = !seg.end || contains(j2, *seg.end);
    if (start_ok && end_ok) usable.push_back(std::move(seg));
  }

  std::vector<std::pair<ItemIndex, ItemIndex>> pairs;
  for (ItemIndex v1 : j3) {
    for (ItemIndex v2 : j2) {
      const bool joined = std::any_of(usable.begin(), usable.end(),
                                      [&](const Segment& s) { return s.start == v1 && s.end == v2; });
      if (joined) pairs.emplace_back(v1, v2);
    }
  }

  // A junction is already justified by another junction of its cone.
  const auto covered_from_above = [&](ItemIndex v2) {
    return std::any_of(j12.begin(), j12.end(), [&](ItemIndex w) { return g.precedes(w, v2); });
  };
  const auto covered_from_below = [&](ItemIndex v1) {
    return std::any_of(j13.begin(), j13.end(), [&](ItemIndex w) { return g.precedes(v1, w); });
  };

  std::vector<AgentPart> parts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    AgentPart part;
    part.segments = usable;
    std::vector<bool> used(usable.size(), false);
    std::vector<bool> guessed3(inst.item_count(), false), guessed2(inst.item_count(), false);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p & 1) == 0) continue;
      const auto [v1, v2] = pairs[p];
      guessed3[v1] = guessed2[v2] = true;
      std::vector<std::size_t> group;
      for (std::size_t s = 0; s < usable.size(); ++s) {
        if (usable[s].start == v1 && usable[s].end == v2) {
          group.push_back(s);
          used[s] = true;
        }
      }
      part.mandatory.push_back(std::move(group));
    }
    bool feasible = true;
    for (ItemIndex v1 : j3) {
      if (guessed3[v1] || covered_from_below(v1)) continue;
      std::vector<std::size_t> group;
      for (std::size_t s = 0; s < usable.size(); ++s) {
        if (usable[s].start == v1 && !usable[s].end && !used[s]) group.push_back(s);
      }
      if (group.empty()) feasible = false;
      for (std::size_t s : group) used[s] = true;
      part.mandatory.push_back(std::move(group));
    }
    for (ItemIndex v2 : j2) {
      if (guessed2[v2] || covered_from_above(v2)) continue;
      std::vector<std::size_t> group;
      for (std::size_t s = 0; s < usable.size(); ++s) {
        if (!usable[s].start && usable[s].end == v2 && !used[s]) group.push_back(s);
      }
      if (group.empty()) feasible = false;
      for (std::size_t s : group) used[s] = true;
      part.mandatory.push_back(std::move(group));
    }
    if (!feasible) continue;
    for (std::size_t s = 0; s < usable.size(); ++s) {
      if (!used[s]) part.optional.push_back(s);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::int64_t total_satisfaction(const Instance& inst, const Allocation& alloc) {
  std::int64_t total = 0;
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    total += static_cast<std::int64_t>(inst.graph(a).dominated_count(alloc.bundle(a)));
  }
  return total;
}

}  // namespace

std::vector<PathCatalog> build_path_catalogs(const Instance& inst, const CaseAssignment& ca) {
  std::vector<PathCatalog> catalogs{PathCatalog{}};
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    const auto parts = agent_parts(inst, ca, a);
    std::vector<PathCatalog> next;
    for (const auto& base : catalogs) {
      for (const auto& part : parts) {
        PathCatalog c = base;
        const std::size_t offset = c.segments.size();
        c.segments.insert(c.segments.end(), part.segments.begin(), part.segments.end());
        for (const auto& group : part.mandatory) {
          auto& g = c.mandatory.emplace_back();
          for (std::size_t s : group) g.push_back(offset + s);
        }
        for (std::size_t s : part.optional) c.optional.push_back(offset + s);
        next.push_back(std::move(c));
      }
    }
    catalogs = std::move(next);
  }
  return catalogs;
}

std::optional<FlowOutcome> solve_flow(const Instance& inst, const CaseAssignment& ca, const PathCatalog& catalog) {
  std::vector<bool> fixed(inst.item_count(), false);
  for (std::size_t s = 0; s < ca.slots.size(); ++s) {
    if (ca.cases[s] == JunctionCase::AllocatedSelf) fixed[ca.slots[s].item] = true;
  }

  kernels::FlowNetwork net;
  net.source = net.add_vertex();
  net.sink = net.add_vertex();
  std::vector<std::size_t> item_vertex(inst.item_count(), 0);
  std::vector<bool> has_vertex(inst.item_count(), false);

  std::vector<std::size_t> exit_of(catalog.segments.size(), net.sink);
  for (const auto& group : catalog.mandatory) {
    const std::size_t w = net.add_vertex();
    net.add_arc(w, net.sink, std::nullopt, 1);
    for (std::size_t s : group) exit_of[s] = w;
  }

  struct Choice {
    std::size_t arc;
    AgentIndex agent;
    ItemIndex item;
  };
  std::vector<Choice> choices;
  for (std::size_t s = 0; s < catalog.segments.size(); ++s) {
    const Segment& seg = catalog.segments[s];
    const std::size_t m = seg.items.size();
    std::size_t previous = 0;
    for (std::size_t p = 0; p < m; ++p) {
      const std::size_t copy = net.add_vertex();
      if (p > 0) net.add_arc(previous, copy, 1);
      const ItemIndex v = seg.items[p];
      if (!fixed[v]) {
        if (!has_vertex[v]) {
          item_vertex[v] = net.add_vertex();
          has_vertex[v] = true;
          net.add_arc(net.source, item_vertex[v], 1);
        }
        const auto profit = static_cast<std::int64_t>(m - p);
        choices.push_back({net.add_arc(item_vertex[v], copy, 1, 0, profit), seg.agent, v});
      }
      previous = copy;
    }
    net.add_arc(previous, exit_of[s], 1);
  }

  const auto flow = kernels::max_profit_flow(net);
  if (!flow) return std::nullopt;
  FlowOutcome outcome;
  outcome.profit = flow->profit;
  outcome.allocation = Allocation(inst.agent_count());
  for (const auto& c : choices) {
    if (flow->flow[c.arc] > 0) outcome.allocation.assign(c.agent, c.item);
  }
  return outcome;
}

JunctionResult minsum_junction_fpt(const Instance& inst, const JunctionOptions& options) {
  const auto slots = junction_slots(inst);
  check_gamma(slots.size(), options.gamma_limit);

  JunctionResult result;
  std::int64_t best = -1;
  Allocation best_alloc(inst.agent_count());
  const std::uint64_t count = case_count(slots.size());
  for (std::uint64_t index = 0; index < count; ++index) {
    ++result.cases;
    const CaseAssignment ca = case_at(slots, index);
    if (check_feasibility(inst, ca)) continue;
    ++result.feasible_cases;
    Allocation fixed(inst.agent_count());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (ca.cases[s] == JunctionCase::AllocatedSelf) fixed.assign(slots[s].agent, slots[s].item);
    }
    for (const auto& catalog : build_path_catalogs(inst, ca)) {
      ++result.catalogs;
      const auto flow = solve_flow(inst, ca, catalog);
      if (!flow) continue;
      Allocation candidate = fixed;
      candidate.merge(flow->allocation);
      const std::int64_t satisfaction = total_satisfaction(inst, candidate);
      if (satisfaction > best) {
        best = satisfaction;
        best_alloc = std::move(candidate);
      }
    }
  }
  result.allocation = minimize(inst, best_alloc);
  result.value = static_cast<std::int64_t>(inst.total_graph_size()) - best;
  return result;
}

}  // namespace prefalloc::junction
