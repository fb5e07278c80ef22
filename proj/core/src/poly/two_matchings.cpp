#include "prefalloc/poly/two_matchings.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"

namespace prefalloc::poly {

namespace {

// Owner state of a vertex: 0 nobody, 1 first agent, 2 second agent.
using Owner = int;

struct Link {
  Owner previous;
  Profile2 from;
};

// Arc of the union between consecutive component vertices.
struct Step {
  int agent;       // 0 or 1
  bool forward;    // arc runs from the earlier vertex to the later one
};

struct Component {
  std::vector<ItemIndex> vertices;
  std::vector<Step> steps;         // steps[j] joins vertices[j] and vertices[j + 1]
  std::optional<Step> closing;     // cycles: joins vertices.back() and vertices.front()
};

Profile2 operator+(Profile2 a, Profile2 b) { return {a.first + b.first, a.second + b.second}; }

class Dp {
 public:
  explicit Dp(const Instance& inst) : inst_(inst) {}

  bool allowed(ItemIndex v, Owner s) const { return s == 0 || inst_.graph(static_cast<AgentIndex>(s - 1)).contains(v); }

  // +1 for every agent desiring v that does not own it.
  Profile2 isolated(ItemIndex v, Owner s) const {
    Profile2 d{0, 0};
    if (inst_.graph(0).contains(v) && s != 1) ++d.first;
    if (inst_.graph(1).contains(v) && s != 2) ++d.second;
    return d;
  }

  // Correction once the arc between two consecutive vertices is known: the
  // head stops counting when the arc's agent owns the tail.
  static Profile2 correction(Step step, Owner earlier, Owner later) {
    const Owner tail = step.forward ? earlier : later;
    const Owner head = step.forward ? later : earlier;
    const Owner agent = step.agent + 1;
    Profile2 d{0, 0};
    if (tail == agent && head != agent) (step.agent == 0 ? d.first : d.second) -= 1;
    return d;
  }

  using Layer = std::array<std::map<Profile2, Link>, 3>;

  // Layers over the vertices; the first vertex's owner is fixed when
  // `first` is set.
  std::vector<Layer> run(const Component& c, std::optional<Owner> first) const {
    std::vector<Layer> layers(c.vertices.size());
    for (Owner s = 0; s < 3; ++s) {
      if (!allowed(c.vertices[0], s) || (first && *first != s)) continue;
      layers[0][static_cast<std::size_t>(s)].emplace(isolated(c.vertices[0], s), Link{-1, {0, 0}});
    }
    for (std::size_t j = 1; j < c.vertices.size(); ++j) {
      for (Owner s = 0; s < 3; ++s) {
        if (!allowed(c.vertices[j], s)) continue;
        auto& target = layers[j][static_cast<std::size_t>(s)];
        for (Owner r = 0; r < 3; ++r) {
          const Profile2 delta = isolated(c.vertices[j], s) + correction(c.steps[j - 1], r, s);
          for (const auto& [p, link] : layers[j - 1][static_cast<std::size_t>(r)]) {
            target.emplace(p + delta, Link{r, p});
          }
        }
      }
    }
    return layers;
  }

  struct Result {
    std::map<Profile2, std::pair<Owner, Owner>> profiles;  // profile -> (first owner, last owner)
    std::array<std::vector<Layer>, 3> layers;              // per first owner (paths use slot 0)
    std::map<std::pair<Owner, Owner>, std::map<Profile2, Profile2>> closed;  // cycles: final -> pre-closing
  };

  Result component_profiles(const Component& c) const {
    Result result;
    if (!c.closing) {
      result.layers[0] = run(c, std::nullopt);
      for (Owner s = 0; s < 3; ++s) {
        for (const auto& entry : result.layers[0].back()[static_cast<std::size_t>(s)]) {
          result.profiles.emplace(entry.first, std::pair{-1, s});
        }
      }
      return result;
    }
    for (Owner a = 0; a < 3; ++a) {
      if (!allowed(c.vertices[0], a)) continue;
      auto& layers = result.layers[static_cast<std::size_t>(a)];
      layers = run(c, a);
      for (Owner s = 0; s < 3; ++s) {
        const Profile2 delta = correction(*c.closing, s, a);
        for (const auto& entry : layers.back()[static_cast<std::size_t>(s)]) {
          const Profile2 closed = entry.first + delta;
          result.closed[{a, s}].emplace(closed, entry.first);
          result.profiles.emplace(closed, std::pair{a, s});
        }
      }
    }
    return result;
  }

  // Owner of every component vertex for a profile in result.profiles.
  std::vector<Owner> realize(const Component& c, const Result& result, Profile2 target) const {
    const auto [a, s] = result.profiles.at(target);
    const auto& layers = result.layers[static_cast<std::size_t>(c.closing ? a : 0)];
    Profile2 p = c.closing ? result.closed.at({a, s}).at(target) : target;
    std::vector<Owner> owners(c.vertices.size(), 0);
    Owner current = s;
    for (std::size_t j = c.vertices.size(); j-- > 0;) {
      owners[j] = current;
      const Link link = layers[j][static_cast<std::size_t>(current)].at(p);
      current = link.previous;
      p = link.from;
    }
    return owners;
  }

 private:
  const Instance& inst_;
};

// Splits G_1 ∪ G_2 into alternating paths (from degree-one ends) and cycles,
// in ascending order of their smallest start vertex.
std::vector<Component> decompose(const Instance& inst) {
  const std::size_t n = inst.item_count();
  // partner[q][v]: the other endpoint of v's arc in G_q, and whether v is its tail.
  std::array<std::vector<std::optional<std::pair<ItemIndex, bool>>>, 2> partner;
  for (int q = 0; q < 2; ++q) {
    partner[static_cast<std::size_t>(q)].assign(n, std::nullopt);
    for (const Arc& arc : inst.graph(static_cast<AgentIndex>(q)).arcs()) {
      partner[static_cast<std::size_t>(q)][arc.from] = std::pair{arc.to, true};
      partner[static_cast<std::size_t>(q)][arc.to] = std::pair{arc.from, false};
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Component> components;

  const auto trace = [&](ItemIndex start, int first_agent, bool cycle) {
    Component c;
    c.vertices.push_back(start);
    seen[start] = true;
    ItemIndex v = start;
    int q = first_agent;
    while (true) {
      const auto& next = partner[static_cast<std::size_t>(q)][v];
      if (!next) break;
      const Step step{q, next->second};
      if (next->first == start && cycle) {
        c.closing = step;
        break;
      }
      c.steps.push_back(step);
      v = next->first;
      c.vertices.push_back(v);
      seen[v] = true;
      q = 1 - q;
    }
    components.push_back(std::move(c));
  };

  for (ItemIndex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    const bool in0 = partner[0][v].has_value();
    const bool in1 = partner[1][v].has_value();
    if (in0 != in1) trace(v, in0 ? 0 : 1, false);
  }
  for (ItemIndex v = 0; v < n; ++v) {
    if (!seen[v]) trace(v, 0, true);
  }
  return components;
}

}  // namespace

ProfileSet sumset(const ProfileSet& lhs, const ProfileSet& rhs) {
  ProfileSet result;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) result.insert(a + b);
  }
  return result;
}

TwoMatchingsSolution minmax_two_matchings(const Instance& inst) {
  if (inst.agent_count() != 2) throw DomainError("minmax_two_matchings needs exactly two agents");
  for (AgentIndex a = 0; a < 2; ++a) {
    if (!is_directed_matching(inst.graph(a))) {
      throw DomainError("graph of agent '" + inst.agent_id(a) + "' is not a directed matching");
    }
  }
  const Dp dp(inst);
  const auto components = decompose(inst);
  std::vector<Dp::Result> results;
  // stages[c]: profile after components 0..c -> (profile before, component profile)
  std::vector<std::map<Profile2, std::pair<Profile2, Profile2>>> stages;
  std::map<Profile2, std::pair<Profile2, Profile2>> current{{{0, 0}, {{0, 0}, {0, 0}}}};
  for (const auto& c : components) {
    results.push_back(dp.component_profiles(c));
    std::map<Profile2, std::pair<Profile2, Profile2>> next;
    for (const auto& entry : current) {
      for (const auto& part : results.back().profiles) next.emplace(entry.first + part.first, std::pair{entry.first, part.first});
    }
    current = std::move(next);
    stages.push_back(current);
  }

  TwoMatchingsSolution solution;
  for (const auto& entry : current) solution.profiles.insert(entry.first);
  std::optional<Profile2> best;
  for (const Profile2& p : solution.profiles) {
    if (!best || std::max(p.first, p.second) < std::max(best->first, best->second)) best = p;
  }
  solution.value = std::max(best->first, best->second);
  solution.allocation = Allocation(2);
  Profile2 target = *best;
  for (std::size_t c = components.size(); c-- > 0;) {
    const auto [before, part] = stages[c].at(target);
    const auto owners = dp.realize(components[c], results[c], part);
    for (std::size_t j = 0; j < owners.size(); ++j) {
      if (owners[j] != 0) solution.allocation.assign(static_cast<AgentIndex>(owners[j] - 1), components[c].vertices[j]);
    }
    target = before;
  }
  return solution;
}

}  // namespace prefalloc::poly
