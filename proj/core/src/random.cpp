#include "prefalloc/random.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "prefalloc/error.hpp"

namespace prefalloc::gen {

namespace {

constexpr std::array kClasses{RandomClass::Path,       RandomClass::DisjointPaths, RandomClass::Matching,
                              RandomClass::OutStar,    RandomClass::StarForest,    RandomClass::OutTree,
                              RandomClass::Dag,        RandomClass::BoundedGamma};

using Edge = std::pair<std::size_t, std::size_t>;

// Random subset of 0..n-1 in random order. At least `minimum` elements.
std::vector<std::size_t> pick(std::size_t n, std::size_t minimum, Rng& rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  rng.shuffle(all);
  all.resize(rng.between(std::min(minimum, n), n));
  return all;
}

std::vector<Edge> chain(const std::vector<std::size_t>& order, std::size_t from, std::size_t to) {
  std::vector<Edge> arcs;
  for (std::size_t i = from; i + 1 < to; ++i) arcs.emplace_back(order[i], order[i + 1]);
  return arcs;
}

struct Shape {
  std::vector<std::size_t> vertices;
  std::vector<Edge> arcs;
};

Shape shape(RandomClass cls, const RandomOptions& options, Rng& rng, std::vector<std::size_t>& in,
            std::vector<std::size_t>& out, std::size_t& gamma) {
  const std::size_t n = options.items;
  Shape s;
  switch (cls) {
    case RandomClass::Path:
      s.vertices = pick(n, 1, rng);
      s.arcs = chain(s.vertices, 0, s.vertices.size());
      break;
    case RandomClass::DisjointPaths: {
      s.vertices = pick(n, 1, rng);
      std::size_t start = 0;
      for (std::size_t i = 1; i <= s.vertices.size(); ++i) {
        if (i == s.vertices.size() || rng.chance(1, 3)) {
          auto part = chain(s.vertices, start, i);
          s.arcs.insert(s.arcs.end(), part.begin(), part.end());
          start = i;
        }
      }
      break;
    }
    case RandomClass::Matching: {
      if (n < 2) throw DomainError("a matching needs at least 2 items");
      s.vertices = pick(n, 2, rng);
      if (s.vertices.size() % 2 != 0) s.vertices.pop_back();
      for (std::size_t i = 0; i < s.vertices.size(); i += 2) s.arcs.emplace_back(s.vertices[i], s.vertices[i + 1]);
      break;
    }
    case RandomClass::OutStar:
      s.vertices = pick(n, 1, rng);
      for (std::size_t i = 1; i < s.vertices.size(); ++i) s.arcs.emplace_back(s.vertices[0], s.vertices[i]);
      break;
    case RandomClass::StarForest: {
      s.vertices = pick(n, 1, rng);
      std::size_t root = 0;
      for (std::size_t i = 1; i < s.vertices.size(); ++i) {
        if (rng.chance(1, 3)) {
          root = i;
        } else {
          s.arcs.emplace_back(s.vertices[root], s.vertices[i]);
        }
      }
      break;
    }
    case RandomClass::OutTree:
      s.vertices = pick(n, 1, rng);
      for (std::size_t i = 1; i < s.vertices.size(); ++i) s.arcs.emplace_back(s.vertices[rng.below(i)], s.vertices[i]);
      break;
    case RandomClass::Dag:
      s.vertices = pick(n, 1, rng);
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
          if (rng.chance(options.density, 100)) s.arcs.emplace_back(s.vertices[i], s.vertices[j]);
        }
      }
      break;
    case RandomClass::BoundedGamma: {
      s.vertices = pick(n, 1, rng);
      std::fill(in.begin(), in.end(), 0);
      std::fill(out.begin(), out.end(), 0);
      std::vector<Edge> candidates;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j) candidates.emplace_back(s.vertices[i], s.vertices[j]);
      }
      rng.shuffle(candidates);
      const auto junction = [&](std::size_t v) { return in[v] > 1 || out[v] > 1; };
      for (const auto& [u, v] : candidates) {
        if (!rng.chance(options.density, 100)) continue;
        std::size_t added = 0;
        if (!junction(u) && out[u] + 1 > 1) ++added;
        if (!junction(v) && in[v] + 1 > 1) ++added;
        if (gamma + added > options.max_gamma) continue;
        ++out[u];
        ++in[v];
        gamma += added;
        s.arcs.emplace_back(u, v);
      }
      break;
    }
  }
  return s;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("random bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::string_view to_string(RandomClass c) noexcept {
  switch (c) {
    case RandomClass::Path: return "path";
    case RandomClass::DisjointPaths: return "disjoint-paths";
    case RandomClass::Matching: return "matching";
    case RandomClass::OutStar: return "out-star";
    case RandomClass::StarForest: return "star-forest";
    case RandomClass::OutTree: return "out-tree";
    case RandomClass::Dag: return "dag";
    case RandomClass::BoundedGamma: return "bounded-gamma";
  }
  return "?";
}

std::optional<RandomClass> parse_random_class(std::string_view text) noexcept {
  for (RandomClass c : kClasses) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::span<const RandomClass> all_random_classes() noexcept { return kClasses; }

Instance random_instance(RandomClass cls, const RandomOptions& options, Rng& rng) {
  if (options.items == 0 || options.agents == 0) throw DomainError("random instances need at least one item and one agent");
  InstanceSpec spec;
  const auto item = [](std::size_t v) { return "v" + std::to_string(v + 1); };
  for (std::size_t v = 0; v < options.items; ++v) spec.items.push_back(item(v));
  std::vector<std::size_t> in(options.items);
  std::vector<std::size_t> out(options.items);
  std::size_t gamma = 0;
  for (std::size_t a = 0; a < options.agents; ++a) {
    Shape s = shape(cls, options, rng, in, out, gamma);
    AgentSpec agent;
    agent.id = std::to_string(a + 1);
    std::sort(s.vertices.begin(), s.vertices.end());
    for (std::size_t v : s.vertices) agent.items.push_back(item(v));
    std::sort(s.arcs.begin(), s.arcs.end());
    for (const auto& [u, v] : s.arcs) agent.arcs.emplace_back(item(u), item(v));
    spec.agents.push_back(std::move(agent));
  }
  return make_instance(spec);
}

}  // namespace prefalloc::gen
