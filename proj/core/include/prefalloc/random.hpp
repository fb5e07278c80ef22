#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "prefalloc/instance.hpp"

namespace prefalloc::gen {

/// Seeded source of randomness. Draws do not depend on the standard
/// library's distribution implementations, so a seed reproduces the same
/// instance everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

enum class RandomClass { Path, DisjointPaths, Matching, OutStar, StarForest, OutTree, Dag, BoundedGamma };

std::string_view to_string(RandomClass c) noexcept;
/// Accepts the names printed by to_string: path, disjoint-paths, matching,
/// out-star, star-forest, out-tree, dag, bounded-gamma.
std::optional<RandomClass> parse_random_class(std::string_view text) noexcept;
std::span<const RandomClass> all_random_classes() noexcept;

struct RandomOptions {
  std::size_t items = 6;
  std::size_t agents = 2;
  /// Arc probability in percent for dag and bounded-gamma.
  std::uint32_t density = 35;
  /// Junction budget for bounded-gamma.
  std::size_t max_gamma = 4;
};

/// Items are named v1..vN and agents 1..K. Each agent desires a random
/// non-empty subset; items nobody picked are absent from the result.
/// Throws DomainError when items or agents is zero.
Instance random_instance(RandomClass cls, const RandomOptions& options, Rng& rng);

}  // namespace prefalloc::gen
