#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc::exact {

struct OracleOptions {
  /// Refuse instances whose enumeration_size exceeds this.
  std::uint64_t limit = 10'000'000;
  /// Worker threads for brute_force; 0 or 1 runs inline.
  unsigned threads = 1;
  /// Skip assignment vectors that give an agent two items where one
  /// dominates the other. Optimal values are unaffected.
  bool minimal_only = false;
};

struct OracleResult {
  std::int64_t value = 0;
  Allocation witness;
  /// Complete assignment vectors evaluated.
  std::uint64_t explored = 0;
};

/// Throws SizeLimitError unless the instance has at most 64 items and at
/// most `limit` assignment vectors.
void check_size(const Instance& inst, std::uint64_t limit);

/// Exhaustive optimum over all assignment vectors (each item to nobody or
/// to one agent desiring it). The witness is the lexicographically least
/// optimal vector, with "nobody" ordered before every agent. The result does
/// not depend on `threads`.
OracleResult brute_force(const Instance& inst, Objective objective, const OracleOptions& options = {});

/// Every achievable dissatisfaction profile.
std::set<DissatisfactionProfile> all_profiles(const Instance& inst, const OracleOptions& options = {});

/// First allocation, in the same order as brute_force, whose objective is at
/// most `threshold`; nullopt when none exists.
std::optional<Allocation> decide(const Instance& inst, Objective objective, std::int64_t threshold,
                                 const OracleOptions& options = {});

}  // namespace prefalloc::exact
