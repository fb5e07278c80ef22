#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "prefalloc/allocation.hpp"
#include "prefalloc/classify.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"

namespace prefalloc {

/// Solver names as printed by to_string(SolverChoice), except
/// oracle-too-large which is not selectable.
std::optional<SolverChoice> parse_solver(std::string_view text) noexcept;

struct SolveOptions {
  /// nullopt picks a solver with dispatch().
  std::optional<SolverChoice> algorithm;
  DispatchLimits limits;
  unsigned threads = 1;
};

struct SolveOutcome {
  SolverChoice used = SolverChoice::Oracle;
  std::int64_t value = 0;
  Allocation allocation;
};

/// Runs one solver and re-evaluates its witness. Throws UnsupportedError when
/// the solver does not handle the objective or the instance's graph classes,
/// and SizeLimitError when an exhaustive or enumerative step is refused.
SolveOutcome solve(const Instance& inst, Objective objective, const SolveOptions& options = {});

}  // namespace prefalloc
