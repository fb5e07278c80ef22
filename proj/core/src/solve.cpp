#include "prefalloc/solve.hpp"

#include <stdexcept>

#include "prefalloc/error.hpp"
#include "prefalloc/exact.hpp"
#include "prefalloc/junction.hpp"
#include "prefalloc/poly/directed_matchings.hpp"
#include "prefalloc/poly/paths.hpp"
#include "prefalloc/poly/star_forests.hpp"
#include "prefalloc/poly/two_matchings.hpp"

namespace prefalloc {

namespace {

constexpr SolverChoice kSelectable[] = {
    SolverChoice::MinSumDirectedMatchings, SolverChoice::MinSumPaths,    SolverChoice::MinSumDisjointPaths,
    SolverChoice::MinSumTwoStarForests,    SolverChoice::MinMaxPaths,    SolverChoice::MinMaxTwoMatchings,
    SolverChoice::JunctionFpt,             SolverChoice::Oracle,
};

std::optional<Objective> fixed_objective(SolverChoice c) {
  switch (c) {
    case SolverChoice::MinSumDirectedMatchings:
    case SolverChoice::MinSumPaths:
    case SolverChoice::MinSumDisjointPaths:
    case SolverChoice::MinSumTwoStarForests:
    case SolverChoice::JunctionFpt:
      return Objective::Sum;
    case SolverChoice::MinMaxPaths:
    case SolverChoice::MinMaxTwoMatchings:
      return Objective::Max;
    case SolverChoice::Oracle:
    case SolverChoice::OracleTooLarge:
      break;
  }
  return std::nullopt;
}

Allocation run(const Instance& inst, Objective objective, SolverChoice c, const SolveOptions& options) {
  switch (c) {
    case SolverChoice::MinSumDirectedMatchings: return poly::minsum_directed_matchings(inst).allocation;
    case SolverChoice::MinSumPaths: return poly::minsum_paths(inst).allocation;
    case SolverChoice::MinSumDisjointPaths: return poly::minsum_disjoint_paths(inst).allocation;
    case SolverChoice::MinSumTwoStarForests: return poly::minsum_two_star_forests(inst).allocation;
    case SolverChoice::MinMaxPaths: return poly::minmax_paths(inst).allocation;
    case SolverChoice::MinMaxTwoMatchings: return poly::minmax_two_matchings(inst).allocation;
    case SolverChoice::JunctionFpt:
      return junction::minsum_junction_fpt(inst, {options.limits.gamma_limit}).allocation;
    case SolverChoice::Oracle: {
      exact::OracleOptions oracle;
      oracle.limit = options.limits.oracle_limit;
      oracle.threads = options.threads;
      return exact::brute_force(inst, objective, oracle).witness;
    }
    case SolverChoice::OracleTooLarge: break;
  }
  throw std::logic_error("unreachable solver choice");
}

}  // namespace

std::optional<SolverChoice> parse_solver(std::string_view text) noexcept {
  for (SolverChoice c : kSelectable) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

SolveOutcome solve(const Instance& inst, Objective objective, const SolveOptions& options) {
  SolveOutcome outcome;
  outcome.used = options.algorithm.value_or(dispatch(inst, objective, options.limits));
  if (outcome.used == SolverChoice::OracleTooLarge) {
    exact::check_size(inst, options.limits.oracle_limit);
    throw SizeLimitError("instance exceeds the oracle limit", enumeration_size(inst), options.limits.oracle_limit);
  }
  const auto required = fixed_objective(outcome.used);
  if (required && *required != objective) {
    throw UnsupportedError(std::string(to_string(outcome.used)) + " does not solve the " +
                           std::string(to_string(objective)) + " objective");
  }
  try {
    outcome.allocation = run(inst, objective, outcome.used, options);
  } catch (const DomainError& e) {
    throw UnsupportedError(std::string(to_string(outcome.used)) + ": " + e.what());
  }
  outcome.value = objective_value(inst, outcome.allocation, objective);
  return outcome;
}

}  // namespace prefalloc
