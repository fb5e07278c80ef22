#include "prefalloc/reductions/two_agent_sat.hpp"

#include "builder.hpp"

namespace prefalloc::reductions {

using detail::name;

namespace {

std::string literal_item(const Literal& lit) { return name(lit.negated ? "nv" : "v", lit.variable); }

void validate_formula(const Cnf3Formula& f) {
  for (const auto& clause : f.clauses) {
    for (const auto& lit : clause) {
      if (lit.variable == 0 || lit.variable > f.variables) throw DomainError("literal refers to an unknown variable");
    }
  }
}

}  // namespace

TwoAgentSatReduction::TwoAgentSatReduction(Cnf3Formula source) : source_(std::move(source)) {
  validate_formula(source_);
  detail::Builder b;
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    b.arc("2", name("v", i), name("u", i));
    b.arc("2", name("nv", i), name("u", i));
  }
  for (std::size_t j = 1; j <= source_.clauses.size(); ++j) {
    b.vertex("1", name("c", j));
    std::set<std::string> seen;
    for (const auto& lit : source_.clauses[j - 1]) {
      if (seen.insert(literal_item(lit)).second) b.arc("1", literal_item(lit), name("c", j));
    }
  }
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    for (const char* prefix : {"v", "nv", "u"}) b.vertex("1", name(prefix, i));
  }
  for (std::size_t j = 1; j <= source_.clauses.size(); ++j) b.vertex("2", name("c", j));
  instance_ = b.build();
}

std::int64_t TwoAgentSatReduction::threshold(Objective objective) const noexcept {
  const auto n = static_cast<std::int64_t>(source_.variables);
  return objective == Objective::Sum ? 2 * n : n;
}

Allocation TwoAgentSatReduction::witness_allocation(const TruthAssignment& witness) const {
  if (!satisfies(source_, witness)) throw DomainError("witness does not satisfy the formula");
  const auto& inst = instance_;
  Allocation alloc(inst.agent_count());
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    const bool value = witness[i - 1];
    detail::give(inst, alloc, "1", name(value ? "v" : "nv", i));
    detail::give(inst, alloc, "2", name(value ? "nv" : "v", i));
    detail::give(inst, alloc, "1", name("u", i));
  }
  for (std::size_t j = 1; j <= source_.clauses.size(); ++j) detail::give(inst, alloc, "2", name("c", j));
  detail::ensure_within(inst, alloc, Objective::Sum, threshold(Objective::Sum));
  detail::ensure_within(inst, alloc, Objective::Max, threshold(Objective::Max));
  return alloc;
}

TruthAssignment TwoAgentSatReduction::witness_extract(const Allocation& alloc, Objective objective) const {
  detail::require_within(instance_, alloc, objective, threshold(objective));
  TruthAssignment assignment(source_.variables);
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    assignment[i - 1] = detail::holds(instance_, alloc, "1", name("v", i));
  }
  if (!satisfies(source_, assignment)) throw DomainError("allocation does not decode to a satisfying assignment");
  return assignment;
}

}  // namespace prefalloc::reductions
