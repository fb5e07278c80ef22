#include "prefalloc/reductions/two_path_sat.hpp"

#include "builder.hpp"

namespace prefalloc::reductions {

using detail::name;

namespace {

std::string literal_item(const Literal& lit, std::size_t clause) {
  return name(lit.negated ? "nl" : "l", lit.variable, clause);
}

}  // namespace

TwoPathSatReduction::TwoPathSatReduction(Cnf3Formula source) : source_(std::move(source)) {
  const std::size_t m = source_.clauses.size();
  const std::uint32_t n = source_.variables;
  if (m < 2) throw DomainError("the two-path construction requires at least 2 clauses");
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = source_.clauses[j];
    for (const auto& lit : c) {
      if (lit.variable == 0 || lit.variable > n) throw DomainError("literal refers to an unknown variable");
    }
    if (c[0].variable == c[1].variable || c[0].variable == c[2].variable || c[1].variable == c[2].variable) {
      throw DomainError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
  }
  threshold_ = 2;

  detail::Builder b;
  for (const char* agent : {"b", "b1", "b2"}) b.path(agent, {"z", "z1", "z2"});
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::string agent = name("a", i, j);
      const std::size_t next = j % m + 1;
      b.path(agent, {"z", name("v", i, next), name("l", i, j)});
      b.path(agent, {name("v", i, j), name("nl", i, j)});
    }
  }
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<std::string> path;
    for (const auto& lit : source_.clauses[j - 1]) path.push_back(literal_item(lit, j));
    b.path(name("c", j), path);
  }
  instance_ = b.build();
}

Allocation TwoPathSatReduction::witness_allocation(const TruthAssignment& witness) const {
  if (!satisfies(source_, witness)) throw DomainError("witness does not satisfy the formula");
  const auto& inst = instance_;
  const std::size_t m = source_.clauses.size();
  Allocation alloc(inst.agent_count());
  detail::give(inst, alloc, "b", "z");
  detail::give(inst, alloc, "b1", "z1");
  detail::give(inst, alloc, "b2", "z2");
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::string agent = name("a", i, j);
      if (witness[i - 1]) {
        detail::give(inst, alloc, agent, name("v", i, j % m + 1));
        detail::give(inst, alloc, agent, name("nl", i, j));
      } else {
        detail::give(inst, alloc, agent, name("v", i, j));
        detail::give(inst, alloc, agent, name("l", i, j));
      }
    }
  }
  for (std::size_t j = 1; j <= m; ++j) {
    for (const auto& lit : source_.clauses[j - 1]) {
      if (witness[lit.variable - 1] != lit.negated) {
        detail::give(inst, alloc, name("c", j), literal_item(lit, j));
        break;
      }
    }
  }
  detail::ensure_within(inst, alloc, objective(), threshold_);
  return alloc;
}

TruthAssignment TwoPathSatReduction::witness_extract(const Allocation& alloc) const {
  detail::require_within(instance_, alloc, objective(), threshold_);
  const std::size_t m = source_.clauses.size();
  TruthAssignment assignment(source_.variables);
  for (std::uint32_t i = 1; i <= source_.variables; ++i) {
    for (std::size_t j = 1; j <= m && !assignment[i - 1]; ++j) {
      const std::string agent = name("a", i, j);
      assignment[i - 1] = detail::holds(instance_, alloc, agent, name("v", i, j % m + 1)) &&
                          detail::holds(instance_, alloc, agent, name("nl", i, j));
    }
  }
  if (!satisfies(source_, assignment)) throw DomainError("allocation does not decode to a satisfying assignment");
  return assignment;
}

}  // namespace prefalloc::reductions
