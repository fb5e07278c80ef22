#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefalloc::reductions {

/// Exact cover by 3-sets where every element lies in exactly three sets.
/// `sets` may repeat.
struct X3CInstance {
  std::vector<std::string> elements;
  std::vector<std::array<std::string, 3>> sets;
};

/// Reads {"X": [...], "C": [[a, b, c], ...]} and validates it.
X3CInstance parse_x3c(std::string_view text);
std::string serialize_x3c(const X3CInstance& x3c);
/// Throws DomainError when elements repeat, a set has repeated or unknown
/// members, or some element is not in exactly three sets.
void validate_x3c(const X3CInstance& x3c);

/// Indices into X3CInstance::sets, ascending.
using ExactCover = std::vector<std::size_t>;

bool is_exact_cover(const X3CInstance& x3c, const ExactCover& cover);

struct Literal {
  /// 1-based.
  std::uint32_t variable = 1;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Cnf3Formula {
  std::uint32_t variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// DIMACS subset: comment lines, one "p cnf n m" header, then m clauses of
/// exactly three literals each terminated by 0. Errors carry "line N".
Cnf3Formula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const Cnf3Formula& formula);

/// Value of x_{i+1} at index i.
using TruthAssignment = std::vector<bool>;

bool satisfies(const Cnf3Formula& formula, const TruthAssignment& assignment);

/// Truth-table search; first satisfying assignment in binary counting order
/// with x_1 as the lowest bit. Throws DomainError above 20 variables.
std::optional<TruthAssignment> brute_force_sat(const Cnf3Formula& formula);

}  // namespace prefalloc::reductions
