#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "prefalloc/instance.hpp"
#include "prefalloc/poly/solution.hpp"

namespace prefalloc::poly {

/// (d_1, d_2) for the two agents in canonical order.
using Profile2 = std::pair<std::int64_t, std::int64_t>;
using ProfileSet = std::set<Profile2>;

struct TwoMatchingsSolution {
  std::int64_t value = 0;
  Allocation allocation;
  /// Every achievable profile of the whole instance.
  ProfileSet profiles;
};

/// Min-max dissatisfaction for two agents whose graphs are directed
/// matchings. The union of the two graphs splits into alternating paths and
/// cycles; a profile DP runs over each and the results are combined by
/// sumsets. Among optimal profiles the lexicographically smallest is
/// realized. Throws DomainError on any other input.
TwoMatchingsSolution minmax_two_matchings(const Instance& inst);

/// Profile set of a sumset: { a + b : a in lhs, b in rhs }.
ProfileSet sumset(const ProfileSet& lhs, const ProfileSet& rhs);

}  // namespace prefalloc::poly
