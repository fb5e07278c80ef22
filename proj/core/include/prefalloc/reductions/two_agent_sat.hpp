#pragma once

#include <cstdint>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/reductions/sources.hpp"

namespace prefalloc::reductions {

/// Two agents "1" and "2" over the same item set: v:<i>, nv:<i>, u:<i> per
/// variable and c:<j> per clause. Agent 1 orders literals above the clauses
/// containing them; agent 2 orders v:<i> and nv:<i> above u:<i>. Thresholds
/// 2n for the sum and n for the max.
class TwoAgentSatReduction {
 public:
  explicit TwoAgentSatReduction(Cnf3Formula source);

  const Cnf3Formula& source() const noexcept { return source_; }
  const Instance& instance() const noexcept { return instance_; }
  std::int64_t threshold(Objective objective) const noexcept;

  /// Profile (n, n). Throws DomainError when `witness` does not satisfy the
  /// formula.
  Allocation witness_allocation(const TruthAssignment& witness) const;
  /// x_i is true iff agent 1 holds v:<i>. Throws DomainError when `alloc`
  /// is invalid, misses the threshold for `objective`, or the decoded
  /// assignment does not satisfy the formula.
  TruthAssignment witness_extract(const Allocation& alloc, Objective objective = Objective::Sum) const;

 private:
  Cnf3Formula source_;
  Instance instance_;
};

}  // namespace prefalloc::reductions
