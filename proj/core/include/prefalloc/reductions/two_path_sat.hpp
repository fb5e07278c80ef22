#pragma once

#include <cstdint>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/reductions/sources.hpp"

namespace prefalloc::reductions {

/// Min-Max hardness gadget where each graph is at most two paths over at
/// most five items. Items z, z1, z2 and v:<i>:<j>, l:<i>:<j>, nl:<i>:<j>;
/// agents b, b1, b2, a:<i>:<j> and c:<j>. Needs m >= 2 clauses, each over
/// three distinct variables. Threshold 2.
class TwoPathSatReduction {
 public:
  /// Throws DomainError on an invalid source.
  explicit TwoPathSatReduction(Cnf3Formula source);

  const Cnf3Formula& source() const noexcept { return source_; }
  const Instance& instance() const noexcept { return instance_; }
  Objective objective() const noexcept { return Objective::Max; }
  std::int64_t threshold() const noexcept { return threshold_; }

  /// Forward direction. Throws DomainError when `witness` is not valid for
  /// the source.
  Allocation witness_allocation(const TruthAssignment& witness) const;
  /// Reverse direction. Throws DomainError when `alloc` is invalid, misses
  /// the threshold, or does not decode to a valid witness.
  TruthAssignment witness_extract(const Allocation& alloc) const;

 private:
  Cnf3Formula source_;
  Instance instance_;
  std::int64_t threshold_ = 0;
};

}  // namespace prefalloc::reductions
