#pragma once

#include <cstdint>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/reductions/sources.hpp"

namespace prefalloc::reductions {

/// Min-Max hardness gadget where every preference graph is an out-star.
/// With l = 2p/3 + 1: items x:<element>, s:<j>, h:1..h:l+1; agents D:1..D:l+1
/// (star h:1 -> rest), A (h:1 -> every s) and C:<j> (s:j -> its elements and
/// h:1..h:l-1). Threshold l.
class OutStarReduction {
 public:
  /// Throws DomainError on an invalid source.
  explicit OutStarReduction(X3CInstance source);

  const X3CInstance& source() const noexcept { return source_; }
  const Instance& instance() const noexcept { return instance_; }
  Objective objective() const noexcept { return Objective::Max; }
  std::int64_t threshold() const noexcept { return threshold_; }

  /// Forward direction. Throws DomainError when `witness` is not valid for
  /// the source.
  Allocation witness_allocation(const ExactCover& witness) const;
  /// Reverse direction. Throws DomainError when `alloc` is invalid, misses
  /// the threshold, or does not decode to a valid witness.
  ExactCover witness_extract(const Allocation& alloc) const;

 private:
  X3CInstance source_;
  Instance instance_;
  std::int64_t threshold_ = 0;
};

}  // namespace prefalloc::reductions
