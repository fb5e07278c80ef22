#pragma once

#include <cstdint>

#include "prefalloc/allocation.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/reductions/sources.hpp"

namespace prefalloc::reductions {

/// Min-Max hardness gadget over directed matchings. Needs p >= 6. With
/// l = 4p/3: items h:1..h:l+1, a:<j>, s:<j>, b0:<j>, b1:<j>, e:<j> and
/// x:<element>; agents D:1..D:l+1, F, B:<j> and C:<j>. Threshold l.
class MatchingReduction {
 public:
  /// Throws DomainError on an invalid source.
  explicit MatchingReduction(X3CInstance source);

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
