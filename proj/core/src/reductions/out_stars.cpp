#include "prefalloc/reductions/out_stars.hpp"

#include "builder.hpp"

namespace prefalloc::reductions {

using detail::name;

OutStarReduction::OutStarReduction(X3CInstance source) : source_(std::move(source)) {
  validate_x3c(source_);
  const std::size_t p = source_.sets.size();
  const std::size_t l = 2 * p / 3 + 1;
  threshold_ = static_cast<std::int64_t>(l);

  detail::Builder b;
  for (std::size_t i = 1; i <= l + 1; ++i) {
    for (std::size_t r = 2; r <= l + 1; ++r) b.arc(name("D", i), "h:1", name("h", r));
  }
  for (std::size_t j = 1; j <= p; ++j) b.arc("A", "h:1", name("s", j));
  for (std::size_t j = 1; j <= p; ++j) {
    const std::string agent = name("C", j);
    for (const auto& x : source_.sets[j - 1]) b.arc(agent, name("s", j), "x:" + x);
    for (std::size_t r = 1; r + 1 <= l; ++r) b.arc(agent, name("s", j), name("h", r));
  }
  instance_ = b.build();
}

Allocation OutStarReduction::witness_allocation(const ExactCover& witness) const {
  if (!is_exact_cover(source_, witness)) throw DomainError("witness is not an exact cover");
  const auto& inst = instance_;
  Allocation alloc(inst.agent_count());
  for (std::size_t i = 1; i <= static_cast<std::size_t>(threshold_) + 1; ++i) {
    detail::give(inst, alloc, name("D", i), name("h", i));
  }
  std::vector<bool> chosen(source_.sets.size());
  for (std::size_t j : witness) chosen[j] = true;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    if (chosen[j - 1]) {
      detail::give(inst, alloc, "A", name("s", j));
      for (const auto& x : source_.sets[j - 1]) detail::give(inst, alloc, name("C", j), "x:" + x);
    } else {
      detail::give(inst, alloc, name("C", j), name("s", j));
    }
  }
  detail::ensure_within(inst, alloc, objective(), threshold_);
  return alloc;
}

ExactCover OutStarReduction::witness_extract(const Allocation& alloc) const {
  detail::require_within(instance_, alloc, objective(), threshold_);
  ExactCover cover;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    bool all = true;
    for (const auto& x : source_.sets[j - 1]) all = all && detail::holds(instance_, alloc, name("C", j), "x:" + x);
    if (all) cover.push_back(j - 1);
  }
  if (!is_exact_cover(source_, cover)) throw DomainError("allocation does not decode to an exact cover");
  return cover;
}

}  // namespace prefalloc::reductions
