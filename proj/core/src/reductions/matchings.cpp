#include "prefalloc/reductions/matchings.hpp"

#include "builder.hpp"

namespace prefalloc::reductions {

using detail::name;

MatchingReduction::MatchingReduction(X3CInstance source) : source_(std::move(source)) {
  validate_x3c(source_);
  const std::size_t p = source_.sets.size();
  if (p < 6) throw DomainError("the matchings construction requires at least 6 sets, got " + std::to_string(p));
  const std::size_t l = 4 * p / 3;
  threshold_ = static_cast<std::int64_t>(l);

  detail::Builder b;
  for (std::size_t j = 1; j <= l + 1; ++j) {
    const std::string agent = name("D", j);
    for (std::size_t r = 1; r < l; r += 2) b.arc(agent, name("h", r), name("h", r + 1));
    b.arc(agent, name("h", l + 1), name("a", j));
  }
  for (std::size_t j = 1; j <= p; ++j) b.arc("F", name("s", j), name("h", j));
  for (std::size_t j = 1; j <= p; ++j) {
    const std::string bj = name("B", j);
    b.arc(bj, name("s", j), name("b0", j));
    b.arc(bj, "h:1", name("b1", j));
    for (std::size_t r = 2; r + 1 < l; r += 2) b.arc(bj, name("h", r), name("h", r + 1));

    const std::string cj = name("C", j);
    const auto& set = source_.sets[j - 1];
    b.arc(cj, name("b0", j), "x:" + set[0]);
    b.arc(cj, name("b1", j), "x:" + set[1]);
    b.arc(cj, "h:1", "x:" + set[2]);
    for (std::size_t r = 2; r + 3 < l; r += 2) b.arc(cj, name("h", r), name("h", r + 1));
    b.arc(cj, name("h", l - 2), name("e", j));
  }
  instance_ = b.build();
}

Allocation MatchingReduction::witness_allocation(const ExactCover& witness) const {
  if (!is_exact_cover(source_, witness)) throw DomainError("witness is not an exact cover");
  const auto& inst = instance_;
  const std::size_t l = static_cast<std::size_t>(threshold_);
  Allocation alloc(inst.agent_count());
  for (std::size_t j = 1; j <= l + 1; ++j) {
    detail::give(inst, alloc, name("D", j), name("h", j));
    detail::give(inst, alloc, name("D", j), name("a", j));
  }
  std::vector<bool> chosen(source_.sets.size());
  for (std::size_t j : witness) chosen[j] = true;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    const std::string bj = name("B", j);
    const std::string cj = name("C", j);
    detail::give(inst, alloc, cj, name("e", j));
    if (chosen[j - 1]) {
      detail::give(inst, alloc, "F", name("s", j));
      detail::give(inst, alloc, bj, name("b0", j));
      detail::give(inst, alloc, bj, name("b1", j));
      for (const auto& x : source_.sets[j - 1]) detail::give(inst, alloc, cj, "x:" + x);
    } else {
      detail::give(inst, alloc, bj, name("s", j));
      detail::give(inst, alloc, cj, name("b0", j));
      detail::give(inst, alloc, cj, name("b1", j));
    }
  }
  detail::ensure_within(inst, alloc, objective(), threshold_);
  return alloc;
}

ExactCover MatchingReduction::witness_extract(const Allocation& alloc) const {
  detail::require_within(instance_, alloc, objective(), threshold_);
  ExactCover cover;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    if (detail::holds(instance_, alloc, "F", name("s", j))) cover.push_back(j - 1);
  }
  if (!is_exact_cover(source_, cover)) throw DomainError("allocation does not decode to an exact cover");
  return cover;
}

}  // namespace prefalloc::reductions
