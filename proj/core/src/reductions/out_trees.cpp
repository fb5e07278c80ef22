#include "prefalloc/reductions/out_trees.hpp"

#include "builder.hpp"

namespace prefalloc::reductions {

using detail::name;

OutTreeReduction::OutTreeReduction(X3CInstance source) : source_(std::move(source)) {
  validate_x3c(source_);
  const std::size_t p = source_.sets.size();
  const std::size_t d = 2 * p * p + p / 3 + 1;
  const std::size_t top = 3 * d - 2;
  threshold_ = static_cast<std::int64_t>(d);

  std::vector<std::string> xs;
  for (const auto& x : source_.elements) xs.push_back("x:" + x);
  // path_a: X then 1..p, followed by e.
  std::vector<std::string> path_a = xs;
  for (std::size_t j = 1; j <= p; ++j) path_a.push_back(name("s", j));
  path_a.push_back("e");

  detail::Builder b;
  for (std::size_t i = 1; i < top; ++i) {
    const std::string agent = name("A", i);
    for (std::size_t r = 1; r <= top; ++r) {
      if (r != i) b.arc(agent, name("h", i), name("h", r));
    }
    std::vector<std::string> tail{name("h", top)};
    tail.insert(tail.end(), path_a.begin(), path_a.end());
    b.path(agent, tail);
  }
  {
    const std::string agent = name("A", top);
    for (std::size_t r = 1; r < top; ++r) b.arc(agent, name("h", top), name("h", r));
    std::vector<std::string> tail{name("h", top - 1)};
    tail.insert(tail.end(), path_a.begin(), path_a.end());
    b.path(agent, tail);
  }
  {
    const std::size_t chain = 3 * p - 1;
    for (std::size_t j = 1; j <= p; ++j) {
      b.arc("B", name("h", top), name("s", j));
      std::vector<std::string> tail{name("s", j)};
      for (std::size_t r = (j - 1) * chain + 1; r <= j * chain; ++r) tail.push_back(name("h", r));
      b.path("B", tail);
    }
    b.arc("B", name("h", top), "e");
    std::vector<std::string> tail{"e"};
    for (std::size_t r = p * chain + 1; r < top; ++r) tail.push_back(name("h", r));
    tail.insert(tail.end(), xs.begin(), xs.end());
    b.path("B", tail);
  }
  for (std::size_t j = 1; j <= p; ++j) {
    const std::string agent = name("C", j);
    const auto& set = source_.sets[j - 1];
    for (const auto& x : set) b.arc(agent, name("s", j), "x:" + x);
    const std::size_t bounds[3][2] = {{1, d - 1}, {d, 2 * d - 2}, {2 * d - 1, top}};
    for (std::size_t t = 0; t < 3; ++t) {
      std::vector<std::string> tail{"x:" + set[t]};
      for (std::size_t r = bounds[t][0]; r <= bounds[t][1]; ++r) tail.push_back(name("h", r));
      if (t == 2) {
        for (const auto& x : source_.elements) {
          if (x != set[0] && x != set[1] && x != set[2]) tail.push_back("x:" + x);
        }
        for (std::size_t s = 1; s <= p; ++s) {
          if (s != j) tail.push_back(name("s", s));
        }
        tail.push_back("e");
      }
      b.path(agent, tail);
    }
  }
  instance_ = b.build();
}

Allocation OutTreeReduction::witness_allocation(const ExactCover& witness) const {
  if (!is_exact_cover(source_, witness)) throw DomainError("witness is not an exact cover");
  const auto& inst = instance_;
  const std::size_t top = 3 * static_cast<std::size_t>(threshold_) - 2;
  Allocation alloc(inst.agent_count());
  for (std::size_t i = 1; i <= top; ++i) detail::give(inst, alloc, name("A", i), name("h", i));
  detail::give(inst, alloc, "B", "e");
  std::vector<bool> chosen(source_.sets.size());
  for (std::size_t j : witness) chosen[j] = true;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    if (chosen[j - 1]) {
      detail::give(inst, alloc, "B", name("s", j));
      for (const auto& x : source_.sets[j - 1]) detail::give(inst, alloc, name("C", j), "x:" + x);
    } else {
      detail::give(inst, alloc, name("C", j), name("s", j));
    }
  }
  detail::ensure_within(inst, alloc, objective(), threshold_);
  return alloc;
}

ExactCover OutTreeReduction::witness_extract(const Allocation& alloc) const {
  detail::require_within(instance_, alloc, objective(), threshold_);
  ExactCover cover;
  for (std::size_t j = 1; j <= source_.sets.size(); ++j) {
    if (!detail::holds(instance_, alloc, name("C", j), name("s", j))) cover.push_back(j - 1);
  }
  if (!is_exact_cover(source_, cover)) throw DomainError("allocation does not decode to an exact cover");
  return cover;
}

}  // namespace prefalloc::reductions
