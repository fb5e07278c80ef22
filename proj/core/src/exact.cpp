#include "prefalloc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "prefalloc/error.hpp"

namespace prefalloc::exact {

void check_size(const Instance& inst, std::uint64_t limit) {
  if (inst.item_count() > 64) {
    throw SizeLimitError("exhaustive search supports at most 64 items, instance has " +
                             std::to_string(inst.item_count()),
                         enumeration_size(inst), limit);
  }
  const std::uint64_t size = enumeration_size(inst);
  if (size > limit) {
    throw SizeLimitError("exhaustive search over " + std::to_string(size) + " assignment vectors exceeds the limit of " +
                             std::to_string(limit),
                         size, limit);
  }
}

namespace {

// Depth-first walk over assignment vectors. choice[v] = 0 means nobody,
// c > 0 means desired_by(v)[c - 1].
class Walker {
 public:
  Walker(const Instance& inst, bool minimal_only)
      : inst_(inst), minimal_only_(minimal_only), n_(inst.item_count()), k_(inst.agent_count()),
        closure_(k_, std::vector<std::uint64_t>(n_, 0)), ancestors_(k_, std::vector<std::uint64_t>(n_, 0)),
        size_(k_), held_(k_, 0), dominated_(k_, 0), choice_(n_, 0) {
    for (AgentIndex a = 0; a < k_; ++a) {
      const auto& g = inst.graph(a);
      size_[a] = g.size();
      for (ItemIndex v : g.items()) {
        closure_[a][v] = bit(v);
        for (ItemIndex u : g.successors(v)) closure_[a][v] |= bit(u);
        for (ItemIndex u : g.predecessors(v)) ancestors_[a][v] |= bit(u);
      }
    }
  }

  std::size_t choices(ItemIndex v) const { return 1 + inst_.desired_by(v).size(); }

  // Applies a fixed prefix of choices. Returns false when the prefix is
  // excluded by minimal_only.
  bool apply_prefix(const std::vector<std::uint32_t>& prefix) {
    for (ItemIndex v = 0; v < prefix.size(); ++v) {
      if (!place(v, prefix[v])) return false;
    }
    return true;
  }

  // Calls leaf(choice, profile) for every completion from item `from`.
  // Stops as soon as leaf returns false; returns false in that case.
  template <typename Leaf>
  bool walk(ItemIndex from, Leaf&& leaf) {
    if (from == n_) {
      for (AgentIndex a = 0; a < k_; ++a) profile_[a] = size_[a] - std::popcount(dominated_[a]);
      return leaf(choice_, profile_);
    }
    const auto saved = snapshot(from);
    for (std::uint32_t c = 0; c < choices(from); ++c) {
      if (place(from, c)) {
        if (!walk(from + 1, leaf)) return false;
      }
      restore(from, saved);
    }
    return true;
  }

  void reset_profile() { profile_.assign(k_, 0); }

 private:
  static std::uint64_t bit(ItemIndex v) { return std::uint64_t{1} << v; }

  struct Saved {
    AgentIndex agent;
    std::uint64_t held;
    std::uint64_t dominated;
  };

  std::vector<Saved> snapshot(ItemIndex v) const {
    std::vector<Saved> saved;
    for (AgentIndex a : inst_.desired_by(v)) saved.push_back({a, held_[a], dominated_[a]});
    return saved;
  }

  void restore(ItemIndex v, const std::vector<Saved>& saved) {
    for (const auto& s : saved) {
      held_[s.agent] = s.held;
      dominated_[s.agent] = s.dominated;
    }
    choice_[v] = 0;
  }

  bool place(ItemIndex v, std::uint32_t c) {
    choice_[v] = c;
    if (c == 0) return true;
    const AgentIndex a = inst_.desired_by(v)[c - 1];
    if (minimal_only_ && ((held_[a] & (closure_[a][v] & ~bit(v))) != 0 || (held_[a] & ancestors_[a][v]) != 0)) {
      return false;
    }
    held_[a] |= bit(v);
    dominated_[a] |= closure_[a][v];
    return true;
  }

  const Instance& inst_;
  bool minimal_only_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::uint64_t>> closure_;
  std::vector<std::vector<std::uint64_t>> ancestors_;
  std::vector<std::size_t> size_;
  std::vector<std::uint64_t> held_;
  std::vector<std::uint64_t> dominated_;
  std::vector<std::uint32_t> choice_;
  std::vector<std::size_t> profile_;
};

Allocation to_allocation(const Instance& inst, const std::vector<std::uint32_t>& choice) {
  Allocation alloc(inst.agent_count());
  for (ItemIndex v = 0; v < choice.size(); ++v) {
    if (choice[v] != 0) alloc.assign(inst.desired_by(v)[choice[v] - 1], v);
  }
  return alloc;
}

std::int64_t aggregate(const std::vector<std::size_t>& profile, Objective objective) {
  std::size_t result = 0;
  for (std::size_t d : profile) result = objective == Objective::Sum ? result + d : std::max(result, d);
  return static_cast<std::int64_t>(result);
}

struct Best {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint32_t> choice;
  std::uint64_t explored = 0;
};

Best search(const Instance& inst, Objective objective, bool minimal_only, const std::vector<std::uint32_t>& prefix) {
  Best best;
  Walker walker(inst, minimal_only);
  walker.reset_profile();
  if (!walker.apply_prefix(prefix)) return best;
  walker.walk(static_cast<ItemIndex>(prefix.size()),
              [&](const std::vector<std::uint32_t>& choice, const std::vector<std::size_t>& profile) {
                ++best.explored;
                const std::int64_t value = aggregate(profile, objective);
                if (value < best.value) {
                  best.value = value;
                  best.choice = choice;
                }
                return true;
              });
  return best;
}

// Prefixes over the first items, in lexicographic order, enough to keep
// `threads` workers busy.
std::vector<std::vector<std::uint32_t>> prefixes(const Instance& inst, unsigned threads) {
  std::vector<std::vector<std::uint32_t>> result{{}};
  ItemIndex depth = 0;
  while (result.size() < 4 * static_cast<std::size_t>(threads) && depth < inst.item_count()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& p : result) {
      for (std::uint32_t c = 0; c < 1 + inst.desired_by(depth).size(); ++c) {
        next.push_back(p);
        next.back().push_back(c);
      }
    }
    result = std::move(next);
    ++depth;
  }
  return result;
}

}  // namespace

OracleResult brute_force(const Instance& inst, Objective objective, const OracleOptions& options) {
  check_size(inst, options.limit);
  Best best;
  if (options.threads <= 1) {
    best = search(inst, objective, options.minimal_only, {});
  } else {
    const auto tasks = prefixes(inst, options.threads);
    std::vector<Best> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          results[i] = search(inst, objective, options.minimal_only, tasks[i]);
        }
      });
    }
    for (auto& worker : pool) worker.join();
    // Tasks are in lexicographic order, so the first strict minimum matches
    // the sequential witness.
    for (const auto& r : results) {
      best.explored += r.explored;
      if (r.value < best.value) {
        best.value = r.value;
        best.choice = r.choice;
      }
    }
  }
  OracleResult result;
  result.value = best.value;
  result.witness = to_allocation(inst, best.choice);
  result.explored = best.explored;
  return result;
}

std::set<DissatisfactionProfile> all_profiles(const Instance& inst, const OracleOptions& options) {
  check_size(inst, options.limit);
  std::unordered_set<std::string> seen;
  Walker walker(inst, options.minimal_only);
  walker.reset_profile();
  walker.walk(0, [&](const std::vector<std::uint32_t>&, const std::vector<std::size_t>& profile) {
    seen.emplace(profile.begin(), profile.end());
    return true;
  });
  std::set<DissatisfactionProfile> result;
  for (const auto& key : seen) {
    DissatisfactionProfile p;
    for (char c : key) p.values.push_back(static_cast<unsigned char>(c));
    result.insert(std::move(p));
  }
  return result;
}

std::optional<Allocation> decide(const Instance& inst, Objective objective, std::int64_t threshold,
                                 const OracleOptions& options) {
  check_size(inst, options.limit);
  std::optional<Allocation> found;
  Walker walker(inst, options.minimal_only);
  walker.reset_profile();
  walker.walk(0, [&](const std::vector<std::uint32_t>& choice, const std::vector<std::size_t>& profile) {
    if (aggregate(profile, objective) > threshold) return true;
    found = to_allocation(inst, choice);
    return false;
  });
  return found;
}

}  // namespace prefalloc::exact
