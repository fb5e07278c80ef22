#include "prefalloc/kernels/assignment.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <utility>

#include "prefalloc/error.hpp"

namespace prefalloc::kernels {

namespace {

std::pair<std::size_t, std::size_t> check_shape(const CostMatrix& cost) {
  if (cost.empty() || cost.front().empty()) throw DomainError("assignment needs a non-empty cost matrix");
  const std::size_t cols = cost.front().size();
  for (const auto& row : cost) {
    if (row.size() != cols) throw DomainError("assignment cost matrix is ragged");
  }
  return {cost.size(), cols};
}

CostMatrix transpose(const CostMatrix& cost) {
  CostMatrix result(cost.front().size(), std::vector<std::int64_t>(cost.size()));
  for (std::size_t r = 0; r < cost.size(); ++r) {
    for (std::size_t c = 0; c < cost[r].size(); ++c) result[c][r] = cost[r][c];
  }
  return result;
}

// Rows <= columns. Potentials-based shortest augmenting path variant.
std::vector<std::int64_t> hungarian(const CostMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t m = a.front().size();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::int64_t> row_to_col(n, kUnassigned);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = static_cast<std::int64_t>(j - 1);
  }
  return row_to_col;
}

std::vector<std::int64_t> invert(const std::vector<std::int64_t>& row_to_col, std::size_t rows) {
  std::vector<std::int64_t> result(rows, kUnassigned);
  for (std::size_t c = 0; c < row_to_col.size(); ++c) {
    if (row_to_col[c] != kUnassigned) result[static_cast<std::size_t>(row_to_col[c])] = static_cast<std::int64_t>(c);
  }
  return result;
}

}  // namespace

Assignment lsap(const CostMatrix& cost) {
  const auto [rows, cols] = check_shape(cost);
  Assignment result;
  if (rows <= cols) {
    result.row_to_col = hungarian(cost);
  } else {
    result.row_to_col = invert(hungarian(transpose(cost)), rows);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (result.row_to_col[r] != kUnassigned) result.value += cost[r][static_cast<std::size_t>(result.row_to_col[r])];
  }
  return result;
}

std::vector<std::int64_t> max_cardinality_matching(std::size_t left, std::size_t right,
                                                   const std::vector<std::vector<std::size_t>>& adjacency) {
  std::vector<std::int64_t> match_left(left, kUnassigned);
  std::vector<std::int64_t> match_right(right, kUnassigned);
  std::vector<std::size_t> seen(right, 0);
  std::size_t stamp = 0;
  std::function<bool(std::size_t)> augment = [&](std::size_t l) {
    for (std::size_t r : adjacency[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (match_right[r] == kUnassigned || augment(static_cast<std::size_t>(match_right[r]))) {
        match_left[l] = static_cast<std::int64_t>(r);
        match_right[r] = static_cast<std::int64_t>(l);
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < left; ++l) {
    ++stamp;
    augment(l);
  }
  return match_left;
}

Assignment lbap(const CostMatrix& cost) {
  const auto [rows, cols] = check_shape(cost);
  const std::size_t target = std::min(rows, cols);
  std::set<std::int64_t> distinct;
  for (const auto& row : cost) distinct.insert(row.begin(), row.end());
  const std::vector<std::int64_t> levels(distinct.begin(), distinct.end());

  const auto try_level = [&](std::int64_t bound) {
    std::vector<std::vector<std::size_t>> adjacency(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (cost[r][c] <= bound) adjacency[r].push_back(c);
      }
    }
    return max_cardinality_matching(rows, cols, adjacency);
  };
  const auto size_of = [](const std::vector<std::int64_t>& m) {
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](std::int64_t c) { return c != kUnassigned; }));
  };

  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (size_of(try_level(levels[mid])) == target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Assignment result;
  result.row_to_col = try_level(levels[lo]);
  result.value = levels[lo];
  return result;
}

Matching max_weight_matching(const WeightedBipartiteGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    if (e.left >= g.left || e.right >= g.right) throw DomainError("matching edge endpoint out of range");
    if (e.weight < 0) throw DomainError("matching edge weight is negative");
    if (!seen.emplace(e.left, e.right).second) throw DomainError("duplicate matching edge");
  }
  Matching result;
  if (g.left == 0 || g.right == 0 || g.edges.empty()) return result;

  // Successive shortest paths on the residual graph with cost -weight,
  // stopped at the first augmenting path that does not gain weight.
  // Vertex ids: source 0, left 1..L, right L+1..L+R, sink L+R+1.
  const std::size_t L = g.left;
  const std::size_t R = g.right;
  const std::size_t source = 0;
  const std::size_t sink = L + R + 1;
  const auto left_id = [&](std::size_t l) { return 1 + l; };
  const auto right_id = [&](std::size_t r) { return 1 + L + r; };
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::size_t>> out(L);
  for (std::size_t k = 0; k < g.edges.size(); ++k) out[g.edges[k].left].push_back(k);
  std::vector<std::size_t> match_left(L, kNone);   // edge index
  std::vector<std::size_t> match_right(R, kNone);  // edge index

  std::vector<std::int64_t> pi(sink + 1, 0);
  for (std::size_t r = 0; r < R; ++r) pi[right_id(r)] = 0;
  for (const auto& e : g.edges) pi[right_id(e.right)] = std::min(pi[right_id(e.right)], -e.weight);
  for (std::size_t r = 0; r < R; ++r) pi[sink] = std::min(pi[sink], pi[right_id(r)]);

  std::vector<std::int64_t> dist(sink + 1);
  std::vector<std::size_t> via(sink + 1);  // edge into a right vertex, or right vertex into the sink
  using Entry = std::pair<std::int64_t, std::size_t>;
  for (;;) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), kNone);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    const auto relax = [&](std::size_t v, std::int64_t d, std::size_t how) {
      if (d < dist[v]) {
        dist[v] = d;
        via[v] = how;
        heap.emplace(d, v);
      }
    };
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u] || u == sink) continue;
      if (u == source) {
        for (std::size_t l = 0; l < L; ++l) {
          if (match_left[l] == kNone) relax(left_id(l), d + pi[source] - pi[left_id(l)], kNone);
        }
      } else if (u <= L) {
        const std::size_t l = u - 1;
        for (std::size_t k : out[l]) {
          if (k == match_left[l]) continue;
          const auto& e = g.edges[k];
          relax(right_id(e.right), d - e.weight + pi[u] - pi[right_id(e.right)], k);
        }
      } else {
        const std::size_t r = u - 1 - L;
        if (match_right[r] == kNone) {
          relax(sink, d + pi[u] - pi[sink], r);
        } else {
          const auto& e = g.edges[match_right[r]];
          relax(left_id(e.left), d + e.weight + pi[u] - pi[left_id(e.left)], match_right[r]);
        }
      }
    }
    if (dist[sink] >= kInf || dist[sink] + pi[sink] - pi[source] >= 0) break;

    std::size_t r = via[sink];
    while (r != kNone) {
      const std::size_t k = via[right_id(r)];
      const std::size_t l = g.edges[k].left;
      const std::size_t previous = match_left[l];
      match_left[l] = k;
      match_right[r] = k;
      r = previous == kNone ? kNone : g.edges[previous].right;
    }
    const std::int64_t cap = dist[sink];
    for (std::size_t v = 0; v <= sink; ++v) pi[v] += std::min(dist[v], cap);
  }

  for (std::size_t l = 0; l < L; ++l) {
    const std::size_t k = match_left[l];
    if (k == kNone || g.edges[k].weight == 0) continue;
    result.edges.push_back(k);
    result.weight += g.edges[k].weight;
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

}  // namespace prefalloc::kernels
