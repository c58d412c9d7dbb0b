#include "sgpc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

namespace sgpc {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(int i) { return Mask{1} << i; }

/// Bitmask tables for unit sources centered on the points of a block.
struct Block {
  int width = 0;
  int height = 0;
  int n = 0;
  Mask full = 0;
  std::vector<Mask> cover;     // in-block points covered by a source at i
  std::vector<Mask> adjacent;  // centers communicable with a source at i
  std::vector<int> last_cover; // largest center index covering point i

  Block(int w, int h) : width(w), height(h), n(w * h) {
    full = n == 64 ? ~Mask{0} : bit(n) - 1;
    cover.assign(n, 0);
    adjacent.assign(n, 0);
    last_cover.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      const int x = i % w, y = i / w;
      for (int j = 0; j < n; ++j) {
        const int dx = std::abs(j % w - x), dy = std::abs(j / w - y);
        if (dx + dy <= 1) cover[i] |= bit(j);
        if (std::max(dx, dy) == 1) adjacent[i] |= bit(j);
      }
    }
    for (int c = 0; c < n; ++c)
      for (Mask m = cover[c]; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        last_cover[u] = std::max(last_cover[u], c);
      }
  }

  GridPoint point(int i) const { return {i % width + 1, i / width + 1}; }

  Mask component_of(Mask set, int seed) const {
    Mask comp = bit(seed), frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= adjacent[std::countr_zero(f)];
      grow &= set & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  bool connected(Mask set) const {
    if (set == 0) return true;
    return component_of(set, std::countr_zero(set)) == set;
  }

  int chebyshev(int a, int b) const {
    return std::max(std::abs(a % width - b % width), std::abs(a / width - b / width));
  }
};

struct SharedState {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> timed_out{false};
};

/// Depth-first search over combinations of exactly `target` centers.
class Searcher {
 public:
  Searcher(const Block& block, int target, bool pruning, bool collect_all, SharedState& shared)
      : b_(block), target_(target), pruning_(pruning), collect_all_(collect_all), shared_(shared) {}

  /// Explores every combination whose smallest center is `first`.
  void run_from(int first) {
    chosen_.assign(1, first);
    dfs(first + 1, b_.cover[first], bit(first));
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }
  std::vector<std::vector<int>>& solutions() { return solutions_; }

 private:
  // Returns true when the search should stop (first solution found in
  // single-solution mode).
  bool dfs(int start, Mask covered, Mask set) {
    if ((++nodes_ & 0x3FF) == 0 && time_up()) {
      aborted_ = true;
      return true;
    }
    const int depth = static_cast<int>(chosen_.size());
    const int remaining = target_ - depth;
    if (remaining == 0) {
      ++leaves_;
      if (covered == b_.full && b_.connected(set)) {
        solutions_.push_back(chosen_);
        return !collect_all_;
      }
      return false;
    }
    if (b_.n - start < remaining) return false;

    int limit = b_.n - remaining;
    if (pruning_) {
      const Mask open = b_.full & ~covered;
      if (open) {
        const int u = std::countr_zero(open);
        if (b_.last_cover[u] < start) return false;
        limit = std::min(limit, b_.last_cover[u]);
        // In a connected cover each later source can be ordered after a
        // neighbour it shares two points with, so it adds at most three new
        // points; the very first source adds five.
        if (std::popcount(open) > 3 * remaining + (depth == 0 ? 2 : 0)) return false;
      }
      if (!components_can_merge(start, set, remaining)) return false;
    }

    for (int i = start; i <= limit; ++i) {
      chosen_.push_back(i);
      const bool stop = dfs(i + 1, covered | b_.cover[i], set | bit(i));
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  bool components_can_merge(int start, Mask set, int remaining) const {
    const Mask future = start >= 64 ? 0 : (~Mask{0} << start) & b_.full;
    Mask comps[64];
    int count = 0;
    for (Mask rest = set; rest;) {
      const Mask c = b_.component_of(set, std::countr_zero(rest));
      comps[count++] = c;
      rest &= ~c;
    }
    if (count == 1 && remaining == 0) return true;
    for (int a = 0; a < count; ++a) {
      Mask reach = 0;
      for (Mask m = comps[a]; m; m &= m - 1) reach |= b_.adjacent[std::countr_zero(m)];
      if ((reach & future & ~set) == 0) return false;
    }
    // Joining two components at Chebyshev distance d needs d - 1 connectors.
    for (int a = 0; a < count; ++a)
      for (int c = a + 1; c < count; ++c) {
        int best = std::numeric_limits<int>::max();
        for (Mask ma = comps[a]; ma; ma &= ma - 1)
          for (Mask mc = comps[c]; mc; mc &= mc - 1)
            best = std::min(best, b_.chebyshev(std::countr_zero(ma), std::countr_zero(mc)));
        if (best - 1 > remaining) return false;
      }
    return true;
  }

  bool time_up() {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (shared_.deadline && Clock::now() >= *shared_.deadline) {
      shared_.timed_out.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  const Block& b_;
  int target_;
  bool pruning_;
  bool collect_all_;
  SharedState& shared_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> solutions_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  bool aborted_ = false;
};

struct LevelOutcome {
  std::vector<std::vector<int>> solutions;  // canonical order
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

LevelOutcome search_level(const Block& block, int target, bool pruning, bool collect_all,
                          Execution exec, SharedState& shared) {
  LevelOutcome out;
  if (target < 1 || target > block.n) return out;
  int last_first = block.n - target;
  if (pruning) last_first = std::min(last_first, block.last_cover[0]);
  if (last_first < 0) return out;

  const int firsts = last_first + 1;
  std::vector<std::vector<std::vector<int>>> per_first(static_cast<std::size_t>(firsts));
  std::vector<std::uint8_t> aborted(static_cast<std::size_t>(firsts), 0);
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(firsts), 0);
  std::vector<std::uint64_t> leaves(static_cast<std::size_t>(firsts), 0);
  std::atomic<int> first_hit{std::numeric_limits<int>::max()};
  const bool par = exec == Execution::parallel;

#pragma omp parallel for schedule(dynamic, 1) if (par)
  for (int f = 0; f < firsts; ++f) {
    if (!collect_all && first_hit.load() < f) continue;
    Searcher s(block, target, pruning, collect_all, shared);
    s.run_from(f);
    const auto idx = static_cast<std::size_t>(f);
    per_first[idx] = std::move(s.solutions());
    aborted[idx] = s.aborted() ? 1 : 0;
    nodes[idx] = s.nodes();
    leaves[idx] = s.leaves();
    if (!collect_all && !per_first[idx].empty()) {
      int seen = first_hit.load();
      while (f < seen && !first_hit.compare_exchange_weak(seen, f)) {
      }
    }
  }

  for (int f = 0; f < firsts; ++f) {
    const auto idx = static_cast<std::size_t>(f);
    out.nodes += nodes[idx];
    out.leaves += leaves[idx];
  }
  for (int f = 0; f < firsts; ++f) {
    const auto idx = static_cast<std::size_t>(f);
    if (aborted[idx]) out.aborted = true;
    for (auto& sol : per_first[idx]) out.solutions.push_back(std::move(sol));
    if (!collect_all && !out.solutions.empty()) break;
  }
  return out;
}

Placement to_placement(const Block& block, const std::vector<int>& indices) {
  std::vector<GridPoint> centers;
  centers.reserve(indices.size());
  for (int i : indices) centers.push_back(block.point(i));
  return unit_placement(centers);
}

void check_block(int width, int height) {
  if (width < 1 || height < 1) throw PreconditionError("block dimensions must be >= 1");
  if (width * height > 64) throw PreconditionError("exact search supports at most 64 block points");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Placement strip_cover(int width, int height) {
  if (width < 1 || height < 1) throw PreconditionError("block dimensions must be >= 1");
  std::vector<int> rows;
  for (int k = 0; 3 * k + 1 <= height; ++k) {
    const int y = std::min(3 * k + 2, height);
    if (rows.empty() || rows.back() != y) rows.push_back(y);
  }
  std::vector<GridPoint> centers;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int x = 1; x <= width; ++x) centers.push_back({x, rows[r]});
    if (r + 1 < rows.size())
      for (int y = rows[r] + 1; y < rows[r + 1]; ++y) centers.push_back({1, y});
  }
  std::sort(centers.begin(), centers.end());
  return unit_placement(centers);
}

SearchResult optimal_connected_cover(const SearchConfig& cfg) {
  check_block(cfg.width, cfg.height);
  if (cfg.budget_cap && *cfg.budget_cap < 1) throw PreconditionError("budget cap must be >= 1");

  const Block block(cfg.width, cfg.height);
  SharedState shared;
  if (cfg.time_limit) shared.deadline = Clock::now() + *cfg.time_limit;

  SearchResult result;
  // m connected unit sources cover at most 3m + 2 points.
  const int first_level = std::max(1, (block.n - 2 + 2) / 3);
  for (int m = first_level;; ++m) {
    if (cfg.budget_cap && m > *cfg.budget_cap) {
      result.infeasible_within_cap = true;
      result.exhausted = true;
      return result;
    }
    LevelOutcome level = search_level(block, m, cfg.pruning, false, cfg.execution, shared);
    result.nodes += level.nodes;
    if (level.aborted) {
      result.exhausted = false;
      result.witness = level.solutions.empty() ? strip_cover(cfg.width, cfg.height)
                                               : to_placement(block, level.solutions.front());
      result.optimal_count = static_cast<int>(result.witness.size());
      return result;
    }
    if (!level.solutions.empty()) {
      result.optimal_count = m;
      result.witness = to_placement(block, level.solutions.front());
      result.exhausted = true;
      return result;
    }
  }
}

std::vector<Placement> enumerate_coverings(int width, int height, int k,
                                           const EnumerationOptions& opts,
                                           EnumerationStats* stats) {
  check_block(width, height);
  if (k < 1) throw PreconditionError("enumerate_coverings requires k >= 1");
  const auto n = static_cast<std::uint64_t>(width * height);
  if (binomial(n, static_cast<std::uint64_t>(k)) > opts.max_subsets)
    throw EnumerationLimitError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds the enumeration budget");

  const Block block(width, height);
  SharedState shared;
  LevelOutcome level = search_level(block, k, opts.pruning, true, opts.execution, shared);
  if (stats) stats->leaves = level.leaves;

  std::vector<Placement> out;
  out.reserve(level.solutions.size());
  for (const auto& sol : level.solutions) out.push_back(to_placement(block, sol));
  return out;
}

}  // namespace sgpc
