#pragma once

// Exhaustive search for minimum connected covers of small rectangular blocks
// by unit sources centered on the block's own lattice points.
//
// Placements are explored as combinations in row-major order, so the first
// feasible combination found at a given size is the lexicographically least
// one. The parallel path splits the search on the first chosen source and
// keeps the smallest successful split, which makes the witness independent of
// scheduling.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sgpc/grid.hpp"

namespace sgpc {

enum class Execution { serial, parallel };

struct SearchConfig {
  int width = 1;
  int height = 1;
  /// Largest source count to try. Unset means search until a cover is found.
  std::optional<int> budget_cap;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Disabling pruning turns the search into plain enumeration (debug aid).
  bool pruning = true;
  Execution execution = Execution::parallel;
};

struct SearchResult {
  /// Size of the witness; proven optimal when `exhausted` is true.
  int optimal_count = 0;
  Placement witness;
  /// True iff the search completed and its answer is proven.
  bool exhausted = false;
  /// Set when the search proved there is no cover using <= budget_cap sources.
  /// optimal_count is then 0 and the witness empty.
  bool infeasible_within_cap = false;
  std::uint64_t nodes = 0;
};

/// Minimum connected cover of a width x height block (width * height <= 64).
SearchResult optimal_connected_cover(const SearchConfig& cfg);

/// A valid, generally non-optimal connected cover of the block: source rows at
/// y = 2, 5, 8, ... joined along column 1. Used as the best-known answer when a
/// search is cut short.
Placement strip_cover(int width, int height);

class EnumerationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EnumerationOptions {
  bool pruning = true;
  Execution execution = Execution::parallel;
  /// Refuse when C(width*height, k) exceeds this.
  std::uint64_t max_subsets = 500'000'000;
};

struct EnumerationStats {
  /// Complete k-subsets examined at the leaves of the search.
  std::uint64_t leaves = 0;
};

/// All k-source connected covers of the block, in canonical lexicographic
/// order. Throws EnumerationLimitError when the subset count is too large.
std::vector<Placement> enumerate_coverings(int width, int height, int k,
                                           const EnumerationOptions& opts = {},
                                           EnumerationStats* stats = nullptr);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sgpc
