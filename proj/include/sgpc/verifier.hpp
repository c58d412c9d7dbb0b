#pragma once

#include <vector>

#include "sgpc/grid.hpp"

namespace sgpc {

struct VerificationReport {
  bool fully_covered = false;
  std::vector<GridPoint> uncovered;  // row-major
  bool connected = false;
  std::size_t source_count = 0;
  bool within_budget = false;
  bool passed = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks full coverage of the grid, a single communicable component and the
/// budget. Runs in O(p^2 + m) for unit sources (m = number of sources).
VerificationReport verify(const Instance& inst, const Placement& pl);

/// Grid points of the instance not covered by any source, row-major.
std::vector<GridPoint> uncovered(const Instance& inst, const Placement& pl);

}  // namespace sgpc
