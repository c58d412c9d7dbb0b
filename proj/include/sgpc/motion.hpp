#pragma once

// Continuous-area coverage by sampling: sources either sweep a movement path
// (all sources move together, one grid unit per step) or stay put with a
// wider radius.
//
// Samples lie on a lattice of spacing `resolution` anchored at the area's
// top-left corner, with the right and bottom boundary lines always included.
// All distance tests are exact: coordinates are kept as integers over the
// resolution's denominator and compared against the squared radius.

#include <cstddef>
#include <string>
#include <vector>

#include "sgpc/exact.hpp"
#include "sgpc/grid.hpp"
#include "sgpc/rational.hpp"

namespace sgpc {

/// N decreases y, S increases y, E increases x, W decreases x.
enum class Direction { north, south, east, west };

std::string to_string(Direction d);
GridPoint displacement(Direction d);

using MovePath = std::vector<Direction>;

/// N, S, S, N, E, W, W, E.
MovePath eight_step_path();

/// Offsets of a mover after each prefix of the path, starting with (0,0).
std::vector<GridPoint> path_offsets(const MovePath& path);

/// The closed region [x0, x0 + width] x [y0, y0 + height].
struct AreaSpec {
  GridPoint origin;
  int width = 1;
  int height = 1;

  /// Square area of size a with top-left corner at origin.
  static AreaSpec square(const GridPoint& origin, int a) { return {origin, a, a}; }
};

struct ContinuousPoint {
  double x = 0;
  double y = 0;
  friend bool operator==(const ContinuousPoint&, const ContinuousPoint&) = default;
};

struct CoverageResult {
  bool covered = false;
  std::vector<ContinuousPoint> uncovered_samples;  // row-major
  Rational resolution;
  std::size_t sample_count = 0;
};

inline const Rational kDefaultResolution{1, 20};

/// Samples covered by at least one source at any time index 0..|path|.
CoverageResult swept_area_covered(const Placement& pl, const Radius& radius, const MovePath& path,
                                  const AreaSpec& area, const Rational& resolution = kDefaultResolution,
                                  Execution exec = Execution::parallel);

/// Same sampling with a single time index.
CoverageResult static_area_covered(const Placement& pl, const Radius& radius, const AreaSpec& area,
                                   const Rational& resolution = kDefaultResolution,
                                   Execution exec = Execution::parallel);

/// Reference implementation: every sample is tested against every moved
/// source position. Quadratic; intended for tests and benchmarks.
CoverageResult swept_area_covered_reference(const Placement& pl, const Radius& radius, const MovePath& path,
                                            const AreaSpec& area, const Rational& resolution = kDefaultResolution);

}  // namespace sgpc
