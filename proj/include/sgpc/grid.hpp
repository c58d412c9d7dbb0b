#pragma once

// Lattice geometry for unit (and wider) coverage sources: covered point sets,
// pairwise overlap, communicability and the communicability graph.
//
// Coordinates follow the screen convention: (1,1) is the top-left point, x
// grows to the right and y grows downward. Lattice points with a coordinate
// below 1 do not exist and are never reported.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgpc/rational.hpp"

namespace sgpc {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridPoint {
  int x = 1;
  int y = 1;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  /// Row-major order: by y, then x. This is the canonical order of placements.
  friend std::strong_ordering operator<=>(const GridPoint& a, const GridPoint& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(const GridPoint& p);

/// Chebyshev (king-move) distance between two lattice points.
int chebyshev(const GridPoint& a, const GridPoint& b);

/// The p x p region {(x,y) : 1 <= x,y <= p}.
class SquareGrid {
 public:
  explicit SquareGrid(int side);

  int side() const { return side_; }
  std::int64_t point_count() const { return static_cast<std::int64_t>(side_) * side_; }
  bool contains(const GridPoint& q) const {
    return q.x >= 1 && q.y >= 1 && q.x <= side_ && q.y <= side_;
  }
  bool is_corner(const GridPoint& q) const;
  bool is_boundary(const GridPoint& q) const;
  bool is_side(const GridPoint& q) const { return is_boundary(q) && !is_corner(q); }

  /// Row-major index of an in-grid point, 0-based.
  std::size_t index(const GridPoint& q) const {
    return static_cast<std::size_t>(q.y - 1) * static_cast<std::size_t>(side_) +
           static_cast<std::size_t>(q.x - 1);
  }

  std::vector<GridPoint> points() const;
  std::vector<GridPoint> corners() const;
  std::vector<GridPoint> boundary() const;

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

 private:
  int side_;
};

/// Coverage radius stored as its exact square, so that irrational radii such
/// as sqrt(2) compare exactly against integer squared distances.
class Radius {
 public:
  /// The default unit radius.
  Radius() : squared_(1) {}

  static Radius unit() { return Radius(); }
  /// Radius r given directly (r > 0).
  static Radius of(const Rational& r);
  /// Radius sqrt(value) (value > 0).
  static Radius sqrt_of(const Rational& value);

  const Rational& squared() const { return squared_; }
  double value() const;
  /// Largest integer n with n <= radius.
  int floor() const;

  /// True iff an integer offset (dx, dy) lies within the closed disk.
  bool reaches(std::int64_t dx, std::int64_t dy) const;

  /// Serialized token: "1", "sqrt2", "sqrt2.5", "1.5", ...
  std::string token() const;

  friend bool operator==(const Radius&, const Radius&) = default;

 private:
  explicit Radius(Rational squared) : squared_(squared) {}
  Rational squared_;
};

/// Parses a radius token. Accepts "1", "1.5", "3/2", "sqrt2", "sqrt2.5",
/// "sqrt(5/2)" and the alias "1.59" for sqrt(5/2).
Radius parse_radius(std::string_view token);

struct Source {
  GridPoint center;
  Radius radius;

  friend bool operator==(const Source&, const Source&) = default;
};

/// Axis-aligned closed rectangle [x1,x2] x [y1,y2] that blocks communication.
/// Coordinates are non-negative; 0 is allowed so a rectangle can hug column
/// or row 1 without covering column or row 2.
struct Obstacle {
  int x1 = 0;
  int y1 = 0;
  int x2 = 1;
  int y2 = 1;

  bool contains(const GridPoint& q) const {
    return x1 <= q.x && q.x <= x2 && y1 <= q.y && q.y <= y2;
  }

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

/// Upper limit on obstacle coordinates.
inline constexpr int kObstacleCoordMax = 1 << 20;

/// Throws PreconditionError unless x2 > x1, y2 > y1 and all coordinates lie in
/// [0, kObstacleCoordMax].
void validate(const Obstacle& o);

/// Fast closed-containment lookup over a set of obstacles.
class ObstacleMap {
 public:
  ObstacleMap() = default;
  explicit ObstacleMap(std::span<const Obstacle> obstacles);

  bool blocked(const GridPoint& q) const;
  bool empty() const { return width_ == 0; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// A finite set of sources with pairwise distinct centers.
class Placement {
 public:
  Placement() = default;
  /// Throws PreconditionError if two sources share a center.
  explicit Placement(std::vector<Source> sources);

  std::span<const Source> sources() const { return sources_; }
  std::size_t size() const { return sources_.size(); }
  bool empty() const { return sources_.empty(); }
  const Source& operator[](std::size_t i) const { return sources_[i]; }

  /// Copy with sources sorted in row-major center order.
  Placement canonical() const;
  /// Copy without the source centered at `center` (no-op if absent).
  Placement without(const GridPoint& center) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<Source> sources_;
};

/// Convenience: unit sources at the given centers.
Placement unit_placement(std::span<const GridPoint> centers);
Placement unit_placement(std::initializer_list<GridPoint> centers);

struct Instance {
  SquareGrid grid{1};
  std::vector<Obstacle> obstacles;
  int budget = 1;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws PreconditionError if budget < 1 or an obstacle is malformed.
void validate(const Instance& inst);

/// Every lattice point within distance <= radius of the center, row-major.
std::vector<GridPoint> covered_grid_points(const Source& s);

/// covered_grid_points(s) clipped to the grid.
std::vector<GridPoint> covered_in_grid(const Source& s, const SquareGrid& g);

/// Points covered by both sources. Throws PreconditionError on equal centers.
std::vector<GridPoint> overlap(const Source& a, const Source& b);

/// True iff the overlap has at least two points and not all of them lie
/// inside obstacles. Throws PreconditionError on equal centers.
bool communicable(const Source& a, const Source& b, std::span<const Obstacle> obstacles);
bool communicable(const Source& a, const Source& b, const ObstacleMap& obstacles);

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t vertices = 0) : adjacency_(vertices) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }

  /// Component label per vertex, labels assigned in order of first vertex.
  std::vector<std::size_t> components() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Edge (i,j) iff communicable(sources[i], sources[j], obstacles).
Graph comm_graph(const Placement& pl, std::span<const Obstacle> obstacles);

/// A graph with at most one vertex (including the empty graph) is connected.
bool is_connected(const Graph& g);

}  // namespace sgpc
