#pragma once

// APPROX-SQUARE-GRID-COVERAGE: tiles a p x p grid (p > 5) with 3-, 4- and
// 5-gadgets chosen by p mod 3.
//
//   p mod 3 == 0  rows of horizontal 3-gadgets joined by connector pairs in
//                 column 2, with one redundant row source removed per
//                 interior row                        -> p(p+1)/3 sources
//   p mod 3 == 1  4-gadgets down the diagonal (every other one mirrored),
//                 triangles of 3-gadget rows on both sides -> (p-1)(p+2)/3
//   p mod 3 == 2  5-gadgets down the diagonal, triangles of 3-gadget rows
//                                                     -> (p-2)(p+4)/3

#include <cstdint>
#include <string>
#include <vector>

#include "sgpc/grid.hpp"

namespace sgpc {

enum class GadgetKind { g3, g4, g5 };

int block_size(GadgetKind kind);
int source_count(GadgetKind kind);
std::string to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(std::string_view text);

/// identity and mirrored (across the block's horizontal midline) apply to every
/// kind; transposed only to the 3-gadget, giving its vertical variant.
enum class Orientation { identity, mirrored, transposed };

std::string to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

/// 1-based offset inside a gadget block; (1,1) is the block's top-left point.
struct Offset {
  int dx = 1;
  int dy = 1;
  friend bool operator==(const Offset&, const Offset&) = default;
  friend auto operator<=>(const Offset& a, const Offset& b) {
    if (auto c = a.dy <=> b.dy; c != 0) return c;
    return a.dx <=> b.dx;
  }
};

struct GadgetLayout {
  GadgetKind kind = GadgetKind::g3;
  Orientation orientation = Orientation::identity;
  std::vector<Offset> sources;  // row-major

  friend bool operator==(const GadgetLayout&, const GadgetLayout&) = default;
};

/// The fixed gadget layouts. They are derived once, on first use, from
/// enumerate_coverings by the chain-compatibility filter (see asgc.cpp).
GadgetLayout canonical_gadget(GadgetKind kind, Orientation orientation = Orientation::identity);

/// Mirror across the horizontal midline: (dx, dy) -> (dx, n + 1 - dy).
GadgetLayout flip_vertical(const GadgetLayout& layout);

/// All sources of a layout placed with its block's top-left point at origin.
std::vector<GridPoint> lay(const GadgetLayout& layout, const GridPoint& origin);

struct GadgetPlacement {
  GadgetKind kind = GadgetKind::g3;
  GridPoint origin;  // top-left point of the block
  Orientation orientation = Orientation::identity;

  friend bool operator==(const GadgetPlacement&, const GadgetPlacement&) = default;
};

struct AsgcPlan {
  int p = 0;
  int fraction_case = 0;
  std::vector<GadgetPlacement> gadgets;
  std::vector<GridPoint> connectors;
  std::vector<GridPoint> deletions;
};

AsgcPlan fraction_zero(int p);  // p % 3 == 0, p >= 6
AsgcPlan fraction_one(int p);   // p % 3 == 1, p >= 7
AsgcPlan fraction_two(int p);   // p % 3 == 2, p >= 8

/// Dispatches on p mod 3. Throws PreconditionError for p <= 5.
AsgcPlan asgc(int p);

/// Closed-form source count of asgc(p).
std::int64_t predicted_count(std::int64_t p);

/// Unit sources of the plan in row-major order. Throws std::logic_error if two
/// gadgets collide, a source falls outside the grid, a deletion targets an
/// empty point, or the count differs from predicted_count(p).
Placement realize(const AsgcPlan& plan);

}  // namespace sgpc
