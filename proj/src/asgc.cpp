#include "sgpc/asgc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sgpc/exact.hpp"

namespace sgpc {

int block_size(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::g3: return 3;
    case GadgetKind::g4: return 4;
    case GadgetKind::g5: return 5;
  }
  return 0;
}

int source_count(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::g3: return 3;
    case GadgetKind::g4: return 6;
    case GadgetKind::g5: return 9;
  }
  return 0;
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::g3: return "G3";
    case GadgetKind::g4: return "G4";
    case GadgetKind::g5: return "G5";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view text) {
  if (text == "G3") return GadgetKind::g3;
  if (text == "G4") return GadgetKind::g4;
  if (text == "G5") return GadgetKind::g5;
  throw PreconditionError("unknown gadget kind '" + std::string(text) + "'");
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::identity: return "identity";
    case Orientation::mirrored: return "mirrored";
    case Orientation::transposed: return "transposed";
  }
  return "?";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "identity") return Orientation::identity;
  if (text == "mirrored") return Orientation::mirrored;
  if (text == "transposed") return Orientation::transposed;
  throw PreconditionError("unknown orientation '" + std::string(text) + "'");
}

GadgetLayout flip_vertical(const GadgetLayout& layout) {
  const int n = block_size(layout.kind);
  GadgetLayout out = layout;
  for (auto& o : out.sources) o.dy = n + 1 - o.dy;
  std::sort(out.sources.begin(), out.sources.end());
  if (layout.orientation == Orientation::identity) out.orientation = Orientation::mirrored;
  else if (layout.orientation == Orientation::mirrored) out.orientation = Orientation::identity;
  return out;
}

std::vector<GridPoint> lay(const GadgetLayout& layout, const GridPoint& origin) {
  std::vector<GridPoint> out;
  out.reserve(layout.sources.size());
  for (const auto& o : layout.sources) out.push_back({origin.x + o.dx - 1, origin.y + o.dy - 1});
  return out;
}

namespace {

GadgetLayout from_placement(GadgetKind kind, const Placement& pl) {
  GadgetLayout g{kind, Orientation::identity, {}};
  for (const auto& s : pl.sources()) g.sources.push_back({s.center.x, s.center.y});
  std::sort(g.sources.begin(), g.sources.end());
  return g;
}

bool has_source(const GadgetLayout& g, int dx, int dy_lo, int dy_hi) {
  return std::any_of(g.sources.begin(), g.sources.end(),
                     [&](const Offset& o) { return o.dx == dx && o.dy >= dy_lo && o.dy <= dy_hi; });
}

// A diagonal block of side n at (c,c) borders a 3-gadget row on its left whose
// sources sit on block row n - 1, and one on its right whose sources sit on
// block row 2. Each row's end source must see a gadget source one column over.
bool has_ports(const GadgetLayout& g) {
  const int n = block_size(g.kind);
  return has_source(g, 1, n - 2, n) && has_source(g, n, 1, 3);
}

// Blocks of consecutive diagonal gadgets start three points apart. They must
// not share a center and at least one pair must be communicable.
bool chains(const GadgetLayout& upper, const GadgetLayout& lower) {
  const auto a = lay(upper, {1, 1});
  const auto b = lay(lower, {4, 4});
  bool linked = false;
  for (const auto& p : a)
    for (const auto& q : b) {
      if (p == q) return false;
      if (chebyshev(p, q) == 1) linked = true;
    }
  return linked;
}

bool chain_compatible_g4(const GadgetLayout& g) {
  const GadgetLayout m = flip_vertical(g);
  return has_ports(g) && has_ports(m) && chains(g, m) && chains(m, g);
}

bool chain_compatible_g5(const GadgetLayout& g) { return has_ports(g) && chains(g, g); }

struct Derived {
  GadgetLayout g3;
  GadgetLayout g4;
  GadgetLayout g5;
};

Derived derive() {
  Derived d;

  bool found = false;
  for (const auto& pl : enumerate_coverings(3, 3, source_count(GadgetKind::g3))) {
    const auto g = from_placement(GadgetKind::g3, pl);
    if (std::all_of(g.sources.begin(), g.sources.end(),
                    [&](const Offset& o) { return o.dy == g.sources.front().dy; })) {
      d.g3 = g;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no horizontal 3-gadget among the 3x3 coverings");

  auto pick = [](GadgetKind kind, auto&& accept) {
    const int n = block_size(kind);
    for (const auto& pl : enumerate_coverings(n, n, source_count(kind))) {
      auto g = from_placement(kind, pl);
      if (accept(g)) return g;
    }
    throw std::logic_error("no chain-compatible " + to_string(kind) + " layout");
  };
  d.g4 = pick(GadgetKind::g4, chain_compatible_g4);
  d.g5 = pick(GadgetKind::g5, chain_compatible_g5);
  return d;
}

const Derived& derived() {
  static const Derived d = derive();
  return d;
}

void require(bool ok, const char* message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace

GadgetLayout canonical_gadget(GadgetKind kind, Orientation orientation) {
  const Derived& d = derived();
  const GadgetLayout& base = kind == GadgetKind::g3 ? d.g3 : kind == GadgetKind::g4 ? d.g4 : d.g5;
  switch (orientation) {
    case Orientation::identity: return base;
    case Orientation::mirrored: return flip_vertical(base);
    case Orientation::transposed: {
      if (kind != GadgetKind::g3) throw PreconditionError("only the 3-gadget has a transposed form");
      GadgetLayout t = base;
      t.orientation = Orientation::transposed;
      for (auto& o : t.sources) std::swap(o.dx, o.dy);
      std::sort(t.sources.begin(), t.sources.end());
      return t;
    }
  }
  return base;
}

AsgcPlan fraction_zero(int p) {
  require(p % 3 == 0 && p >= 6, "fraction_zero requires p % 3 == 0 and p >= 6");
  AsgcPlan plan{p, 0, {}, {}, {}};
  const int rows = p / 3;
  plan.gadgets.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(rows));
  for (int r = 1; r <= p - 2; r += 3)
    for (int c = 1; c <= p - 2; c += 3) plan.gadgets.push_back({GadgetKind::g3, {c, r}, Orientation::identity});
  // Source rows sit at y = 3i + 2. A connector pair in column 2 joins rows i
  // and i + 1; the row source between two connector pairs becomes redundant.
  for (int i = 0; i + 1 < rows; ++i) {
    plan.connectors.push_back({2, 3 * i + 3});
    plan.connectors.push_back({2, 3 * i + 4});
  }
  for (int i = 1; i + 1 < rows; ++i) plan.deletions.push_back({2, 3 * i + 2});
  return plan;
}

namespace {

// Diagonal gadgets of side n at (c,c), c = 1, 4, ..., p - n + 1, plus the two
// triangles of 3-gadget rows. Left rows end next to the diagonal block below
// them; right rows start next to the diagonal block on their left.
AsgcPlan diagonal_plan(int p, int fraction_case, GadgetKind kind, bool alternate_mirror) {
  const int n = block_size(kind);
  AsgcPlan plan{p, fraction_case, {}, {}, {}};
  int k = 0;
  for (int c = 1; c <= p - n + 1; c += 3, ++k) {
    const bool mirror = alternate_mirror && (k % 2 == 1);
    plan.gadgets.push_back({kind, {c, c}, mirror ? Orientation::mirrored : Orientation::identity});
  }
  for (int cmax = 1; cmax <= p - n - 2; cmax += 3)
    for (int c = 1; c <= cmax; c += 3) plan.gadgets.push_back({GadgetKind::g3, {c, cmax + n}, Orientation::identity});
  for (int cmin = n + 1; cmin <= p - 2; cmin += 3)
    for (int c = cmin; c <= p - 2; c += 3) plan.gadgets.push_back({GadgetKind::g3, {c, cmin - n}, Orientation::identity});
  return plan;
}

}  // namespace

AsgcPlan fraction_one(int p) {
  require(p % 3 == 1 && p >= 7, "fraction_one requires p % 3 == 1 and p >= 7");
  return diagonal_plan(p, 1, GadgetKind::g4, true);
}

AsgcPlan fraction_two(int p) {
  require(p % 3 == 2 && p >= 8, "fraction_two requires p % 3 == 2 and p >= 8");
  return diagonal_plan(p, 2, GadgetKind::g5, false);
}

AsgcPlan asgc(int p) {
  if (p <= 5) throw PreconditionError("asgc requires p > 5; use the exact solver for p <= 5");
  switch (p % 3) {
    case 0: return fraction_zero(p);
    case 1: return fraction_one(p);
    default: return fraction_two(p);
  }
}

std::int64_t predicted_count(std::int64_t p) {
  if (p <= 5) throw PreconditionError("predicted_count requires p > 5");
  switch (p % 3) {
    case 0: return p * (p + 1) / 3;
    case 1: return (p - 1) * (p + 2) / 3;
    default: return (p - 2) * (p + 4) / 3;
  }
}

Placement realize(const AsgcPlan& plan) {
  const int p = plan.p;
  const SquareGrid grid(p);
  std::vector<std::uint8_t> occupied(static_cast<std::size_t>(grid.point_count()), 0);

  auto place = [&](const GridPoint& q) {
    if (!grid.contains(q)) throw std::logic_error("plan source outside the grid at " + to_string(q));
    auto& cell = occupied[grid.index(q)];
    if (cell) throw std::logic_error("plan places two sources at " + to_string(q));
    cell = 1;
  };

  // [kind][orientation]
  std::array<std::array<std::vector<Offset>, 3>, 3> layouts;
  for (auto kind : {GadgetKind::g3, GadgetKind::g4, GadgetKind::g5})
    for (auto o : {Orientation::identity, Orientation::mirrored, Orientation::transposed}) {
      if (o == Orientation::transposed && kind != GadgetKind::g3) continue;
      layouts[static_cast<std::size_t>(kind)][static_cast<std::size_t>(o)] = canonical_gadget(kind, o).sources;
    }

  for (const auto& g : plan.gadgets) {
    const auto& offsets = layouts[static_cast<std::size_t>(g.kind)][static_cast<std::size_t>(g.orientation)];
    if (offsets.empty()) throw std::logic_error("unsupported gadget orientation");
    for (const auto& o : offsets) place({g.origin.x + o.dx - 1, g.origin.y + o.dy - 1});
  }
  for (const auto& q : plan.connectors) place(q);
  for (const auto& q : plan.deletions) {
    if (!grid.contains(q) || !occupied[grid.index(q)])
      throw std::logic_error("deletion of a missing source at " + to_string(q));
    occupied[grid.index(q)] = 0;
  }

  std::vector<Source> sources;
  sources.reserve(static_cast<std::size_t>(predicted_count(p)));
  for (int y = 1; y <= p; ++y)
    for (int x = 1; x <= p; ++x)
      if (occupied[grid.index({x, y})]) sources.push_back({{x, y}, Radius::unit()});

  if (static_cast<std::int64_t>(sources.size()) != predicted_count(p))
    throw std::logic_error("realized source count " + std::to_string(sources.size()) +
                           " differs from the closed form " + std::to_string(predicted_count(p)));
  return Placement(std::move(sources));
}

}  // namespace sgpc
