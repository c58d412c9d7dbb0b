#include "sgpc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sgpc {

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool perfect_square(std::int64_t v, std::int64_t& root) {
  root = isqrt(v);
  return root >= 0 && root * root == v;
}

std::uint64_t pack(int x, int y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

}  // namespace

std::string to_string(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int chebyshev(const GridPoint& a, const GridPoint& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

SquareGrid::SquareGrid(int side) : side_(side) {
  if (side < 1) throw PreconditionError("square grid side must be >= 1");
}

bool SquareGrid::is_corner(const GridPoint& q) const {
  return contains(q) && (q.x == 1 || q.x == side_) && (q.y == 1 || q.y == side_);
}

bool SquareGrid::is_boundary(const GridPoint& q) const {
  return contains(q) && (q.x == 1 || q.x == side_ || q.y == 1 || q.y == side_);
}

std::vector<GridPoint> SquareGrid::points() const {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(point_count()));
  for (int y = 1; y <= side_; ++y)
    for (int x = 1; x <= side_; ++x) out.push_back({x, y});
  return out;
}

std::vector<GridPoint> SquareGrid::corners() const {
  std::vector<GridPoint> out{{1, 1}, {side_, 1}, {1, side_}, {side_, side_}};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GridPoint> SquareGrid::boundary() const {
  std::vector<GridPoint> out;
  for (const auto& q : points())
    if (is_boundary(q)) out.push_back(q);
  return out;
}

// ---------------------------------------------------------------------------

Radius Radius::of(const Rational& r) {
  if (r <= Rational(0)) throw PreconditionError("radius must be positive");
  return Radius(r * r);
}

Radius Radius::sqrt_of(const Rational& value) {
  if (value <= Rational(0)) throw PreconditionError("radius must be positive");
  return Radius(value);
}

double Radius::value() const { return std::sqrt(squared_.to_double()); }

int Radius::floor() const {
  // largest n with n*n*den <= num
  auto n = static_cast<std::int64_t>(std::floor(value()));
  auto fits = [&](std::int64_t k) {
    return static_cast<__int128>(k) * k * squared_.den() <= squared_.num();
  };
  while (n > 0 && !fits(n)) --n;
  while (fits(n + 1)) ++n;
  return static_cast<int>(n);
}

bool Radius::reaches(std::int64_t dx, std::int64_t dy) const {
  __int128 d2 = static_cast<__int128>(dx) * dx + static_cast<__int128>(dy) * dy;
  return d2 * squared_.den() <= squared_.num();
}

std::string Radius::token() const {
  std::int64_t rn = 0, rd = 0;
  if (perfect_square(squared_.num(), rn) && perfect_square(squared_.den(), rd)) {
    Rational r(rn, rd);
    std::string dec = r.to_decimal_string();
    if (dec.find('/') == std::string::npos) return dec;
  }
  std::string dec = squared_.to_decimal_string();
  if (dec.find('/') == std::string::npos) return "sqrt" + dec;
  return "sqrt(" + squared_.to_string() + ")";
}

Radius parse_radius(std::string_view token) {
  if (token == "1.59") return Radius::sqrt_of(Rational(5, 2));
  try {
    if (token.starts_with("sqrt")) {
      std::string_view rest = token.substr(4);
      if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
      return Radius::sqrt_of(parse_rational(rest));
    }
    return Radius::of(parse_rational(token));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("invalid radius token '" + std::string(token) + "'");
  }
}

// ---------------------------------------------------------------------------

void validate(const Obstacle& o) {
  if (o.x2 <= o.x1 || o.y2 <= o.y1)
    throw PreconditionError("obstacle requires x2 > x1 and y2 > y1");
  for (int c : {o.x1, o.y1, o.x2, o.y2})
    if (c < 0 || c > kObstacleCoordMax)
      throw PreconditionError("obstacle coordinate out of range");
}

ObstacleMap::ObstacleMap(std::span<const Obstacle> obstacles) {
  for (const auto& o : obstacles) {
    validate(o);
    width_ = std::max(width_, o.x2);
    height_ = std::max(height_, o.y2);
  }
  if (obstacles.empty()) {
    width_ = height_ = 0;
    return;
  }
  cells_.assign(static_cast<std::size_t>(width_ + 1) * static_cast<std::size_t>(height_ + 1), 0);
  for (const auto& o : obstacles)
    for (int y = o.y1; y <= o.y2; ++y)
      for (int x = o.x1; x <= o.x2; ++x)
        cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_ + 1) +
               static_cast<std::size_t>(x)] = 1;
}

bool ObstacleMap::blocked(const GridPoint& q) const {
  if (q.x < 0 || q.y < 0 || q.x > width_ || q.y > height_ || cells_.empty()) return false;
  return cells_[static_cast<std::size_t>(q.y) * static_cast<std::size_t>(width_ + 1) +
                static_cast<std::size_t>(q.x)] != 0;
}

// ---------------------------------------------------------------------------

Placement::Placement(std::vector<Source> sources) : sources_(std::move(sources)) {
  if (sources_.size() < 2) return;
  int min_x = sources_[0].center.x, max_x = min_x;
  int min_y = sources_[0].center.y, max_y = min_y;
  for (const auto& s : sources_) {
    min_x = std::min(min_x, s.center.x);
    max_x = std::max(max_x, s.center.x);
    min_y = std::min(min_y, s.center.y);
    max_y = std::max(max_y, s.center.y);
  }
  auto w = static_cast<std::size_t>(max_x - min_x + 1);
  auto h = static_cast<std::size_t>(max_y - min_y + 1);
  if (w * h <= 16 * sources_.size() + 4096) {
    std::vector<bool> seen(w * h, false);
    for (const auto& s : sources_) {
      auto i = static_cast<std::size_t>(s.center.y - min_y) * w +
               static_cast<std::size_t>(s.center.x - min_x);
      if (seen[i]) throw PreconditionError("two sources share center " + to_string(s.center));
      seen[i] = true;
    }
    return;
  }
  std::vector<GridPoint> centers;
  centers.reserve(sources_.size());
  for (const auto& s : sources_) centers.push_back(s.center);
  std::sort(centers.begin(), centers.end());
  auto dup = std::adjacent_find(centers.begin(), centers.end());
  if (dup != centers.end()) throw PreconditionError("two sources share center " + to_string(*dup));
}

Placement Placement::canonical() const {
  Placement out = *this;
  std::sort(out.sources_.begin(), out.sources_.end(),
            [](const Source& a, const Source& b) { return a.center < b.center; });
  return out;
}

Placement Placement::without(const GridPoint& center) const {
  Placement out;
  out.sources_.reserve(sources_.size());
  for (const auto& s : sources_)
    if (!(s.center == center)) out.sources_.push_back(s);
  return out;
}

Placement unit_placement(std::span<const GridPoint> centers) {
  std::vector<Source> sources;
  sources.reserve(centers.size());
  for (const auto& c : centers) sources.push_back({c, Radius::unit()});
  return Placement(std::move(sources));
}

Placement unit_placement(std::initializer_list<GridPoint> centers) {
  return unit_placement(std::span<const GridPoint>(centers.begin(), centers.size()));
}

void validate(const Instance& inst) {
  if (inst.budget < 1) throw PreconditionError("budget must be >= 1");
  for (const auto& o : inst.obstacles) validate(o);
}

// ---------------------------------------------------------------------------

std::vector<GridPoint> covered_grid_points(const Source& s) {
  const int reach = s.radius.floor();
  std::vector<GridPoint> out;
  for (int dy = -reach; dy <= reach; ++dy) {
    const int y = s.center.y + dy;
    if (y < 1) continue;
    for (int dx = -reach; dx <= reach; ++dx) {
      const int x = s.center.x + dx;
      if (x < 1) continue;
      if (s.radius.reaches(dx, dy)) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<GridPoint> covered_in_grid(const Source& s, const SquareGrid& g) {
  std::vector<GridPoint> out = covered_grid_points(s);
  std::erase_if(out, [&](const GridPoint& q) { return !g.contains(q); });
  return out;
}

std::vector<GridPoint> overlap(const Source& a, const Source& b) {
  if (a.center == b.center) throw PreconditionError("overlap of two sources with the same center");
  const auto ca = covered_grid_points(a);
  const auto cb = covered_grid_points(b);
  std::vector<GridPoint> out;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(out));
  return out;
}

namespace {

template <typename Blocked>
bool communicable_impl(const Source& a, const Source& b, Blocked&& blocked) {
  const auto shared = overlap(a, b);
  if (shared.size() < 2) return false;
  return !std::all_of(shared.begin(), shared.end(), blocked);
}

}  // namespace

bool communicable(const Source& a, const Source& b, std::span<const Obstacle> obstacles) {
  return communicable_impl(a, b, [&](const GridPoint& q) {
    return std::any_of(obstacles.begin(), obstacles.end(),
                       [&](const Obstacle& o) { return o.contains(q); });
  });
}

bool communicable(const Source& a, const Source& b, const ObstacleMap& obstacles) {
  return communicable_impl(a, b, [&](const GridPoint& q) { return obstacles.blocked(q); });
}

// ---------------------------------------------------------------------------

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw PreconditionError("self loops are not allowed");
  if (has_edge(a, b)) return;
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  const auto& n = adjacency_[a];
  return std::find(n.begin(), n.end(), b) != n.end();
}

std::vector<std::size_t> Graph::components() const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(adjacency_.size(), unset);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  for (std::size_t root = 0; root < adjacency_.size(); ++root) {
    if (label[root] != unset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adjacency_[v])
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

Graph comm_graph(const Placement& pl, std::span<const Obstacle> obstacles) {
  const ObstacleMap blocked(obstacles);
  Graph g(pl.size());
  if (pl.size() < 2) return g;

  // Two disks share two lattice points only if their centers are within the
  // sum of the radii, so neighbors are searched in a bounded window.
  Radius widest = pl[0].radius;
  for (const auto& s : pl.sources())
    if (s.radius.squared() > widest.squared()) widest = s.radius;
  const int window = Radius::sqrt_of(widest.squared() * Rational(4)).floor();

  std::unordered_map<std::uint64_t, std::size_t> by_center;
  by_center.reserve(pl.size() * 2);
  for (std::size_t i = 0; i < pl.size(); ++i) by_center.emplace(pack(pl[i].center.x, pl[i].center.y), i);

  for (std::size_t i = 0; i < pl.size(); ++i) {
    const auto& c = pl[i].center;
    for (int dy = -window; dy <= window; ++dy)
      for (int dx = -window; dx <= window; ++dx) {
        auto it = by_center.find(pack(c.x + dx, c.y + dy));
        if (it == by_center.end() || it->second <= i) continue;
        if (communicable(pl[i], pl[it->second], blocked)) g.add_edge(i, it->second);
      }
  }
  return g;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto labels = g.components();
  return std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
}

}  // namespace sgpc
