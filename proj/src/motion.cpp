#include "sgpc/motion.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace sgpc {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::north: return "N";
    case Direction::south: return "S";
    case Direction::east: return "E";
    case Direction::west: return "W";
  }
  return "?";
}

GridPoint displacement(Direction d) {
  switch (d) {
    case Direction::north: return {0, -1};
    case Direction::south: return {0, 1};
    case Direction::east: return {1, 0};
    case Direction::west: return {-1, 0};
  }
  return {0, 0};
}

MovePath eight_step_path() {
  using D = Direction;
  return {D::north, D::south, D::south, D::north, D::east, D::west, D::west, D::east};
}

std::vector<GridPoint> path_offsets(const MovePath& path) {
  std::vector<GridPoint> out{{0, 0}};
  GridPoint at{0, 0};
  for (auto d : path) {
    const auto step = displacement(d);
    at = {at.x + step.x, at.y + step.y};
    out.push_back(at);
  }
  return out;
}

namespace {

using i128 = __int128;

// Sample coordinates as integers over a common denominator D.
struct Lattice {
  std::int64_t den = 1;
  std::int64_t step = 1;
  std::int64_t x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  std::int64_t cols = 0, rows = 0;

  static std::int64_t count(std::int64_t lo, std::int64_t hi, std::int64_t step) {
    const std::int64_t n = (hi - lo) / step + 1;
    return (hi - lo) % step == 0 ? n : n + 1;
  }

  Lattice(const AreaSpec& area, const Rational& res) : den(res.den()), step(res.num()) {
    if (res <= Rational(0)) throw PreconditionError("resolution must be positive");
    if (area.width < 0 || area.height < 0) throw PreconditionError("area extent must be non-negative");
    x_lo = std::int64_t{area.origin.x} * den;
    x_hi = std::int64_t{area.origin.x + area.width} * den;
    y_lo = std::int64_t{area.origin.y} * den;
    y_hi = std::int64_t{area.origin.y + area.height} * den;
    cols = count(x_lo, x_hi, step);
    rows = count(y_lo, y_hi, step);
  }

  std::int64_t x(std::int64_t i) const { return std::min(x_lo + i * step, x_hi); }
  std::int64_t y(std::int64_t j) const { return std::min(y_lo + j * step, y_hi); }

  ContinuousPoint point(std::int64_t i, std::int64_t j) const {
    return {static_cast<double>(x(i)) / static_cast<double>(den), static_cast<double>(y(j)) / static_cast<double>(den)};
  }
};

// b * |d|^2 <= a * D^2 for r^2 = a / b.
bool within(const Rational& r2, std::int64_t den, std::int64_t dx, std::int64_t dy) {
  const i128 d2 = i128{dx} * dx + i128{dy} * dy;
  return i128{r2.den()} * d2 <= i128{r2.num()} * den * den;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

CoverageResult finish(const Lattice& lat, const Rational& res, std::vector<std::uint8_t>&& hit) {
  CoverageResult out;
  out.resolution = res;
  out.sample_count = static_cast<std::size_t>(lat.cols * lat.rows);
  for (std::int64_t j = 0; j < lat.rows; ++j)
    for (std::int64_t i = 0; i < lat.cols; ++i)
      if (!hit[static_cast<std::size_t>(j * lat.cols + i)]) out.uncovered_samples.push_back(lat.point(i, j));
  out.covered = out.uncovered_samples.empty();
  return out;
}

// Every distinct center any source occupies at some time index, as a bitmap
// over its bounding box. All sources share one radius, so a sample is covered
// iff it is near one of these positions.
class PositionIndex {
 public:
  PositionIndex(const Placement& pl, const std::vector<GridPoint>& offsets) {
    if (pl.empty()) return;
    int x0 = std::numeric_limits<int>::max(), y0 = x0;
    int x1 = std::numeric_limits<int>::min(), y1 = x1;
    for (const auto& s : pl.sources())
      for (const auto& o : offsets) {
        x0 = std::min(x0, s.center.x + o.x);
        x1 = std::max(x1, s.center.x + o.x);
        y0 = std::min(y0, s.center.y + o.y);
        y1 = std::max(y1, s.center.y + o.y);
      }
    x0_ = x0;
    y0_ = y0;
    w_ = x1 - x0 + 1;
    h_ = y1 - y0 + 1;
    bits_.assign(static_cast<std::size_t>(w_) * static_cast<std::size_t>(h_), 0);
    for (const auto& s : pl.sources())
      for (const auto& o : offsets) bits_[cell(s.center.x + o.x, s.center.y + o.y)] = 1;
  }

  bool at(std::int64_t x, std::int64_t y) const {
    if (x < x0_ || y < y0_ || x >= x0_ + w_ || y >= y0_ + h_) return false;
    return bits_[cell(static_cast<int>(x), static_cast<int>(y))] != 0;
  }

 private:
  std::size_t cell(int x, int y) const {
    return static_cast<std::size_t>(y - y0_) * static_cast<std::size_t>(w_) + static_cast<std::size_t>(x - x0_);
  }

  int x0_ = 0, y0_ = 0, w_ = 0, h_ = 0;
  std::vector<std::uint8_t> bits_;
};

CoverageResult sample(const Placement& pl, const Radius& radius, const std::vector<GridPoint>& offsets,
                      const AreaSpec& area, const Rational& res, Execution exec) {
  const Lattice lat(area, res);
  const PositionIndex index(pl, offsets);
  const Rational& r2 = radius.squared();
  const std::int64_t reach = radius.floor() + 1;
  const std::int64_t D = lat.den;

  std::vector<std::uint8_t> hit(static_cast<std::size_t>(lat.cols * lat.rows), 0);
  const bool par = exec == Execution::parallel;
  const std::int64_t rows = lat.rows;

#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t j = 0; j < rows; ++j) {
    const std::int64_t sy = lat.y(j);
    const std::int64_t cy = floor_div(sy, D);
    for (std::int64_t i = 0; i < lat.cols; ++i) {
      const std::int64_t sx = lat.x(i);
      const std::int64_t cx = floor_div(sx, D);
      bool covered = false;
      for (std::int64_t y = cy - reach; y <= cy + reach + 1 && !covered; ++y)
        for (std::int64_t x = cx - reach; x <= cx + reach + 1 && !covered; ++x)
          covered = index.at(x, y) && within(r2, D, sx - x * D, sy - y * D);
      hit[static_cast<std::size_t>(j * lat.cols + i)] = covered ? 1 : 0;
    }
  }
  return finish(lat, res, std::move(hit));
}

}  // namespace

CoverageResult swept_area_covered(const Placement& pl, const Radius& radius, const MovePath& path,
                                  const AreaSpec& area, const Rational& resolution, Execution exec) {
  return sample(pl, radius, path_offsets(path), area, resolution, exec);
}

CoverageResult static_area_covered(const Placement& pl, const Radius& radius, const AreaSpec& area,
                                   const Rational& resolution, Execution exec) {
  return sample(pl, radius, {{0, 0}}, area, resolution, exec);
}

CoverageResult swept_area_covered_reference(const Placement& pl, const Radius& radius, const MovePath& path,
                                            const AreaSpec& area, const Rational& resolution) {
  const Lattice lat(area, resolution);
  const auto offsets = path_offsets(path);
  const std::int64_t D = lat.den;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(lat.cols * lat.rows), 0);
  for (std::int64_t j = 0; j < lat.rows; ++j)
    for (std::int64_t i = 0; i < lat.cols; ++i) {
      bool covered = false;
      for (const auto& o : offsets)
        for (const auto& s : pl.sources()) {
          const std::int64_t x = s.center.x + o.x;
          const std::int64_t y = s.center.y + o.y;
          if (within(radius.squared(), D, lat.x(i) - x * D, lat.y(j) - y * D)) covered = true;
        }
      hit[static_cast<std::size_t>(j * lat.cols + i)] = covered ? 1 : 0;
    }
  return finish(lat, resolution, std::move(hit));
}

}  // namespace sgpc
