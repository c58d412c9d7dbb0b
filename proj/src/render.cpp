#include "sgpc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace sgpc {

RenderStyle parse_render_style(std::string_view text) {
  if (text == "ascii") return RenderStyle::ascii;
  if (text == "svg") return RenderStyle::svg;
  throw PreconditionError("unknown render style '" + std::string(text) + "'");
}

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 40.0;

int grid_side(const PlacementDocument& doc) {
  if (doc.instance) return doc.instance->grid.side();
  int side = 1;
  for (const auto& s : doc.placement.sources()) side = std::max({side, s.center.x, s.center.y});
  return side;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

double px(double coord) { return kMargin + (coord - 1.0) * kScale; }

std::string ascii(const PlacementDocument& doc) {
  const int p = grid_side(doc);
  const SquareGrid grid(p);
  std::vector<char> cells(static_cast<std::size_t>(grid.point_count()), '.');
  auto put = [&](const GridPoint& q, char c) {
    if (grid.contains(q)) cells[grid.index(q)] = c;
  };

  for (const auto& s : doc.placement.sources())
    for (const auto& q : covered_in_grid(s, grid)) put(q, 'o');
  if (doc.instance)
    for (const auto& q : grid.points())
      for (const auto& o : doc.instance->obstacles)
        if (o.contains(q)) put(q, '#');

  std::set<GridPoint> connectors;
  if (doc.annotations) {
    connectors.insert(doc.annotations->connectors.begin(), doc.annotations->connectors.end());
    for (const auto& q : doc.annotations->deletions) put(q, 'x');
  }
  for (const auto& s : doc.placement.sources()) put(s.center, connectors.count(s.center) ? 'C' : 'S');

  std::string out;
  out.reserve(cells.size() + static_cast<std::size_t>(p));
  for (int y = 1; y <= p; ++y) {
    for (int x = 1; x <= p; ++x) out += cells[grid.index({x, y})];
    out += '\n';
  }
  return out;
}

std::string svg(const PlacementDocument& doc) {
  const int p = grid_side(doc);
  const double size = 2 * kMargin + (p - 1) * kScale;
  const std::string dim = num(size);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + dim + "\" height=\"" + dim +
         "\" viewBox=\"0 0 " + dim + " " + dim + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + dim + "\" height=\"" + dim + "\" fill=\"white\"/>\n";

  if (doc.instance)
    for (const auto& o : doc.instance->obstacles)
      out += "<rect class=\"obstacle\" x=\"" + num(px(o.x1)) + "\" y=\"" + num(px(o.y1)) + "\" width=\"" +
             num((o.x2 - o.x1) * kScale) + "\" height=\"" + num((o.y2 - o.y1) * kScale) +
             "\" fill=\"#808080\" fill-opacity=\"0.45\" stroke=\"#404040\"/>\n";

  for (const auto& s : doc.placement.sources())
    out += "<circle class=\"coverage\" cx=\"" + num(px(s.center.x)) + "\" cy=\"" + num(px(s.center.y)) + "\" r=\"" +
           num(s.radius.value() * kScale) + "\" fill=\"#3b82f6\" fill-opacity=\"0.12\" stroke=\"#3b82f6\" stroke-opacity=\"0.5\"/>\n";

  std::set<GridPoint> missing;
  if (doc.instance) {
    const auto pts = uncovered(*doc.instance, doc.placement);
    missing.insert(pts.begin(), pts.end());
  }
  for (int y = 1; y <= p; ++y)
    for (int x = 1; x <= p; ++x) {
      const bool miss = missing.count({x, y}) > 0;
      out += "<circle class=\"" + std::string(miss ? "uncovered" : "point") + "\" cx=\"" + num(px(x)) + "\" cy=\"" +
             num(px(y)) + "\" r=\"" + (miss ? "4" : "2") + "\" fill=\"" + (miss ? "#dc2626" : "#111111") + "\"/>\n";
    }

  std::set<GridPoint> connectors;
  if (doc.annotations) connectors.insert(doc.annotations->connectors.begin(), doc.annotations->connectors.end());
  for (const auto& s : doc.placement.sources()) {
    const bool conn = connectors.count(s.center) > 0;
    out += "<circle class=\"" + std::string(conn ? "connector" : "source") + "\" cx=\"" + num(px(s.center.x)) +
           "\" cy=\"" + num(px(s.center.y)) + "\" r=\"6\" fill=\"" + (conn ? "#f59e0b" : "#1d4ed8") + "\"/>\n";
  }
  if (doc.annotations)
    for (const auto& q : doc.annotations->deletions) {
      const double cx = px(q.x), cy = px(q.y), d = 6;
      out += "<path class=\"deletion\" d=\"M" + num(cx - d) + " " + num(cy - d) + " L" + num(cx + d) + " " +
             num(cy + d) + " M" + num(cx - d) + " " + num(cy + d) + " L" + num(cx + d) + " " + num(cy - d) +
             "\" stroke=\"#dc2626\" stroke-width=\"2\"/>\n";
    }

  if (doc.coverage)
    for (const auto& s : doc.coverage->uncovered_samples)
      out += "<circle class=\"uncovered-sample\" cx=\"" + num(px(s.x)) + "\" cy=\"" + num(px(s.y)) +
             "\" r=\"1.5\" fill=\"#dc2626\"/>\n";

  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render(const PlacementDocument& doc, RenderStyle style) {
  return style == RenderStyle::ascii ? ascii(doc) : svg(doc);
}

}  // namespace sgpc
