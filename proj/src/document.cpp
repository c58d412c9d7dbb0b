#include "sgpc/document.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

namespace sgpc {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered point_json(const GridPoint& q) { return ordered{{"x", q.x}, {"y", q.y}}; }

ordered points_json(const std::vector<GridPoint>& pts) {
  ordered a = ordered::array();
  for (const auto& q : pts) a.push_back(point_json(q));
  return a;
}

ordered instance_json(const Instance& inst) {
  ordered obstacles = ordered::array();
  for (const auto& o : inst.obstacles) obstacles.push_back({{"x1", o.x1}, {"y1", o.y1}, {"x2", o.x2}, {"y2", o.y2}});
  return ordered{{"p", inst.grid.side()}, {"budget", inst.budget}, {"obstacles", obstacles}};
}

ordered annotations_json(const Annotations& a) {
  ordered out;
  out["algorithm"] = a.algorithm;
  if (a.fraction_case) out["fraction_case"] = *a.fraction_case;
  ordered gadgets = ordered::array();
  for (const auto& g : a.gadgets)
    gadgets.push_back({{"kind", to_string(g.kind)},
                       {"x", g.origin.x},
                       {"y", g.origin.y},
                       {"orientation", to_string(g.orientation)}});
  out["gadgets"] = gadgets;
  out["connectors"] = points_json(a.connectors);
  out["deletions"] = points_json(a.deletions);
  return out;
}

ordered report_json(const VerificationReport& r) {
  return ordered{{"passed", r.passed},
                 {"fully_covered", r.fully_covered},
                 {"connected", r.connected},
                 {"within_budget", r.within_budget},
                 {"source_count", r.source_count},
                 {"uncovered", points_json(r.uncovered)}};
}

ordered coverage_json(const CoverageDump& c) {
  ordered samples = ordered::array();
  for (const auto& s : c.uncovered_samples) samples.push_back({s.x, s.y});
  return ordered{{"mode", c.mode},
                 {"radius", c.radius.token()},
                 {"path", format_path(c.path)},
                 {"resolution", c.resolution.to_decimal_string()},
                 {"area", {{"x", c.origin.x}, {"y", c.origin.y}, {"width", c.width}, {"height", c.height}}},
                 {"covered", c.covered},
                 {"sample_count", c.sample_count},
                 {"uncovered_samples", samples}};
}

// --- parsing ---------------------------------------------------------------

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  try {
    if constexpr (std::is_same_v<T, int> || std::is_same_v<T, std::int64_t> || std::is_same_v<T, std::uint64_t> ||
                  std::is_same_v<T, std::size_t>) {
      if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) fail(where + "." + key, "expected a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) fail(where + "." + key, "expected a string");
    }
    return v.get<T>();
  } catch (const json::exception& e) {
    fail(where + "." + key, e.what());
  }
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) fail(where + "." + key, "expected an array");
  return v;
}

std::vector<GridPoint> parse_points(const json& arr, const std::string& where) {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    out.push_back({get<int>(arr[i], "x", at), get<int>(arr[i], "y", at)});
  }
  return out;
}

template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Instance parse_instance(const json& j) {
  const std::string where = "instance";
  Instance inst;
  const int p = get<int>(j, "p", where);
  inst.grid = guarded(where + ".p", [&] { return SquareGrid(p); });
  inst.budget = get<int>(j, "budget", where);
  const json& obs = array_field(j, "obstacles", where);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const std::string at = where + ".obstacles[" + std::to_string(i) + "]";
    inst.obstacles.push_back(
        {get<int>(obs[i], "x1", at), get<int>(obs[i], "y1", at), get<int>(obs[i], "x2", at), get<int>(obs[i], "y2", at)});
  }
  guarded(where, [&] { validate(inst); });
  return inst;
}

Placement parse_sources(const json& arr) {
  std::vector<Source> sources;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "sources[" + std::to_string(i) + "]";
    const GridPoint c{get<int>(arr[i], "x", at), get<int>(arr[i], "y", at)};
    const auto token = get<std::string>(arr[i], "r", at);
    sources.push_back({c, guarded(at + ".r", [&] { return parse_radius(token); })});
  }
  return guarded("sources", [&] { return Placement(std::move(sources)); });
}

Annotations parse_annotations(const json& j) {
  const std::string where = "annotations";
  Annotations a;
  a.algorithm = get<std::string>(j, "algorithm", where);
  if (j.contains("fraction_case")) a.fraction_case = get<int>(j, "fraction_case", where);
  const json& gadgets = array_field(j, "gadgets", where);
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    const std::string at = where + ".gadgets[" + std::to_string(i) + "]";
    GadgetPlacement g;
    const auto kind = get<std::string>(gadgets[i], "kind", at);
    const auto orientation = get<std::string>(gadgets[i], "orientation", at);
    g.kind = guarded(at + ".kind", [&] { return parse_gadget_kind(kind); });
    g.orientation = guarded(at + ".orientation", [&] { return parse_orientation(orientation); });
    g.origin = {get<int>(gadgets[i], "x", at), get<int>(gadgets[i], "y", at)};
    a.gadgets.push_back(g);
  }
  a.connectors = parse_points(array_field(j, "connectors", where), where + ".connectors");
  a.deletions = parse_points(array_field(j, "deletions", where), where + ".deletions");
  return a;
}

VerificationReport parse_report(const json& j) {
  const std::string where = "report";
  VerificationReport r;
  r.passed = get<bool>(j, "passed", where);
  r.fully_covered = get<bool>(j, "fully_covered", where);
  r.connected = get<bool>(j, "connected", where);
  r.within_budget = get<bool>(j, "within_budget", where);
  r.source_count = get<std::size_t>(j, "source_count", where);
  r.uncovered = parse_points(array_field(j, "uncovered", where), where + ".uncovered");
  return r;
}

SearchSummary parse_search(const json& j) {
  const std::string where = "search";
  return {get<bool>(j, "exhausted", where), get<int>(j, "optimal_count", where)};
}

CoverageDump parse_coverage(const json& j) {
  const std::string where = "coverage";
  CoverageDump c;
  c.mode = get<std::string>(j, "mode", where);
  if (c.mode != "sweep" && c.mode != "area") fail(where + ".mode", "expected 'sweep' or 'area'");
  const auto radius = get<std::string>(j, "radius", where);
  c.radius = guarded(where + ".radius", [&] { return parse_radius(radius); });
  const auto path = get<std::string>(j, "path", where);
  c.path = guarded(where + ".path", [&] { return parse_path(path); });
  const auto res = get<std::string>(j, "resolution", where);
  c.resolution = guarded(where + ".resolution", [&] { return parse_rational(res); });
  const json& area = field(j, "area", where);
  c.origin = {get<int>(area, "x", where + ".area"), get<int>(area, "y", where + ".area")};
  c.width = get<int>(area, "width", where + ".area");
  c.height = get<int>(area, "height", where + ".area");
  c.covered = get<bool>(j, "covered", where);
  c.sample_count = get<std::size_t>(j, "sample_count", where);
  const json& samples = array_field(j, "uncovered_samples", where);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const json& s = samples[i];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
      fail(where + ".uncovered_samples[" + std::to_string(i) + "]", "expected [x, y]");
    c.uncovered_samples.push_back({s[0].get<double>(), s[1].get<double>()});
  }
  return c;
}

}  // namespace

std::string format_path(const MovePath& path) {
  std::string out;
  for (auto d : path) out += to_string(d);
  return out;
}

MovePath parse_path(std::string_view text) {
  MovePath out;
  for (char c : text) {
    switch (c) {
      case 'N': out.push_back(Direction::north); break;
      case 'S': out.push_back(Direction::south); break;
      case 'E': out.push_back(Direction::east); break;
      case 'W': out.push_back(Direction::west); break;
      default: throw PreconditionError(std::string("invalid direction '") + c + "'");
    }
  }
  return out;
}

std::string serialize(const PlacementDocument& doc) {
  ordered root;
  root["version"] = doc.version;
  if (doc.instance) root["instance"] = instance_json(*doc.instance);
  ordered sources = ordered::array();
  for (const auto& s : doc.placement.sources())
    sources.push_back({{"x", s.center.x}, {"y", s.center.y}, {"r", s.radius.token()}});
  root["sources"] = sources;
  if (doc.annotations) root["annotations"] = annotations_json(*doc.annotations);
  if (doc.report) root["report"] = report_json(*doc.report);
  if (doc.search)
    root["search"] = {{"exhausted", doc.search->exhausted},
                      {"optimal_count", doc.search->optimal_count}};
  if (doc.coverage) root["coverage"] = coverage_json(*doc.coverage);
  return root.dump(2) + "\n";
}

PlacementDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("document: expected a JSON object");

  PlacementDocument doc;
  doc.version = get<int>(root, "version", "document");
  if (doc.version != kDocumentVersion)
    throw ParseError("document.version: unsupported version " + std::to_string(doc.version));
  if (root.contains("instance")) doc.instance = parse_instance(root["instance"]);
  doc.placement = parse_sources(array_field(root, "sources", "document"));
  if (root.contains("annotations")) doc.annotations = parse_annotations(root["annotations"]);
  if (root.contains("report")) doc.report = parse_report(root["report"]);
  if (root.contains("search")) doc.search = parse_search(root["search"]);
  if (root.contains("coverage")) doc.coverage = parse_coverage(root["coverage"]);
  return doc;
}

PlacementDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot create");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error(tmp.string() + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error(path.string() + ": rename failed");
  }
}

}  // namespace sgpc
