#include "sgpc/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "sgpc/asgc.hpp"
#include "sgpc/bounds.hpp"
#include "sgpc/document.hpp"
#include "sgpc/exact.hpp"
#include "sgpc/motion.hpp"
#include "sgpc/reduction.hpp"
#include "sgpc/render.hpp"
#include "sgpc/verifier.hpp"

namespace sgpc {

namespace {

// A false answer or a rejection; carries the exit code but prints nothing more.
struct Negative {};

void emit(const std::string& target, const std::string& text, std::ostream& out) {
  if (target.empty()) return;
  if (target == "-") out << text;
  else write_file_atomic(target, text);
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << "passed: " << (r.passed ? "yes" : "no") << "\n";
  out << "fully_covered: " << (r.fully_covered ? "yes" : "no") << "\n";
  out << "connected: " << (r.connected ? "yes" : "no") << "\n";
  out << "sources: " << r.source_count << "\n";
  out << "within_budget: " << (r.within_budget ? "yes" : "no") << "\n";
  if (!r.uncovered.empty()) {
    out << "uncovered:";
    for (const auto& q : r.uncovered) out << ' ' << to_string(q);
    out << "\n";
  }
}

void print_coverage(const CoverageResult& c, std::ostream& out) {
  out << "covered: " << (c.covered ? "yes" : "no") << "\n";
  out << "samples: " << c.sample_count << "\n";
  out << "uncovered_samples: " << c.uncovered_samples.size() << "\n";
  const std::size_t shown = std::min<std::size_t>(c.uncovered_samples.size(), 10);
  for (std::size_t i = 0; i < shown; ++i)
    out << "  (" << c.uncovered_samples[i].x << ", " << c.uncovered_samples[i].y << ")\n";
  if (shown < c.uncovered_samples.size()) out << "  ...\n";
}

PositiveCnf read_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError(path + ": cannot open");
  try {
    return parse_cnf(in);
  } catch (const PreconditionError& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

std::string witness_line(const Placement& pl) {
  std::string s;
  for (const auto& src : pl.sources()) {
    if (!s.empty()) s += ' ';
    s += to_string(src.center);
  }
  return s;
}

Assignment parse_bits(const std::string& bits, int num_vars) {
  if (static_cast<int>(bits.size()) != num_vars)
    throw PreconditionError("--assignment needs exactly " + std::to_string(num_vars) + " digits");
  Assignment a;
  for (char c : bits) {
    if (c != '0' && c != '1') throw PreconditionError("--assignment takes digits 0 and 1");
    a.push_back(c == '1');
  }
  return a;
}

std::string format_bits(const Assignment& a) {
  std::string s;
  for (bool b : a) s += b ? '1' : '0';
  return s;
}

// --- commands ----------------------------------------------------------------

struct PlaceArgs {
  int p = 0;
  std::string algorithm = "asgc";
  std::string out;
  std::optional<int> time_limit_ms;
  bool serial = false;
};

void cmd_place(const PlaceArgs& a, std::ostream& out) {
  PlacementDocument doc;
  if (a.algorithm == "asgc") {
    const AsgcPlan plan = asgc(a.p);
    doc.placement = realize(plan);
    const auto count = static_cast<std::int64_t>(doc.placement.size());
    doc.instance = Instance{SquareGrid(a.p), {}, static_cast<int>(count)};
    doc.annotations = Annotations{"asgc", plan.fraction_case, plan.gadgets, plan.connectors, plan.deletions};
    doc.report = verify(*doc.instance, doc.placement);
    out << "sources: " << count << "\n";
    out << "predicted: " << predicted_count(a.p) << "\n";
    out << "lower_bound: " << lower_bound(a.p) << "\n";
    out << "ratio: " << Rational(count, lower_bound(a.p)).to_string() << " (bound " << ratio_bound(a.p).to_string()
        << ")\n";
  } else if (a.algorithm == "exact") {
    SearchConfig cfg;
    cfg.width = cfg.height = a.p;
    if (a.time_limit_ms) cfg.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
    cfg.execution = a.serial ? Execution::serial : Execution::parallel;
    const SearchResult r = optimal_connected_cover(cfg);
    doc.placement = r.witness;
    doc.instance = Instance{SquareGrid(a.p), {}, r.optimal_count};
    doc.annotations = Annotations{"exact", std::nullopt, {}, {}, {}};
    doc.report = verify(*doc.instance, doc.placement);
    doc.search = SearchSummary{r.exhausted, r.optimal_count};
    out << "sources: " << r.optimal_count << "\n";
    out << "exhausted: " << (r.exhausted ? "true" : "false") << "\n";
    out << "lower_bound: " << lower_bound(a.p) << "\n";
  } else {
    throw PreconditionError("unknown algorithm '" + a.algorithm + "'");
  }
  if (!doc.report->passed) throw std::logic_error("generated placement failed verification");
  emit(a.out, serialize(doc), out);
}

struct VerifyArgs {
  std::string instance, placement, out;
};

void cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto inst_doc = read_document(a.instance);
  if (!inst_doc.instance) throw ParseError(a.instance + ": document has no instance");
  auto doc = read_document(a.placement);
  doc.instance = inst_doc.instance;
  doc.report = verify(*doc.instance, doc.placement);
  print_report(*doc.report, out);
  emit(a.out, serialize(doc), out);
  if (!doc.report->passed) throw Negative{};
}

void cmd_bounds(std::int64_t p, std::ostream& out) {
  out << "lower_bound: " << lower_bound(p) << "\n";
  if (p > 5) {
    out << "asgc_count: " << predicted_count(p) << "\n";
    out << "ratio_bound: " << ratio_bound(p).to_string() << "\n";
  }
}

struct ReduceArgs {
  std::string cnf, assignment, out;
};

void cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const PositiveCnf cnf = read_cnf(a.cnf);
  const Reduction red = build_instance(cnf);
  PlacementDocument doc;
  doc.instance = red.instance;
  out << "vars: " << cnf.num_vars << "\n";
  out << "clauses: " << cnf.clauses.size() << "\n";
  out << "p: " << red.layout.dims.p << "\n";
  out << "budget: " << red.instance.budget << "\n";
  out << "bands: " << red.layout.bands.size() << "\n";
  out << "obstacles: " << red.instance.obstacles.size() << "\n";
  bool accepted = true;
  if (!a.assignment.empty()) {
    const Assignment asg = parse_bits(a.assignment, cnf.num_vars);
    doc.placement = assignment_to_placement(red, asg);
    doc.annotations = Annotations{"reduction", std::nullopt, {}, {}, {}};
    doc.report = verify(red.instance, doc.placement);
    const auto cert = check_certificate(red, cnf, doc.placement);
    accepted = cert.assignment.has_value();
    out << "one_in_three: " << (is_one_in_three(cnf, asg) ? "yes" : "no") << "\n";
    out << "certificate: " << (accepted ? "accepted" : "rejected: " + cert.reason) << "\n";
  }
  emit(a.out, serialize(doc), out);
  if (!accepted) throw Negative{};
}

struct CertifyArgs {
  std::string instance, placement, cnf;
};

void cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const PositiveCnf cnf = read_cnf(a.cnf);
  const Reduction red = build_instance(cnf);
  const auto inst_doc = read_document(a.instance);
  if (!inst_doc.instance) throw ParseError(a.instance + ": document has no instance");
  const auto pl_doc = read_document(a.placement);
  if (*inst_doc.instance != red.instance) {
    out << "rejected: instance does not match the reduction of the formula\n";
    throw Negative{};
  }
  const auto cert = check_certificate(red, cnf, pl_doc.placement);
  if (!cert.assignment) {
    out << "rejected: " << cert.reason << "\n";
    throw Negative{};
  }
  out << "accepted\n";
  out << "assignment: " << format_bits(*cert.assignment) << "\n";
}

struct CoverageArgs {
  int p = 0;
  std::string placement;
  std::string radius;
  std::string path = "NSSNEWWE";
  std::optional<int> steps;
  std::string resolution = "0.05";
  std::optional<int> side;
  std::string out;
  bool serial = false;
};

void cmd_coverage(const CoverageArgs& a, bool sweep, std::ostream& out) {
  Placement pl;
  int p = a.p;
  if (!a.placement.empty()) {
    const auto doc = read_document(a.placement);
    pl = doc.placement;
    if (p == 0 && doc.instance) p = doc.instance->grid.side();
  } else {
    if (p == 0) throw PreconditionError("either --p or --placement is required");
    pl = realize(asgc(p));
  }
  if (p < 2 && !a.side) throw PreconditionError("grid side must be at least 2");

  CoverageDump dump;
  dump.mode = sweep ? "sweep" : "area";
  dump.radius = parse_radius(a.radius.empty() ? (sweep ? "1" : "sqrt2.5") : a.radius);
  if (sweep) {
    dump.path = parse_path(a.path);
    if (a.steps) {
      if (*a.steps < 0 || *a.steps > static_cast<int>(dump.path.size()))
        throw PreconditionError("--steps must lie in 0.." + std::to_string(dump.path.size()));
      dump.path.resize(static_cast<std::size_t>(*a.steps));
    }
  }
  try {
    dump.resolution = parse_rational(a.resolution);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError("invalid --resolution '" + a.resolution + "'");
  }
  dump.origin = {1, 1};
  dump.width = dump.height = a.side ? *a.side : p - 1;
  const AreaSpec area{dump.origin, dump.width, dump.height};
  const Execution exec = a.serial ? Execution::serial : Execution::parallel;

  const CoverageResult c = sweep ? swept_area_covered(pl, dump.radius, dump.path, area, dump.resolution, exec)
                                 : static_area_covered(pl, dump.radius, area, dump.resolution, exec);
  dump.covered = c.covered;
  dump.sample_count = c.sample_count;
  dump.uncovered_samples = c.uncovered_samples;
  print_coverage(c, out);

  PlacementDocument doc;
  doc.instance = Instance{SquareGrid(std::max(p, 1)), {}, static_cast<int>(std::max<std::size_t>(pl.size(), 1))};
  doc.placement = pl;
  doc.coverage = dump;
  emit(a.out, serialize(doc), out);
  if (!c.covered) throw Negative{};
}

struct OptimalArgs {
  int width = 0, height = 0;
  std::optional<int> budget;
  std::optional<int> time_limit_ms;
  bool serial = false;
  bool no_pruning = false;
  std::string out;
};

void cmd_optimal(const OptimalArgs& a, std::ostream& out) {
  SearchConfig cfg;
  cfg.width = a.width;
  cfg.height = a.height;
  cfg.budget_cap = a.budget;
  if (a.time_limit_ms) cfg.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
  cfg.pruning = !a.no_pruning;
  cfg.execution = a.serial ? Execution::serial : Execution::parallel;
  const SearchResult r = optimal_connected_cover(cfg);
  if (r.infeasible_within_cap) {
    out << "infeasible: no connected cover with at most " << *a.budget << " sources\n";
    out << "exhausted: true\n";
    throw Negative{};
  }
  out << "optimal: " << r.optimal_count << "\n";
  out << "exhausted: " << (r.exhausted ? "true" : "false") << "\n";
  out << "witness: " << witness_line(r.witness) << "\n";
  if (!a.out.empty()) {
    PlacementDocument doc;
    doc.placement = r.witness;
    doc.annotations = Annotations{"exact", std::nullopt, {}, {}, {}};
    doc.search = SearchSummary{r.exhausted, r.optimal_count};
    emit(a.out, serialize(doc), out);
  }
}

struct RenderArgs {
  std::string placement, style = "ascii", out;
};

void cmd_render(const RenderArgs& a, std::ostream& out) {
  const auto style = parse_render_style(a.style);
  const auto doc = read_document(a.placement);
  const std::string text = render(doc, style);
  if (a.out.empty()) out << text;
  else emit(a.out, text, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected unit-radius coverage of square grids", "sgpc"};
  app.require_subcommand(1);

  PlaceArgs place;
  auto* sc_place = app.add_subcommand("place", "Place sources on a p x p grid");
  sc_place->add_option("--p", place.p, "Grid side")->required();
  sc_place->add_option("--algorithm", place.algorithm, "asgc or exact")->check(CLI::IsMember({"asgc", "exact"}));
  sc_place->add_option("--out", place.out, "Write the document here ('-' for stdout)");
  sc_place->add_option("--time-limit", place.time_limit_ms, "Exact search limit in milliseconds");
  sc_place->add_flag("--serial", place.serial, "Single-threaded exact search");

  VerifyArgs ver;
  auto* sc_verify = app.add_subcommand("verify", "Check coverage, connectivity and budget");
  sc_verify->add_option("--instance", ver.instance, "Document holding the instance")->required();
  sc_verify->add_option("--placement", ver.placement, "Document holding the placement")->required();
  sc_verify->add_option("--out", ver.out, "Write the placement with its report");

  std::int64_t bounds_p = 0;
  auto* sc_bounds = app.add_subcommand("bounds", "Lower bound and ratio guarantee");
  sc_bounds->add_option("--p", bounds_p, "Grid side")->required();

  ReduceArgs red;
  auto* sc_reduce = app.add_subcommand("reduce", "Build the coverage instance of a positive 1-in-3 formula");
  sc_reduce->add_option("--cnf", red.cnf, "Formula file")->required();
  sc_reduce->add_option("--assignment", red.assignment, "Bits u1..un; adds the induced placement");
  sc_reduce->add_option("--out", red.out, "Write the document here ('-' for stdout)");

  CertifyArgs cert;
  auto* sc_certify = app.add_subcommand("certify", "Decode a placement of a reduced instance");
  sc_certify->add_option("--instance", cert.instance, "Document holding the instance")->required();
  sc_certify->add_option("--placement", cert.placement, "Document holding the placement")->required();
  sc_certify->add_option("--cnf", cert.cnf, "Formula file")->required();

  CoverageArgs sweep, area;
  auto add_coverage = [](CLI::App* sc, CoverageArgs& c, bool with_path) {
    sc->add_option("--p", c.p, "Grid side; the ASGC placement is used unless --placement is given");
    sc->add_option("--placement", c.placement, "Document holding the placement");
    sc->add_option("--radius", c.radius, "Radius token (1, 1.5, sqrt2, sqrt2.5, 1.59)");
    if (with_path) {
      sc->add_option("--path", c.path, "Moves as letters N S E W")->capture_default_str();
      sc->add_option("--steps", c.steps, "Use only the first K moves");
    }
    sc->add_option("--resolution", c.resolution, "Sample spacing")->capture_default_str();
    sc->add_option("--side", c.side, "Area size (default p - 1)");
    sc->add_option("--out", c.out, "Write the document with uncovered samples");
    sc->add_flag("--serial", c.serial, "Single-threaded sampling");
  };
  auto* sc_sweep = app.add_subcommand("sweep", "Area coverage under synchronized movement (radius 1 by default)");
  add_coverage(sc_sweep, sweep, true);
  auto* sc_area = app.add_subcommand("area", "Static area coverage (radius sqrt2.5 by default)");
  add_coverage(sc_area, area, false);

  OptimalArgs opt;
  auto* sc_optimal = app.add_subcommand("optimal", "Minimum connected cover of a small block");
  sc_optimal->add_option("--width", opt.width, "Block width")->required();
  sc_optimal->add_option("--height", opt.height, "Block height")->required();
  sc_optimal->add_option("--budget", opt.budget, "Largest source count to try");
  sc_optimal->add_option("--time-limit", opt.time_limit_ms, "Limit in milliseconds");
  sc_optimal->add_flag("--serial", opt.serial, "Single-threaded search");
  sc_optimal->add_flag("--no-pruning", opt.no_pruning, "Plain enumeration");
  sc_optimal->add_option("--out", opt.out, "Write the witness document");

  RenderArgs rend;
  auto* sc_render = app.add_subcommand("render", "Draw a document");
  sc_render->add_option("--placement", rend.placement, "Document to draw")->required();
  sc_render->add_option("--style", rend.style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  sc_render->add_option("--out", rend.out, "Output file (default stdout)");

  std::vector<const char*> argv{"sgpc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sc_place) cmd_place(place, out);
    else if (*sc_verify) cmd_verify(ver, out);
    else if (*sc_bounds) cmd_bounds(bounds_p, out);
    else if (*sc_reduce) cmd_reduce(red, out);
    else if (*sc_certify) cmd_certify(cert, out);
    else if (*sc_sweep) cmd_coverage(sweep, true, out);
    else if (*sc_area) cmd_coverage(area, false, out);
    else if (*sc_optimal) cmd_optimal(opt, out);
    else if (*sc_render) cmd_render(rend, out);
  } catch (const Negative&) {
    return kExitFalse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFalse;
  }
  return kExitOk;
}

}  // namespace sgpc
