#include "sgpc/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "sgpc/verifier.hpp"

namespace sgpc {

void validate(const PositiveCnf& cnf) {
  if (cnf.num_vars < 1) throw PreconditionError("formula needs at least one variable");
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto& c = cnf.clauses[i];
    for (int v : c)
      if (v < 1 || v > cnf.num_vars)
        throw PreconditionError("clause " + std::to_string(i + 1) + " uses unknown variable " + std::to_string(v));
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw PreconditionError("clause " + std::to_string(i + 1) + " repeats a variable");
  }
}

PositiveCnf parse_cnf(std::istream& in) {
  PositiveCnf cnf;
  std::string line;
  int line_no = 0;
  bool header = false;
  std::size_t expected = 0;
  auto fail = [&](const std::string& what) {
    throw PreconditionError("cnf line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line.compare(first, 2, "c ") == 0) continue;
    std::istringstream ls(line);
    if (!header) {
      std::string vars_kw, clauses_kw;
      long long n = 0, m = 0;
      if (!(ls >> vars_kw >> n >> clauses_kw >> m) || vars_kw != "vars" || clauses_kw != "clauses")
        fail("expected header 'vars N clauses M'");
      if (n < 1 || m < 0 || n > 1'000'000 || m > 1'000'000) fail("header counts out of range");
      cnf.num_vars = static_cast<int>(n);
      expected = static_cast<std::size_t>(m);
      header = true;
    } else {
      std::array<int, 3> c{};
      if (!(ls >> c[0] >> c[1] >> c[2])) fail("expected three variable indices");
      std::string extra;
      if (ls >> extra) fail("trailing token '" + extra + "'");
      for (int v : c)
        if (v < 1) fail("variables are positive 1-based indices");
      cnf.clauses.push_back(c);
    }
  }
  if (!header) throw PreconditionError("cnf: missing header 'vars N clauses M'");
  if (cnf.clauses.size() != expected)
    throw PreconditionError("cnf: header announces " + std::to_string(expected) + " clauses, found " +
                            std::to_string(cnf.clauses.size()));
  validate(cnf);
  return cnf;
}

PositiveCnf parse_cnf_text(const std::string& text) {
  std::istringstream in(text);
  return parse_cnf(in);
}

std::string format_cnf(const PositiveCnf& cnf) {
  std::ostringstream out;
  out << "vars " << cnf.num_vars << " clauses " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) out << c[0] << " " << c[1] << " " << c[2] << "\n";
  return out.str();
}

bool is_one_in_three(const PositiveCnf& cnf, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(cnf.num_vars)) return false;
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::array<int, 3>& c) {
    int t = 0;
    for (int v : c) t += a[static_cast<std::size_t>(v - 1)] ? 1 : 0;
    return t == 1;
  });
}

std::string to_string(DimsCase c) {
  switch (c) {
    case DimsCase::equal: return "equal";
    case DimsCase::h_gt_v: return "h_gt_v";
    case DimsCase::v_gt_h_div6: return "v_gt_h_div6";
    case DimsCase::v_gt_h_rem: return "v_gt_h_rem";
  }
  return "?";
}

LayoutDims reduction_dims(int num_vars, int num_clauses) {
  if (num_vars < 3) throw PreconditionError("reduction requires at least 3 variables");
  if (num_clauses < 1) throw PreconditionError("reduction requires at least 1 clause");
  LayoutDims d;
  d.h = 3 * (1 + 2 * num_vars);
  d.v = 3 * (1 + num_clauses);
  if (d.h == d.v) {
    d.p = d.h;
    d.dims_case = DimsCase::equal;
  } else if (d.h > d.v) {
    d.p = d.h;
    d.dims_case = DimsCase::h_gt_v;
  } else if ((d.v - d.h) % 6 == 0) {
    d.p = d.v;
    d.dims_case = DimsCase::v_gt_h_div6;
  } else {
    d.p = d.v + 3;
    d.dims_case = DimsCase::v_gt_h_rem;
  }
  return d;
}

std::int64_t target_budget(std::int64_t p) {
  if (p < 3 || p % 3 != 0) throw PreconditionError("target_budget requires p to be a positive multiple of 3");
  return p * p / 3 + 2 * (p / 3 - 1);
}

ColumnQuota column_quota(int column, int p, int occurrences, int num_clauses) {
  if (p < 3 || p % 3 != 0) throw PreconditionError("column_quota requires p to be a positive multiple of 3");
  if (column < 1) throw PreconditionError("column index is 1-based");
  if (occurrences < 0 || occurrences > num_clauses) throw PreconditionError("occurrence count out of range");
  if (num_clauses > p / 3 - 1) throw PreconditionError("more clauses than obstacle bands");
  ColumnQuota q;
  q.column = column;
  q.when_false = 7LL * p / 3;
  q.when_true = q.when_false + 2LL * occurrences;
  if (column == 1) {
    const std::int64_t padding = 2LL * ((p / 3 - 1) - num_clauses);
    q.when_false += padding;
    q.when_true += padding;
  }
  return q;
}

Reduction build_instance(const PositiveCnf& cnf) {
  validate(cnf);
  const LayoutDims dims = reduction_dims(cnf.num_vars, static_cast<int>(cnf.clauses.size()));
  const int p = dims.p;

  Reduction red;
  red.layout.dims = dims;
  red.layout.occurrences.assign(static_cast<std::size_t>(cnf.num_vars), 0);
  for (const auto& c : cnf.clauses)
    for (int v : c) ++red.layout.occurrences[static_cast<std::size_t>(v - 1)];

  red.instance.grid = SquareGrid(p);
  red.instance.budget = static_cast<int>(target_budget(p));

  const int band_count = p / 3 - 1;
  for (int i = 0; i < band_count; ++i) {
    Band band;
    band.top = 3 * i + 3;
    if (i < static_cast<int>(cnf.clauses.size())) {
      band.clause = i;
      band.variables.assign(cnf.clauses[static_cast<std::size_t>(i)].begin(),
                            cnf.clauses[static_cast<std::size_t>(i)].end());
      std::sort(band.variables.begin(), band.variables.end());
      for (int v : band.variables) band.holes.push_back(hole_x(v));
    } else {
      band.holes.push_back(2);
    }

    // Cover every non-hole column of both band rows with one rectangle per run.
    int run_start = 1;
    auto close_run = [&](int run_end) {
      if (run_end < run_start) return;
      Obstacle o{run_start, band.top, run_end, band.top + 1};
      if (run_start == run_end) {
        if (run_start != 1) throw std::logic_error("single-column obstacle run away from the left edge");
        o.x1 = 0;
      }
      red.instance.obstacles.push_back(o);
    };
    for (int hx : band.holes) {
      close_run(hx - 1);
      run_start = hx + 1;
    }
    close_run(p);
    red.layout.bands.push_back(std::move(band));
  }
  return red;
}

Placement assignment_to_placement(const Reduction& red, const Assignment& a) {
  const int p = red.layout.dims.p;
  if (a.size() != red.layout.occurrences.size())
    throw PreconditionError("assignment size differs from the variable count");

  std::vector<GridPoint> centers;
  centers.reserve(static_cast<std::size_t>(target_budget(p)));
  for (int i = 0; i < p / 3; ++i)
    for (int x = 1; x <= p; ++x) centers.push_back({x, 3 * i + 2});

  auto cross = [&](int x, const Band& band) {
    centers.push_back({x, band.top});
    centers.push_back({x, band.top + 1});
  };
  for (const auto& band : red.layout.bands) {
    if (!band.clause) {
      cross(band.holes.front(), band);
      continue;
    }
    // Every hole of every true variable, so a clause with two true variables
    // is crossed twice and one with none is not crossed at all.
    for (int v : band.variables)
      if (a[static_cast<std::size_t>(v - 1)]) cross(hole_x(v), band);
  }
  std::sort(centers.begin(), centers.end());
  return unit_placement(centers);
}

std::vector<std::int64_t> column_counts(int num_vars, const Placement& pl) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(num_vars), 0);
  for (const auto& s : pl.sources()) {
    // A boundary column x = 6k + 1 belongs to variables k and k + 1.
    const int x = s.center.x;
    for (int j = std::max(1, (x - 1) / 6); j <= std::min(num_vars, (x + 5) / 6); ++j) {
      const auto [lo, hi] = column_span(j);
      if (lo <= x && x <= hi) ++counts[static_cast<std::size_t>(j - 1)];
    }
  }
  return counts;
}

CertificateResult check_certificate(const Reduction& red, const PositiveCnf& cnf, const Placement& pl) {
  auto reject = [](std::string why) { return CertificateResult{std::nullopt, std::move(why)}; };

  const auto& layout = red.layout;
  const int m = static_cast<int>(cnf.clauses.size());
  if (layout.occurrences.size() != static_cast<std::size_t>(cnf.num_vars))
    return reject("layout does not belong to this formula");
  for (int i = 0; i < m; ++i) {
    auto vars = std::vector<int>(cnf.clauses[static_cast<std::size_t>(i)].begin(),
                                 cnf.clauses[static_cast<std::size_t>(i)].end());
    std::sort(vars.begin(), vars.end());
    if (static_cast<std::size_t>(i) >= layout.bands.size() || layout.bands[static_cast<std::size_t>(i)].variables != vars)
      return reject("layout does not belong to this formula");
  }

  const VerificationReport report = verify(red.instance, pl);
  if (!report.fully_covered)
    return reject(std::to_string(report.uncovered.size()) + " grid points uncovered, first at " +
                  to_string(report.uncovered.front()));
  if (!report.connected) return reject("sources are not all communicable");
  if (!report.within_budget)
    return reject(std::to_string(report.source_count) + " sources exceed the budget of " +
                  std::to_string(red.instance.budget));

  const int p = layout.dims.p;
  const auto counts = column_counts(cnf.num_vars, pl);
  for (int j = 1; j <= cnf.num_vars; ++j) {
    const auto q = column_quota(j, p, layout.occurrences[static_cast<std::size_t>(j - 1)], m);
    const auto have = counts[static_cast<std::size_t>(j - 1)];
    if (!q.allows(have))
      return reject("column u" + std::to_string(j) + " holds " + std::to_string(have) + " sources, expected " +
                    std::to_string(q.when_false) + " or " + std::to_string(q.when_true));
  }

  std::unordered_set<std::uint64_t> centers;
  centers.reserve(pl.size() * 2);
  auto key = [](int x, int y) { return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(y); };
  for (const auto& s : pl.sources()) centers.insert(key(s.center.x, s.center.y));

  std::vector<int> used(static_cast<std::size_t>(cnf.num_vars), 0);
  for (const auto& band : layout.bands) {
    if (!band.clause) continue;
    int crossings = 0;
    for (std::size_t h = 0; h < band.holes.size(); ++h) {
      const int hx = band.holes[h];
      if (centers.contains(key(hx, band.top)) && centers.contains(key(hx, band.top + 1))) {
        ++crossings;
        ++used[static_cast<std::size_t>(band.variables[h] - 1)];
      }
    }
    if (crossings != 1)
      return reject("clause band " + std::to_string(*band.clause + 1) + " is crossed through " +
                    std::to_string(crossings) + " holes");
  }

  Assignment a(static_cast<std::size_t>(cnf.num_vars), false);
  for (int j = 1; j <= cnf.num_vars; ++j) {
    const int b = layout.occurrences[static_cast<std::size_t>(j - 1)];
    const int u = used[static_cast<std::size_t>(j - 1)];
    if (u != 0 && u != b)
      return reject("variable u" + std::to_string(j) + " is used in " + std::to_string(u) + " of its " +
                    std::to_string(b) + " clause holes");
    a[static_cast<std::size_t>(j - 1)] = b > 0 && u == b;
  }
  if (!is_one_in_three(cnf, a)) return reject("decoded assignment is not one-in-three");
  return {a, {}};
}

std::optional<Assignment> verify_certificate(const Reduction& red, const PositiveCnf& cnf, const Placement& pl) {
  return check_certificate(red, cnf, pl).assignment;
}

}  // namespace sgpc
