#include <random>

#include "doctest.h"
#include "sgpc/bounds.hpp"
#include "sgpc/reduction.hpp"
#include "sgpc/verifier.hpp"

using namespace sgpc;

namespace {

PositiveCnf example_formula() { return {5, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}}}; }

bool exactly_one(const PositiveCnf& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    int t = 0;
    for (int v : c)
      if (a[static_cast<std::size_t>(v - 1)]) ++t;
    if (t != 1) return false;
  }
  return true;
}

Assignment from_mask(int n, unsigned mask) {
  Assignment a(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
  return a;
}

}  // namespace

TEST_CASE("cnf text format") {
  const auto f = parse_cnf_text("# comment\nvars 5 clauses 2\n1 2 3\n\nc note\n2 4 5\n");
  CHECK(f.num_vars == 5);
  CHECK(f.clauses.size() == 2);
  CHECK(parse_cnf_text(format_cnf(f)) == f);
  CHECK_THROWS_AS(parse_cnf_text("1 2 3\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 1\n1 2\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 1\n1 2 2\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 1\n1 2 4\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 2\n1 2 3\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 1\n1 2 3 4\n"), PreconditionError);
  CHECK_THROWS_AS(parse_cnf_text("vars 3 clauses 1\n1 -2 3\n"), PreconditionError);
}

TEST_CASE("reduction_dims") {
  auto d = reduction_dims(5, 5);
  CHECK(d.h == 33);
  CHECK(d.v == 18);
  CHECK(d.p == 33);
  d = reduction_dims(3, 1);
  CHECK(d.h == 21);
  CHECK(d.v == 6);
  CHECK(d.p == 21);
  d = reduction_dims(3, 9);
  CHECK(d.v == 30);
  CHECK(d.dims_case == DimsCase::v_gt_h_rem);
  CHECK(d.p == 33);
  CHECK(reduction_dims(3, 6).dims_case == DimsCase::equal);
  CHECK(reduction_dims(3, 8).dims_case == DimsCase::v_gt_h_div6);
  CHECK(reduction_dims(3, 8).p == 27);
  CHECK_THROWS_AS(reduction_dims(2, 1), PreconditionError);
  CHECK_THROWS_AS(reduction_dims(3, 0), PreconditionError);
  for (int n = 3; n <= 12; ++n)
    for (int m = 1; m <= 20; ++m) {
      const auto dd = reduction_dims(n, m);
      CHECK(dd.p % 3 == 0);
      CHECK(dd.p >= std::max(dd.h, dd.v));
    }
}

TEST_CASE("target_budget") {
  CHECK(target_budget(33) == 383);
  CHECK(target_budget(21) == 159);
  CHECK(target_budget(21) >= lower_bound(21));
  CHECK(target_budget(33) >= lower_bound(33));
  CHECK_THROWS_AS(target_budget(20), PreconditionError);
}

TEST_CASE("column_quota") {
  auto q = column_quota(4, 33, 4, 5);
  CHECK(q.when_false == 77);
  CHECK(q.when_true == 85);
  q = column_quota(1, 33, 4, 5);
  CHECK(q.when_false == 87);
  CHECK(q.when_true == 95);
  q = column_quota(1, 21, 2, 6);
  CHECK(q.when_false == 49);
  CHECK(q.when_true == 53);
  CHECK(q.allows(53));
  CHECK_FALSE(q.allows(51));
  CHECK_THROWS_AS(column_quota(2, 33, 6, 5), PreconditionError);
}

TEST_CASE("build_instance layout for |U| = 3, |C| = 1") {
  const auto red = build_instance({3, {{1, 2, 3}}});
  CHECK(red.instance.grid.side() == 21);
  CHECK(red.instance.budget == 159);
  REQUIRE(red.layout.bands.size() == 6);
  CHECK(red.layout.bands[0].holes == std::vector<int>{2, 8, 14});
  for (std::size_t i = 1; i < 6; ++i) {
    CHECK(red.layout.bands[i].holes == std::vector<int>{2});
    CHECK_FALSE(red.layout.bands[i].clause.has_value());
  }
}

TEST_CASE("obstacles tile the band rows except at holes") {
  for (const auto& f : {example_formula(), PositiveCnf{3, {{1, 2, 3}}}, PositiveCnf{4, {{1, 2, 4}, {2, 3, 4}}}}) {
    const auto red = build_instance(f);
    const int p = red.layout.dims.p;
    std::size_t rects = 0;
    for (const auto& band : red.layout.bands) {
      CHECK(band.holes.size() == (band.clause ? 3U : 1U));
      rects += band.holes.size() + 1;
      for (int y = 1; y <= p; ++y)
        for (int x = 1; x <= p; ++x) {
          if (y != band.top && y != band.top + 1) continue;
          bool blocked = false;
          for (const auto& o : red.instance.obstacles) blocked = blocked || o.contains({x, y});
          const bool hole = std::find(band.holes.begin(), band.holes.end(), x) != band.holes.end();
          CHECK(blocked == !hole);
        }
    }
    CHECK(red.instance.obstacles.size() == rects);
    // Source rows stay free.
    for (int i = 0; i < p / 3; ++i)
      for (const auto& o : red.instance.obstacles) CHECK_FALSE(o.contains({1, 3 * i + 2}));
  }
}

TEST_CASE("five-variable example: sizes and quota") {
  const auto f = example_formula();
  const auto red = build_instance(f);
  CHECK(red.layout.dims.p == 33);
  CHECK(red.instance.budget == 383);
  CHECK(red.layout.occurrences[3] == 4);
  const auto q = column_quota(4, 33, red.layout.occurrences[3], 5);
  CHECK(q.when_false == 77);
  CHECK(q.when_true == 85);
}

TEST_CASE("five-variable example has no one-in-three assignment and every placement is rejected") {
  const auto f = example_formula();
  const auto red = build_instance(f);
  for (unsigned mask = 0; mask < 32; ++mask) {
    const auto a = from_mask(5, mask);
    CHECK_FALSE(exactly_one(f, a));
    CHECK_FALSE(verify_certificate(red, f, assignment_to_placement(red, a)).has_value());
  }
}

TEST_CASE("a count-correct, connected placement with a bad column is rejected") {
  const auto f = example_formula();
  const auto red = build_instance(f);
  // u1 true serves clauses 1, 2, 4, 5; clause 3 has no true variable, so
  // route its connector through u4's hole instead.
  auto pl = assignment_to_placement(red, from_mask(5, 0b00001));
  std::vector<Source> sources(pl.sources().begin(), pl.sources().end());
  const auto& band = red.layout.bands[2];
  sources.push_back({{hole_x(4), band.top}, Radius::unit()});
  sources.push_back({{hole_x(4), band.top + 1}, Radius::unit()});
  const Placement forged(sources);

  const auto report = verify(red.instance, forged);
  CHECK(report.passed);
  CHECK(static_cast<std::int64_t>(forged.size()) == target_budget(33));
  CHECK(column_counts(5, forged)[3] == 79);
  const auto cert = check_certificate(red, f, forged);
  CHECK_FALSE(cert.assignment.has_value());
  CHECK(cert.reason.find("u4") != std::string::npos);
}

TEST_CASE("forward construction properties") {
  const PositiveCnf f{4, {{1, 2, 3}, {2, 3, 4}}};
  const auto red = build_instance(f);
  const int p = red.layout.dims.p;

  const auto good = from_mask(4, 0b0010);  // u2 only
  REQUIRE(exactly_one(f, good));
  const auto pl = assignment_to_placement(red, good);
  CHECK(static_cast<std::int64_t>(pl.size()) == target_budget(p));
  CHECK(verify(red.instance, pl).passed);
  const auto counts = column_counts(4, pl);
  for (int j = 1; j <= 4; ++j) {
    const auto q = column_quota(j, p, red.layout.occurrences[static_cast<std::size_t>(j - 1)], 2);
    CHECK(counts[static_cast<std::size_t>(j - 1)] == (good[static_cast<std::size_t>(j - 1)] ? q.when_true : q.when_false));
  }

  const auto none = assignment_to_placement(red, from_mask(4, 0));
  CHECK_FALSE(verify(red.instance, none).connected);

  // u1 and u2 true: clause 1 is crossed twice, two sources over budget.
  const auto two = assignment_to_placement(red, from_mask(4, 0b0011));
  CHECK(static_cast<std::int64_t>(two.size()) == target_budget(p) + 2);
  CHECK_FALSE(verify(red.instance, two).within_budget);
  CHECK_FALSE(verify_certificate(red, f, two).has_value());

  // Every column stays within its quota pair here, so the quota check alone
  // would not catch a doubly crossed band once the budget is raised.
  const auto c2 = column_counts(4, two);
  for (int j = 1; j <= 4; ++j)
    CHECK(column_quota(j, p, red.layout.occurrences[static_cast<std::size_t>(j - 1)], 2)
              .allows(c2[static_cast<std::size_t>(j - 1)]));
  auto lenient = red;
  lenient.instance.budget += 2;
  const auto cert = check_certificate(lenient, f, two);
  CHECK_FALSE(cert.assignment.has_value());
  CHECK(cert.reason.find("band") != std::string::npos);

  const auto missing = pl.without({5, 2});
  const auto gap = check_certificate(red, f, missing);
  CHECK_FALSE(gap.assignment.has_value());
  CHECK(gap.reason.find("uncovered") != std::string::npos);
}

TEST_CASE("round trip over random formulas with every variable used") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 12) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 6);
    PositiveCnf f{n, {}};
    for (int i = 0; i < m; ++i) {
      std::array<int, 3> c{};
      do {
        for (auto& v : c) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      } while (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]);
      f.clauses.push_back(c);
    }
    const auto red = build_instance(f);
    if (std::find(red.layout.occurrences.begin(), red.layout.occurrences.end(), 0) != red.layout.occurrences.end())
      continue;
    ++tested;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto a = from_mask(n, mask);
      const auto decoded = verify_certificate(red, f, assignment_to_placement(red, a));
      CHECK(is_one_in_three(f, a) == exactly_one(f, a));
      if (exactly_one(f, a)) {
        REQUIRE(decoded.has_value());
        CHECK(*decoded == a);
      } else {
        CHECK_FALSE(decoded.has_value());
      }
    }
  }
}

TEST_CASE("variables outside every clause decode to false") {
  const PositiveCnf f{4, {{1, 2, 3}}};
  const auto red = build_instance(f);
  const auto decoded = verify_certificate(red, f, assignment_to_placement(red, from_mask(4, 0b1001)));
  REQUIRE(decoded.has_value());
  CHECK(*decoded == from_mask(4, 0b0001));
}

TEST_CASE("certificate checks the layout against the formula") {
  const PositiveCnf f{3, {{1, 2, 3}}};
  const PositiveCnf g{4, {{1, 2, 4}}};
  const auto red = build_instance(f);
  const auto cert = check_certificate(red, g, assignment_to_placement(red, from_mask(3, 1)));
  CHECK_FALSE(cert.assignment.has_value());
}
