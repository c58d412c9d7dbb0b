#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sgpc/bounds.hpp"
#include "sgpc/exact.hpp"
#include "sgpc/verifier.hpp"

using namespace sgpc;

namespace {

SearchResult solve(int w, int h, Execution exec = Execution::parallel, bool pruning = true) {
  SearchConfig cfg;
  cfg.width = w;
  cfg.height = h;
  cfg.execution = exec;
  cfg.pruning = pruning;
  return optimal_connected_cover(cfg);
}

bool is_cover(const Placement& pl, int w, int h) {
  return oracle::covers(oracle::centers_of(pl), w, h) && oracle::connected(oracle::centers_of(pl));
}

}  // namespace

TEST_CASE("square optima for p = 1..5") {
  const int expected[] = {1, 2, 3, 6, 9};
  for (int p = 1; p <= 5; ++p) {
    const auto r = solve(p, p);
    CHECK(r.exhausted);
    CHECK(r.optimal_count == expected[p - 1]);
    CHECK(r.optimal_count >= lower_bound(p));
    CHECK(static_cast<int>(r.witness.size()) == r.optimal_count);
    CHECK(verify({SquareGrid(p), {}, r.optimal_count}, r.witness).passed);
  }
}

TEST_CASE("6x6 optimum meets the lower bound") {
  SearchConfig cfg;
  cfg.width = cfg.height = 6;
  cfg.budget_cap = 13;
  const auto r = optimal_connected_cover(cfg);
  CHECK(r.exhausted);
  CHECK_FALSE(r.infeasible_within_cap);
  CHECK(r.optimal_count == 13);
  CHECK(r.optimal_count == lower_bound(6));
  CHECK(is_cover(r.witness, 6, 6));
}

TEST_CASE("rectangular optima match brute-force enumeration") {
  for (int h = 1; h <= 4; ++h)
    for (int w = 1; w <= 4; ++w) {
      if (w * h > 12) continue;
      const auto r = solve(w, h);
      CHECK(r.exhausted);
      CHECK(r.optimal_count == oracle::brute_optimum(w, h));
      CHECK(is_cover(r.witness, w, h));
    }
}

TEST_CASE("pruning does not change results up to 4x4") {
  for (int h = 1; h <= 4; ++h)
    for (int w = 1; w <= 4; ++w) {
      const auto pruned = solve(w, h, Execution::serial, true);
      const auto plain = solve(w, h, Execution::serial, false);
      CHECK(pruned.optimal_count == plain.optimal_count);
      CHECK(pruned.witness == plain.witness);
      CHECK(pruned.nodes <= plain.nodes);
    }
}

TEST_CASE("serial and parallel searches return the same canonical witness") {
  for (auto [w, h] : std::vector<std::pair<int, int>>{{4, 4}, {5, 5}, {6, 4}, {5, 6}}) {
    const auto s = solve(w, h, Execution::serial);
    const auto p = solve(w, h, Execution::parallel);
    CHECK(s.optimal_count == p.optimal_count);
    CHECK(s.witness == p.witness);
    CHECK(solve(w, h).witness == p.witness);
  }
}

TEST_CASE("budget cap") {
  SearchConfig cfg;
  cfg.width = cfg.height = 4;
  cfg.budget_cap = 5;
  const auto r = optimal_connected_cover(cfg);
  CHECK(r.exhausted);
  CHECK(r.infeasible_within_cap);
  CHECK(r.witness.empty());
  cfg.budget_cap = 6;
  const auto ok = optimal_connected_cover(cfg);
  CHECK_FALSE(ok.infeasible_within_cap);
  CHECK(ok.optimal_count == 6);
}

TEST_CASE("time limit falls back to the strip cover") {
  SearchConfig cfg;
  cfg.width = cfg.height = 8;
  cfg.time_limit = std::chrono::milliseconds(1);
  const auto r = optimal_connected_cover(cfg);
  CHECK_FALSE(r.exhausted);
  CHECK(is_cover(r.witness, 8, 8));
  CHECK(r.optimal_count == static_cast<int>(r.witness.size()));
}

TEST_CASE("strip cover is a connected cover") {
  for (int h = 1; h <= 12; ++h)
    for (int w = 1; w <= 12; ++w) CHECK(is_cover(strip_cover(w, h), w, h));
  CHECK_THROWS_AS(strip_cover(0, 3), PreconditionError);
}

TEST_CASE("search preconditions") {
  SearchConfig cfg;
  cfg.width = 9;
  cfg.height = 8;
  CHECK_THROWS_AS(optimal_connected_cover(cfg), PreconditionError);
  cfg.width = 0;
  CHECK_THROWS_AS(optimal_connected_cover(cfg), PreconditionError);
}

TEST_CASE("enumerate_coverings on 3x3 with three sources") {
  const auto all = enumerate_coverings(3, 3, 3);
  auto has = [&](std::initializer_list<GridPoint> pts) {
    return std::find(all.begin(), all.end(), unit_placement(pts)) != all.end();
  };
  CHECK(has({{1, 2}, {2, 2}, {3, 2}}));
  CHECK(has({{2, 1}, {2, 2}, {2, 3}}));
  for (const auto& pl : all) CHECK(is_cover(pl, 3, 3));
  CHECK(std::is_sorted(all.begin(), all.end(), [](const Placement& a, const Placement& b) {
    return oracle::centers_of(a) < oracle::centers_of(b);
  }));
}

TEST_CASE("enumerate_coverings on 4x4") {
  EnumerationStats stats;
  CHECK(enumerate_coverings(4, 4, 5, {false, Execution::serial}, &stats).empty());
  CHECK(stats.leaves == 4368);
  CHECK(binomial(16, 5) == 4368);
  CHECK(enumerate_coverings(4, 4, 5).empty());
  CHECK_FALSE(enumerate_coverings(4, 4, 6).empty());
}

TEST_CASE("enumerate_coverings matches brute force with and without pruning") {
  for (auto [w, h, k] : std::vector<std::tuple<int, int, int>>{{3, 3, 3}, {3, 3, 4}, {4, 3, 4}, {4, 4, 6}}) {
    const auto pruned = enumerate_coverings(w, h, k, {true, Execution::serial});
    const auto plain = enumerate_coverings(w, h, k, {false, Execution::serial});
    const auto par = enumerate_coverings(w, h, k, {true, Execution::parallel});
    CHECK(pruned == plain);
    CHECK(par == plain);
    for (const auto& pl : plain) CHECK(is_cover(pl, w, h));
  }
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(enumerate_coverings(8, 8, 20, {true, Execution::serial, 1000}), EnumerationLimitError);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
}
