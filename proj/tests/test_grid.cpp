#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sgpc/grid.hpp"

using namespace sgpc;

namespace {

std::set<GridPoint> as_set(const std::vector<GridPoint>& v) { return {v.begin(), v.end()}; }

Source unit(int x, int y) { return {{x, y}, Radius::unit()}; }

}  // namespace

TEST_CASE("grid points and boundary classes") {
  const SquareGrid g(4);
  CHECK(g.points().size() == 16);
  CHECK(g.corners() == std::vector<GridPoint>{{1, 1}, {4, 1}, {1, 4}, {4, 4}});
  CHECK(g.boundary().size() == 12);
  CHECK(g.is_side({2, 1}));
  CHECK_FALSE(g.is_side({1, 1}));
  CHECK_FALSE(g.is_boundary({2, 2}));
  CHECK(g.index({1, 2}) == 4);
  CHECK_THROWS_AS(SquareGrid(0), PreconditionError);
}

TEST_CASE("covered_grid_points examples") {
  CHECK(as_set(covered_grid_points(unit(3, 3))) == std::set<GridPoint>{{3, 3}, {2, 3}, {4, 3}, {3, 2}, {3, 4}});
  CHECK(as_set(covered_grid_points(unit(1, 1))) == std::set<GridPoint>{{1, 1}, {2, 1}, {1, 2}});
  const auto sq2 = covered_grid_points({{3, 3}, Radius::sqrt_of(2)});
  CHECK(sq2.size() == 9);
  for (const auto& q : sq2) CHECK(chebyshev(q, {3, 3}) <= 1);
}

TEST_CASE("covered_grid_points matches the brute-force disk for many radii") {
  for (auto [num, den] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {5, 2}, {9, 4}, {4, 1}, {1, 4}, {10, 1}})
    for (int y = 1; y <= 5; ++y)
      for (int x = 1; x <= 5; ++x) {
        const Source s{{x, y}, Radius::sqrt_of(Rational(num, den))};
        CHECK(as_set(covered_grid_points(s)) == oracle::disk({x, y}, num, den));
      }
}

TEST_CASE("covered_in_grid clip counts") {
  const SquareGrid g(4);
  CHECK(covered_in_grid(unit(1, 1), g).size() == 3);
  CHECK(covered_in_grid(unit(2, 1), g).size() == 4);
  CHECK(covered_in_grid(unit(2, 2), g).size() == 5);
}

TEST_CASE("overlap examples") {
  CHECK(as_set(overlap(unit(3, 3), unit(4, 4))) == std::set<GridPoint>{{4, 3}, {3, 4}});
  CHECK(as_set(overlap(unit(3, 3), unit(5, 3))) == std::set<GridPoint>{{4, 3}});
  CHECK_THROWS_AS(overlap(unit(3, 3), unit(3, 3)), PreconditionError);
}

TEST_CASE("communicable examples") {
  const std::vector<Obstacle> none;
  CHECK(communicable(unit(3, 3), unit(4, 4), none));
  CHECK_FALSE(communicable(unit(3, 3), unit(5, 3), none));
  const std::vector<Obstacle> wall{{2, 3, 4, 5}};
  CHECK_FALSE(communicable(unit(3, 3), unit(3, 4), wall));
  // One shared point outside the rectangle keeps the link alive.
  const std::vector<Obstacle> partial{{3, 2, 5, 3}};
  CHECK(communicable(unit(3, 3), unit(4, 4), partial));
  CHECK(communicable(unit(3, 3), unit(4, 4), ObstacleMap(partial)));
}

TEST_CASE("obstacle validation and closed containment") {
  CHECK_THROWS_AS(validate(Obstacle{3, 1, 3, 2}), PreconditionError);
  CHECK_THROWS_AS(validate(Obstacle{1, 1, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(validate(Obstacle{-1, 1, 2, 2}), PreconditionError);
  CHECK_NOTHROW(validate(Obstacle{0, 3, 8, 4}));
  const Obstacle o{2, 3, 4, 5};
  CHECK(o.contains({2, 3}));
  CHECK(o.contains({4, 5}));
  CHECK_FALSE(o.contains({5, 5}));
}

TEST_CASE("communicability agrees with the oracle over random obstacle sets") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Obstacle> obs;
    for (int k = 0; k < 3; ++k) {
      int x1 = coord(rng), y1 = coord(rng);
      obs.push_back({x1, y1, x1 + 1 + coord(rng) % 3, y1 + 1 + coord(rng) % 3});
    }
    const ObstacleMap map(obs);
    for (int y = 2; y <= 6; ++y)
      for (int x = 2; x <= 6; ++x)
        for (auto d : std::vector<GridPoint>{{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 0}}) {
          const GridPoint a{x, y}, b{x + d.x, y + d.y};
          const bool want = oracle::talk(a, b, obs);
          CHECK(communicable(unit(a.x, a.y), unit(b.x, b.y), obs) == want);
          CHECK(communicable(unit(b.x, b.y), unit(a.x, a.y), map) == want);
        }
  }
}

TEST_CASE("comm_graph examples") {
  const auto row = unit_placement({{1, 2}, {2, 2}, {3, 2}});
  const Graph g = comm_graph(row, {});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(is_connected(g));

  CHECK(comm_graph(unit_placement({{1, 1}, {6, 6}}), {}).edge_count() == 0);
  CHECK_FALSE(is_connected(comm_graph(unit_placement({{1, 1}, {6, 6}}), {})));

  const Graph single = comm_graph(unit_placement({{2, 2}}), {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(is_connected(single));
  CHECK(is_connected(Graph(0)));
}

TEST_CASE("comm_graph equals the all-pairs oracle on random placements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<GridPoint> centers;
    while (centers.size() < 12) centers.insert({coord(rng), coord(rng)});
    const std::vector<GridPoint> v(centers.begin(), centers.end());
    const std::vector<Obstacle> obs{{coord(rng) - 1, coord(rng) % 4, 10, 4}};
    const Placement pl = unit_placement(v);
    const Graph g = comm_graph(pl, obs);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const bool want = oracle::talk(v[i], v[j], obs);
        CHECK(g.has_edge(i, j) == want);
        CHECK(g.has_edge(j, i) == want);
        edges += want ? 1 : 0;
      }
    CHECK(g.edge_count() == edges);
    CHECK(is_connected(g) == oracle::connected(v, obs));
  }
}

TEST_CASE("placement rejects duplicate centers and sorts canonically") {
  CHECK_THROWS_AS(unit_placement({{1, 1}, {2, 1}, {1, 1}}), PreconditionError);
  const auto pl = unit_placement({{3, 1}, {1, 2}, {2, 1}});
  CHECK(oracle::centers_of(pl.canonical()) == std::vector<GridPoint>{{2, 1}, {3, 1}, {1, 2}});
  CHECK(pl.without({1, 2}).size() == 2);
  CHECK(pl.without({9, 9}).size() == 3);
}

TEST_CASE("radius tokens") {
  CHECK(parse_radius("1") == Radius::unit());
  CHECK(parse_radius("sqrt2").squared() == Rational(2));
  CHECK(parse_radius("sqrt2.5").squared() == Rational(5, 2));
  CHECK(parse_radius("1.59") == parse_radius("sqrt2.5"));
  CHECK(parse_radius("sqrt(5/2)") == parse_radius("sqrt2.5"));
  CHECK(parse_radius("1.5").squared() == Rational(9, 4));
  CHECK(parse_radius("3/2") == parse_radius("1.5"));
  CHECK_THROWS_AS(parse_radius("0"), PreconditionError);
  CHECK_THROWS_AS(parse_radius("-1"), PreconditionError);
  CHECK_THROWS_AS(parse_radius("wide"), PreconditionError);
  for (const char* t : {"1", "sqrt2", "sqrt2.5", "1.5", "2", "sqrt(1/3)"}) CHECK(parse_radius(t).token() == t);
  CHECK(Radius::sqrt_of(2).floor() == 1);
  CHECK(Radius::of(2).floor() == 2);
  CHECK(Radius::sqrt_of(2).reaches(1, 1));
  CHECK_FALSE(Radius::unit().reaches(1, 1));
}

// Exhaustive 7x7-window properties of unit coverage.
TEST_CASE("plus shape, overlap cardinality and pair union over a 7x7 window") {
  std::vector<GridPoint> window;
  for (int y = 1; y <= 7; ++y)
    for (int x = 1; x <= 7; ++x) window.push_back({x, y});

  for (const auto& c : window)
    if (c.x >= 2 && c.y >= 2) CHECK(as_set(covered_grid_points(unit(c.x, c.y))) == oracle::plus(c));

  const std::vector<Obstacle> none;
  std::size_t best_union = 0;
  for (const auto& a : window)
    for (const auto& b : window) {
      if (a == b) continue;
      const auto ov = overlap(unit(a.x, a.y), unit(b.x, b.y));
      CHECK(ov.size() <= 2);
      CHECK((ov.size() == 2) == (chebyshev(a, b) == 1));
      CHECK(communicable(unit(a.x, a.y), unit(b.x, b.y), none) == communicable(unit(b.x, b.y), unit(a.x, a.y), none));
      if (communicable(unit(a.x, a.y), unit(b.x, b.y), none)) {
        auto u = oracle::plus(a);
        for (const auto& q : oracle::plus(b)) u.insert(q);
        best_union = std::max(best_union, u.size());
      }
    }
  CHECK(best_union == 8);
}

TEST_CASE("a source covering a corner covers at most 4 grid points") {
  for (int p = 3; p <= 6; ++p) {
    const SquareGrid g(p);
    for (const auto& corner : g.corners())
      for (const auto& c : g.points())
        if (oracle::plus(c).count(corner)) CHECK(covered_in_grid(unit(c.x, c.y), g).size() <= 4);
  }
}
