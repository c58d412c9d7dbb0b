#include "sgpc/verifier.hpp"

namespace sgpc {

std::vector<GridPoint> uncovered(const Instance& inst, const Placement& pl) {
  const SquareGrid& g = inst.grid;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(g.point_count()), 0);
  for (const auto& s : pl.sources())
    for (const auto& q : covered_in_grid(s, g)) hit[g.index(q)] = 1;

  std::vector<GridPoint> out;
  for (int y = 1; y <= g.side(); ++y)
    for (int x = 1; x <= g.side(); ++x)
      if (!hit[g.index({x, y})]) out.push_back({x, y});
  return out;
}

VerificationReport verify(const Instance& inst, const Placement& pl) {
  VerificationReport r;
  r.uncovered = uncovered(inst, pl);
  r.fully_covered = r.uncovered.empty();
  r.connected = is_connected(comm_graph(pl, inst.obstacles));
  r.source_count = pl.size();
  r.within_budget = pl.size() <= static_cast<std::size_t>(inst.budget);
  r.passed = r.fully_covered && r.connected && r.within_budget;
  return r;
}

}  // namespace sgpc
