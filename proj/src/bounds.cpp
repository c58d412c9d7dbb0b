#include "sgpc/bounds.hpp"

#include "sgpc/grid.hpp"

namespace sgpc {

std::int64_t lower_bound(std::int64_t p) {
  if (p < 1) throw PreconditionError("lower_bound requires p >= 1");
  if (p <= 3) return p;
  return (p * p + 2 + 2) / 3;
}

std::int64_t max_cover_points(std::int64_t m) {
  if (m < 1) throw PreconditionError("max_cover_points requires m >= 1");
  return 3 * m + 2;
}

Rational ratio_bound(std::int64_t p) {
  if (p <= 5) throw PreconditionError("ratio_bound requires p > 5");
  return Rational(1) + Rational(2 * p - 10, p * p + 2);
}

}  // namespace sgpc
