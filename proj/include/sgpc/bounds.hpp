#pragma once

#include <cstdint>

#include "sgpc/rational.hpp"

namespace sgpc {

/// Minimum number of communicable unit sources able to cover a p x p grid:
/// 1, 2, 3 for p = 1, 2, 3 and ceil((p^2 + 2) / 3) for p >= 4.
std::int64_t lower_bound(std::int64_t p);

/// Most grid points m communicable unit sources can cover: 3m + 2.
std::int64_t max_cover_points(std::int64_t m);

/// Approximation ratio guarantee 1 + (2p - 10) / (p^2 + 2), exact. Requires p > 5.
Rational ratio_bound(std::int64_t p);

}  // namespace sgpc
