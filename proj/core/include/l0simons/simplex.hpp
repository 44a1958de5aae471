#pragma once

#include <vector>

#include "l0simons/rational.hpp"

namespace l0simons {

struct SimplexResult {
    bool bounded = true;
    Rat objective;          // value of c.x at the optimum
    std::vector<Rat> x;     // optimal structural variables
};

/// Dense exact-rational simplex for
///     max c.x  subject to  A x <= b,  x >= 0,  with every b_i >= 0,
/// so the origin is a basic feasible start and no first phase is needed.
/// Entering and leaving variables follow Bland's smallest-index rule, which
/// makes the pivot sequence deterministic and rules out cycling.
SimplexResult simplex_max(const std::vector<std::vector<Rat>>& constraints,
                          const std::vector<Rat>& bounds,
                          const std::vector<Rat>& objective);

}  // namespace l0simons
