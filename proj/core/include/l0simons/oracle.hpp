#pragma once

#include <vector>

#include "l0simons/instance.hpp"
#include "l0simons/rv.hpp"

namespace l0simons::oracle {

/// Simplex-lattice resolution: weights range over vectors with denominator k.
struct GridSpec {
    unsigned resolution = 1;  // k >= 1
};

/// Lattice minimum of the column maxima: min over exact weight vectors i/k of
/// max over columns of the weighted row combination. Always >= the true game
/// value, and within (max entry - min entry)/k of it for small row counts.
/// Search is exhaustive, from the definition only; it shares nothing with the
/// solver path.
Rat brute_game(const std::vector<std::vector<Rat>>& matrix, GridSpec grid);

/// Per-atom brute_game over the distinct functions and all base points.
/// Capped: at most 5 distinct functions, 5 base points, 3 atoms.
Rv brute_rhs(const Instance& instance, GridSpec grid);

/// Full enumeration of S with an explicit per-selection cycle scan; takes the
/// per-atom maximum. Exact, so it must agree with the solver path to the bit.
Rv brute_lhs(const Instance& instance, std::size_t cap);

}  // namespace l0simons::oracle
