#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l0simons/rv.hpp"

namespace l0simons {

/// Convex coefficients with one weight vector per atom. Letting the weights
/// vary across atoms is exactly the extra freedom the module-valued convex
/// hull has over the real-valued one: the minimizer may mix differently on
/// different atoms.
struct MixtureWeights {
    SpacePtr space;
    std::vector<std::size_t> ids;               // function identifiers
    std::vector<std::vector<Rat>> weights;      // [atom][position in ids]

    /// Per atom: all weights >= 0 and summing to exactly one.
    bool valid() const;
    /// Per atom: all weights > 0.
    bool strictly_positive() const;
};

/// Per-atom tabulation of finitely many functions over a finite column set:
/// entries[atom][row][column].
struct PayoffMatrix {
    SpacePtr space;
    std::vector<std::size_t> row_ids;
    std::vector<std::string> column_labels;
    std::vector<std::vector<std::vector<Rat>>> entries;
};

struct GamePoint {
    Rat value;
    std::vector<Rat> weights;
};

/// Exact value and an attaining weight vector of
///     min over the simplex w of  max over columns b of
///         offsets[b] + scale * sum_j w[j] * payoff[j][b],
/// scale > 0. Offsets fold into the matrix through sum w = 1, the entries are
/// shifted positive, and the resulting game is solved as the linear program
/// max sum(u) s.t. for every column b sum_j u_j A[j][b] <= 1, u >= 0, whose
/// optimum 1/sum(u) is the shifted game value. Single-row and single-column
/// inputs are resolved analytically. Ties between optimal weight vectors are
/// broken by the deterministic pivot order; only value and feasibility are
/// contractual.
GamePoint solve_matrix_game(const std::vector<std::vector<Rat>>& payoff,
                            const std::vector<Rat>& offsets,
                            const Rat& scale);

/// The plain game at one atom: offsets 0, scale 1.
GamePoint game_value_per_atom(const PayoffMatrix& matrix, std::size_t atom);

/// Assembles the per-atom games into a random variable and per-atom attaining
/// weights: the essential infimum, over the convex hull with module-valued
/// coefficients, of the per-column supremum.
std::pair<Rv, MixtureWeights> essinf_over_hull(const PayoffMatrix& matrix);

/// sum_j w_j(atom) * values[j](atom), per atom. values must align with w.ids.
Rv mix(const MixtureWeights& w, std::span<const Rv> values_by_id);

}  // namespace l0simons
