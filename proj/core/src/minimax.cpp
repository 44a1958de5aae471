#include "l0simons/minimax.hpp"

#include "l0simons/errors.hpp"
#include "l0simons/simplex.hpp"

namespace l0simons {

bool MixtureWeights::valid() const {
    if (!space || weights.size() != space->size()) return false;
    for (const auto& per_atom : weights) {
        if (per_atom.size() != ids.size()) return false;
        Rat total(0);
        for (const Rat& w : per_atom) {
            if (sgn(w) < 0) return false;
            total += w;
        }
        if (total != 1) return false;
    }
    return true;
}

bool MixtureWeights::strictly_positive() const {
    for (const auto& per_atom : weights) {
        for (const Rat& w : per_atom) {
            if (sgn(w) <= 0) return false;
        }
    }
    return true;
}

GamePoint solve_matrix_game(const std::vector<std::vector<Rat>>& payoff,
                            const std::vector<Rat>& offsets,
                            const Rat& scale) {
    const std::size_t rows = payoff.size();
    if (rows == 0) throw DomainError("matrix game requires at least one row");
    const std::size_t cols = payoff[0].size();
    if (cols == 0) throw DomainError("matrix game requires at least one column");
    for (const auto& row : payoff) {
        if (row.size() != cols) throw StructuralError("matrix game: ragged payoff matrix");
    }
    if (offsets.size() != cols) throw StructuralError("matrix game: offset count != columns");
    if (sgn(scale) <= 0) throw DomainError("matrix game: scale must be positive");

    // Fold offsets and scale into the entries; valid because weights sum to 1.
    std::vector<std::vector<Rat>> folded(rows, std::vector<Rat>(cols));
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t b = 0; b < cols; ++b) {
            folded[j][b] = offsets[b] + scale * payoff[j][b];
        }
    }

    if (rows == 1) {
        Rat best = folded[0][0];
        for (std::size_t b = 1; b < cols; ++b) {
            if (folded[0][b] > best) best = folded[0][b];
        }
        return GamePoint{best, {Rat(1)}};
    }
    if (cols == 1) {
        std::size_t arg = 0;
        for (std::size_t j = 1; j < rows; ++j) {
            if (folded[j][0] < folded[arg][0]) arg = j;
        }
        std::vector<Rat> w(rows, Rat(0));
        w[arg] = 1;
        return GamePoint{folded[arg][0], std::move(w)};
    }

    // Shift every entry to at least 1 so the game value is positive.
    Rat low = folded[0][0];
    for (const auto& row : folded) {
        for (const Rat& v : row) {
            if (v < low) low = v;
        }
    }
    Rat shift(Rat(1) - low);
    std::vector<std::vector<Rat>> lp_rows(cols, std::vector<Rat>(rows));
    for (std::size_t b = 0; b < cols; ++b) {
        for (std::size_t j = 0; j < rows; ++j) {
            lp_rows[b][j] = folded[j][b] + shift;
        }
    }

    SimplexResult lp = simplex_max(lp_rows, std::vector<Rat>(cols, Rat(1)),
                                   std::vector<Rat>(rows, Rat(1)));
    if (!lp.bounded || sgn(lp.objective) <= 0) {
        // Entries >= 1 force both boundedness and a positive optimum.
        throw DomainError("matrix game: normalized program degenerate");
    }

    Rat inv_value(Rat(1) / lp.objective);
    std::vector<Rat> weights(rows);
    for (std::size_t j = 0; j < rows; ++j) weights[j] = lp.x[j] * inv_value;
    return GamePoint{Rat(inv_value - shift), std::move(weights)};
}

GamePoint game_value_per_atom(const PayoffMatrix& matrix, std::size_t atom) {
    if (atom >= matrix.entries.size()) {
        throw StructuralError("game_value_per_atom: atom index out of range");
    }
    std::vector<Rat> offsets(matrix.column_labels.size(), Rat(0));
    return solve_matrix_game(matrix.entries[atom], offsets, Rat(1));
}

std::pair<Rv, MixtureWeights> essinf_over_hull(const PayoffMatrix& matrix) {
    if (!matrix.space) throw StructuralError("essinf_over_hull: matrix has no space");
    if (matrix.entries.size() != matrix.space->size()) {
        throw StructuralError("essinf_over_hull: one entry table per atom required");
    }
    std::vector<Rat> values;
    MixtureWeights w;
    w.space = matrix.space;
    w.ids = matrix.row_ids;
    values.reserve(matrix.space->size());
    w.weights.reserve(matrix.space->size());
    for (std::size_t atom = 0; atom < matrix.space->size(); ++atom) {
        GamePoint point = game_value_per_atom(matrix, atom);
        values.push_back(std::move(point.value));
        w.weights.push_back(std::move(point.weights));
    }
    return {Rv(matrix.space, std::move(values)), std::move(w)};
}

Rv mix(const MixtureWeights& w, std::span<const Rv> values_by_id) {
    if (values_by_id.size() != w.ids.size()) {
        throw StructuralError("mix: value count does not match the weight identifiers");
    }
    if (!w.space) throw StructuralError("mix: weights carry no probability space");
    for (const Rv& value : values_by_id) {
        if (!same_space(w.space, value.space())) {
            throw StructuralError("mix: values live on a different probability space");
        }
    }
    if (w.weights.size() != w.space->size()) {
        throw StructuralError("mix: one weight vector per atom required");
    }
    std::vector<Rat> out(w.space->size(), Rat(0));
    for (std::size_t atom = 0; atom < out.size(); ++atom) {
        if (w.weights[atom].size() != w.ids.size()) {
            throw StructuralError("mix: weight vector length mismatch");
        }
        for (std::size_t j = 0; j < w.ids.size(); ++j) {
            out[atom] += w.weights[atom][j] * values_by_id[j].at(atom);
        }
    }
    return Rv(w.space, std::move(out));
}

}  // namespace l0simons
