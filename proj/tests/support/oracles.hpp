// Test-side oracles, written from the definitions only. Nothing here calls
// into the simplex/minimax solver path; the whole point is that agreement
// between these and the library is evidence, not tautology.
#pragma once

#include <optional>
#include <vector>

#include "l0simons/instance.hpp"
#include "l0simons/rational.hpp"
#include "l0simons/rng.hpp"

namespace testsupport {

using l0simons::Rat;

/// Gaussian elimination with exact rationals. Returns nullopt when the
/// system is singular.
inline std::optional<std::vector<Rat>> solve_linear_system(
    std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t row = col; row < n; ++row) {
            if (sgn(a[row][col]) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        Rat inv(Rat(1) / a[col][col]);
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || sgn(a[row][col]) == 0) continue;
            Rat factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

/// Exact game value of min over the simplex of the column maxima, computed by
/// enumerating the vertices of {(w, t) : w in simplex, (A^T w)_b <= t}. Each
/// vertex is cut out by the simplex equality plus J active constraints chosen
/// among {w_j = 0} and {(A^T w)_b = t}; the optimum of a pointed bounded LP
/// sits at such a vertex.
inline Rat vertex_enum_game_value(const std::vector<std::vector<Rat>>& payoff) {
    const std::size_t rows = payoff.size();
    const std::size_t cols = payoff[0].size();
    const std::size_t dim = rows + 1;  // w_0..w_{rows-1}, t
    const std::size_t pool = rows + cols;

    std::optional<Rat> best;

    // Enumerate all subsets of size `rows` of the constraint pool.
    std::vector<std::size_t> subset(rows);
    auto consider = [&]() {
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim, Rat(0)));
        std::vector<Rat> b(dim, Rat(0));
        for (std::size_t j = 0; j < rows; ++j) a[0][j] = 1;  // sum w = 1
        b[0] = 1;
        for (std::size_t k = 0; k < rows; ++k) {
            std::size_t c = subset[k];
            if (c < rows) {
                a[k + 1][c] = 1;  // w_c = 0
            } else {
                std::size_t col = c - rows;
                for (std::size_t j = 0; j < rows; ++j) a[k + 1][j] = payoff[j][col];
                a[k + 1][rows] = -1;  // (A^T w)_col - t = 0
            }
        }
        auto solution = solve_linear_system(std::move(a), std::move(b));
        if (!solution) return;
        const std::vector<Rat>& v = *solution;
        for (std::size_t j = 0; j < rows; ++j) {
            if (sgn(v[j]) < 0) return;
        }
        for (std::size_t col = 0; col < cols; ++col) {
            Rat lhs(0);
            for (std::size_t j = 0; j < rows; ++j) lhs += v[j] * payoff[j][col];
            if (lhs > v[rows]) return;
        }
        if (!best || v[rows] < *best) best = v[rows];
    };

    for (std::size_t k = 0; k < rows; ++k) subset[k] = k;
    for (;;) {
        consider();
        // Next increasing-index combination; position k may reach pool-rows+k.
        std::size_t k = rows;
        bool advanced = false;
        while (k-- > 0) {
            if (subset[k] < pool - rows + k) {
                ++subset[k];
                for (std::size_t j = k + 1; j < rows; ++j) subset[j] = subset[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return *best;
}

/// Classical real-valued check for one-atom instances, line by line from the
/// definitions: lhs is the best tail value reachable within S, rhs is the
/// vertex-enumeration game value over the deduplicated function tables.
struct ScalarSimons {
    Rat lhs;
    Rat rhs;
};

inline ScalarSimons classical_one_atom_check(const l0simons::Instance& instance) {
    const std::size_t bases = instance.base_points.size();

    // Own dedup, exact equality on the single-atom tables.
    std::vector<std::vector<Rat>> tables;  // [fn][base]
    auto add = [&tables, bases](const l0simons::BaseFunction& f) {
        std::vector<Rat> row(bases);
        for (std::size_t b = 0; b < bases; ++b) row[b] = f.table[b].at(0);
        for (const auto& seen : tables) {
            if (seen == row) return;
        }
        tables.push_back(std::move(row));
    };
    std::vector<std::vector<Rat>> cycle_tables;
    for (const l0simons::BaseFunction& f : instance.functions.preamble()) add(f);
    for (const l0simons::BaseFunction& f : instance.functions.cycle()) {
        std::vector<Rat> row(bases);
        for (std::size_t b = 0; b < bases; ++b) row[b] = f.table[b].at(0);
        cycle_tables.push_back(row);
        add(f);
    }

    std::vector<std::size_t> reachable;
    if (instance.s_is_all()) {
        for (std::size_t b = 0; b < bases; ++b) reachable.push_back(b);
    } else {
        for (const l0simons::Selection& sel : *instance.selections) {
            std::size_t b = sel.choice[0];
            bool seen = false;
            for (std::size_t r : reachable) seen = seen || r == b;
            if (!seen) reachable.push_back(b);
        }
    }

    ScalarSimons out{Rat(0), Rat(0)};
    bool first = true;
    for (std::size_t b : reachable) {
        Rat tail = cycle_tables[0][b];
        for (const auto& row : cycle_tables) {
            if (row[b] > tail) tail = row[b];
        }
        if (first || tail > out.lhs) {
            out.lhs = tail;
            first = false;
        }
    }
    out.rhs = vertex_enum_game_value(tables);
    return out;
}

/// Strictly positive rational in (0, 1): p/q with 1 <= p < q.
inline Rat random_unit_interval(l0simons::SeededRng& rng) {
    long q = rng.next_int(2, 12);
    long p = rng.next_int(1, q - 1);
    return l0simons::make_rat(p, q);
}

/// Rational in [-range, range] with small denominator.
inline Rat random_rat(l0simons::SeededRng& rng, long range = 3) {
    long q = rng.next_int(1, 8);
    long p = rng.next_int(-range * q, range * q);
    return l0simons::make_rat(p, q);
}

}  // namespace testsupport
