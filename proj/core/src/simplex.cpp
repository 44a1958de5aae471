#include "l0simons/simplex.hpp"

#include "l0simons/errors.hpp"

namespace l0simons {

// Tableau layout: one row per constraint, columns are the n structural
// variables, then m slacks, then the right-hand side. The objective row o
// represents the equation  sum_j o[j] x_j + z = o[rhs]  and receives the same
// eliminations as the constraint rows, so the current objective value is
// always o[rhs] and a nonbasic column improves z exactly when o[j] < 0.
SimplexResult simplex_max(const std::vector<std::vector<Rat>>& constraints,
                          const std::vector<Rat>& bounds,
                          const std::vector<Rat>& objective) {
    const std::size_t m = constraints.size();
    const std::size_t n = objective.size();
    if (bounds.size() != m) throw StructuralError("simplex: bound count does not match rows");
    for (const auto& row : constraints) {
        if (row.size() != n) throw StructuralError("simplex: ragged constraint matrix");
    }
    for (const Rat& b : bounds) {
        if (sgn(b) < 0) throw DomainError("simplex: negative right-hand side, origin infeasible");
    }

    const std::size_t width = n + m + 1;
    const std::size_t rhs = width - 1;

    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(width, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = constraints[i][j];
        tab[i][n + i] = 1;
        tab[i][rhs] = bounds[i];
    }
    std::vector<Rat> obj(width, Rat(0));
    for (std::size_t j = 0; j < n; ++j) obj[j] = Rat(-objective[j]);

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: lowest-index improving column.
        std::size_t entering = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (sgn(obj[j]) < 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) break;  // optimal

        // Ratio test; ties resolved toward the lowest basis variable index.
        std::size_t leaving = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][entering]) <= 0) continue;
            Rat ratio(tab[i][rhs] / tab[i][entering]);
            if (leaving == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == m) {
            return SimplexResult{false, Rat(0), {}};
        }

        // Pivot: normalize the leaving row, eliminate everywhere else.
        Rat pivot = tab[leaving][entering];
        for (std::size_t j = 0; j < width; ++j) tab[leaving][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leaving || sgn(tab[i][entering]) == 0) continue;
            Rat factor = tab[i][entering];
            for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leaving][j];
        }
        if (sgn(obj[entering]) != 0) {
            Rat factor = obj[entering];
            for (std::size_t j = 0; j < width; ++j) obj[j] -= factor * tab[leaving][j];
        }
        basis[leaving] = entering;
    }

    SimplexResult result;
    result.bounded = true;
    result.objective = obj[rhs];
    result.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) result.x[basis[i]] = tab[i][rhs];
    }
    return result;
}

}  // namespace l0simons
