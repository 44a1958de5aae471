#include "l0simons/oracle.hpp"

#include "l0simons/errors.hpp"

namespace l0simons::oracle {

namespace {

/// Walks every composition of `grid` units over the rows, maintaining the
/// integer-weighted column sums, and keeps the smallest column maximum.
void walk_compositions(const std::vector<std::vector<Rat>>& matrix, std::size_t row,
                       unsigned remaining, std::vector<Rat>& column_sums, bool& seen,
                       Rat& best) {
    const std::size_t rows = matrix.size();
    const std::size_t cols = matrix[0].size();
    if (row + 1 == rows) {
        Rat worst;
        bool first = true;
        for (std::size_t b = 0; b < cols; ++b) {
            Rat total(column_sums[b] + Rat(remaining) * matrix[row][b]);
            if (first || total > worst) {
                worst = total;
                first = false;
            }
        }
        if (!seen || worst < best) {
            best = worst;
            seen = true;
        }
        return;
    }
    // column_sums carries `units` copies of this row while recursing; every
    // callee restores what it added, so one subtraction at the end rebalances.
    for (unsigned units = 0; units <= remaining; ++units) {
        if (units > 0) {
            for (std::size_t b = 0; b < cols; ++b) column_sums[b] += matrix[row][b];
        }
        walk_compositions(matrix, row + 1, remaining - units, column_sums, seen, best);
    }
    for (std::size_t b = 0; b < cols; ++b) {
        column_sums[b] -= Rat(remaining) * matrix[row][b];
    }
}

}  // namespace

Rat brute_game(const std::vector<std::vector<Rat>>& matrix, GridSpec grid) {
    if (matrix.empty() || matrix[0].empty()) {
        throw DomainError("brute_game requires a nonempty matrix");
    }
    if (grid.resolution == 0) throw DomainError("brute_game requires resolution >= 1");
    for (const auto& row : matrix) {
        if (row.size() != matrix[0].size()) throw StructuralError("brute_game: ragged matrix");
    }

    std::vector<Rat> column_sums(matrix[0].size(), Rat(0));
    bool seen = false;
    Rat best;
    walk_compositions(matrix, 0, grid.resolution, column_sums, seen, best);
    return Rat(best / Rat(grid.resolution));
}

Rv brute_rhs(const Instance& instance, GridSpec grid) {
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();
    if (atoms > 3) throw ResourceError("brute_rhs handles at most 3 atoms");
    if (bases > 5) throw ResourceError("brute_rhs handles at most 5 base points");

    // Own dedup of the function tables, by exact equality.
    std::vector<const BaseFunction*> distinct;
    auto add = [&distinct](const BaseFunction& f) {
        for (const BaseFunction* seen : distinct) {
            if (*seen == f) return;
        }
        distinct.push_back(&f);
    };
    for (const BaseFunction& f : instance.functions.preamble()) add(f);
    for (const BaseFunction& f : instance.functions.cycle()) add(f);
    if (distinct.size() > 5) throw ResourceError("brute_rhs handles at most 5 distinct functions");

    std::vector<Rat> values(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        std::vector<std::vector<Rat>> matrix(distinct.size(), std::vector<Rat>(bases));
        for (std::size_t j = 0; j < distinct.size(); ++j) {
            for (std::size_t b = 0; b < bases; ++b) {
                matrix[j][b] = distinct[j]->table[b].at(a);
            }
        }
        values[a] = brute_game(matrix, grid);
    }
    return Rv(instance.space, std::move(values));
}

Rv brute_lhs(const Instance& instance, std::size_t cap) {
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();

    std::vector<Rat> best(atoms);
    std::vector<bool> seen(atoms, false);

    auto consider = [&](const std::vector<std::size_t>& choice) {
        for (std::size_t a = 0; a < atoms; ++a) {
            // Tail limsup at this selection: explicit scan over the cycle.
            Rat limsup;
            bool first = true;
            for (const BaseFunction& f : instance.functions.cycle()) {
                const Rat& v = f.table[choice[a]].at(a);
                if (first || v > limsup) {
                    limsup = v;
                    first = false;
                }
            }
            if (!seen[a] || limsup > best[a]) {
                best[a] = limsup;
                seen[a] = true;
            }
        }
    };

    if (instance.s_is_all()) {
        // Own mixed-radix enumeration of every selection.
        mpz_class full;
        mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(bases),
                      static_cast<unsigned long>(atoms));
        if (full > static_cast<unsigned long>(cap)) {
            throw ResourceError("brute_lhs needs " + full.get_str() +
                                " selections, above the cap of " + std::to_string(cap));
        }
        const std::size_t total = static_cast<std::size_t>(full.get_ui());
        std::vector<std::size_t> choice(atoms, 0);
        for (std::size_t k = 0; k < total; ++k) {
            std::size_t rem = k;
            for (std::size_t a = atoms; a-- > 0;) {
                choice[a] = rem % bases;
                rem /= bases;
            }
            consider(choice);
        }
    } else {
        for (const Selection& sel : *instance.selections) consider(sel.choice);
    }

    for (bool s : seen) {
        if (!s) throw DomainError("brute_lhs: empty selection set");
    }
    return Rv(instance.space, std::move(best));
}

}  // namespace l0simons::oracle
