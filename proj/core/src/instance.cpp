#include "l0simons/instance.hpp"

#include <algorithm>
#include <set>

#include "l0simons/errors.hpp"
#include "l0simons/rng.hpp"

namespace l0simons {

namespace {

std::string position_name(const Instance& instance, std::size_t n) {
    const std::size_t p = instance.functions.preamble().size();
    if (n < p) return "preamble[" + std::to_string(n) + "]";
    return "cycle[" + std::to_string(n - p) + "]";
}

}  // namespace

std::vector<std::string> validate(const Instance& instance) {
    std::vector<std::string> out;
    if (!instance.space) {
        out.push_back("instance has no probability space");
        return out;
    }
    const ProbSpace& space = *instance.space;
    std::vector<std::string> space_diags = space.diagnostics();
    for (std::string& d : space_diags) out.push_back(std::move(d));

    if (instance.base_points.empty()) out.push_back("the base point list is empty");
    {
        std::set<std::string> seen;
        for (const std::string& b : instance.base_points) {
            if (!seen.insert(b).second) out.push_back("duplicate base point label '" + b + "'");
        }
    }

    const std::size_t atoms = space.size();
    const std::size_t bases = instance.base_points.size();

    bool epsilon_usable = true;
    if (!same_space(instance.epsilon.space(), instance.space) ||
        instance.epsilon.size() != atoms) {
        out.push_back("epsilon does not live on the instance's probability space");
        epsilon_usable = false;
    } else {
        for (std::size_t a = 0; a < atoms; ++a) {
            if (sgn(instance.epsilon.at(a)) <= 0) {
                out.push_back("epsilon must be strictly positive: atom '" +
                              space.atom(a).label + "' has epsilon " +
                              to_fraction_string(instance.epsilon.at(a)));
                epsilon_usable = false;
            }
        }
    }

    const std::size_t total = instance.functions.preamble().size() +
                              instance.functions.cycle().size();
    for (std::size_t n = 0; n < total; ++n) {
        const BaseFunction& f = instance.functions.item(n);
        const std::string name = position_name(instance, n);
        if (f.table.size() != bases) {
            out.push_back("function " + name + " tabulates " + std::to_string(f.table.size()) +
                          " base points, expected " + std::to_string(bases));
            continue;
        }
        for (std::size_t b = 0; b < bases; ++b) {
            const Rv& profile = f.table[b];
            if (!same_space(profile.space(), instance.space) || profile.size() != atoms) {
                out.push_back("function " + name + " at base point '" +
                              instance.base_points[b] +
                              "' does not live on the instance's space");
                continue;
            }
            if (!epsilon_usable) continue;
            for (std::size_t a = 0; a < atoms; ++a) {
                if (::abs(profile.at(a)) > instance.epsilon.at(a)) {
                    out.push_back("function " + name + " leaves the epsilon ball at base point '" +
                                  instance.base_points[b] + "', atom '" + space.atom(a).label +
                                  "': |" + to_fraction_string(profile.at(a)) + "| > " +
                                  to_fraction_string(instance.epsilon.at(a)));
                }
            }
        }
    }

    if (!instance.s_is_all()) {
        if (instance.selections->empty()) {
            out.push_back("explicit S must contain at least one selection");
        }
        for (std::size_t s = 0; s < instance.selections->size(); ++s) {
            const Selection& sel = (*instance.selections)[s];
            if (sel.choice.size() != atoms) {
                out.push_back("selection " + std::to_string(s) + " assigns " +
                              std::to_string(sel.choice.size()) + " atoms, expected " +
                              std::to_string(atoms));
                continue;
            }
            for (std::size_t a = 0; a < atoms; ++a) {
                if (sel.choice[a] >= bases) {
                    out.push_back("selection " + std::to_string(s) +
                                  " picks an unknown base point at atom '" +
                                  space.atom(a).label + "'");
                }
            }
        }
    }
    return out;
}

std::optional<std::size_t> selection_count(const Instance& instance, std::size_t cap) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(),
                  static_cast<unsigned long>(instance.base_points.size()),
                  static_cast<unsigned long>(instance.space->size()));
    if (count > static_cast<unsigned long>(cap)) return std::nullopt;
    return static_cast<std::size_t>(count.get_ui());
}

std::vector<Selection> enumerate_selections(const Instance& instance, std::size_t cap) {
    auto count = selection_count(instance, cap);
    if (!count) {
        mpz_class full;
        mpz_ui_pow_ui(full.get_mpz_t(),
                      static_cast<unsigned long>(instance.base_points.size()),
                      static_cast<unsigned long>(instance.space->size()));
        throw ResourceError("selection enumeration needs " + full.get_str() +
                            " selections, above the cap of " + std::to_string(cap));
    }
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();
    std::vector<Selection> out;
    out.reserve(*count);
    Selection current;
    current.choice.assign(atoms, 0);
    for (std::size_t k = 0; k < *count; ++k) {
        std::size_t rem = k;
        for (std::size_t a = atoms; a-- > 0;) {
            current.choice[a] = rem % bases;
            rem /= bases;
        }
        out.push_back(current);
    }
    return out;
}

Rv evaluate(const Instance& instance, const BaseFunction& f, const Selection& x) {
    const std::size_t atoms = instance.space->size();
    if (x.choice.size() != atoms) {
        throw StructuralError("evaluate: selection does not cover every atom");
    }
    if (f.table.size() != instance.base_points.size()) {
        throw StructuralError("evaluate: function table does not cover the base points");
    }
    std::vector<Rat> values(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        if (x.choice[a] >= f.table.size()) {
            throw StructuralError("evaluate: selection picks an unknown base point at atom '" +
                                  instance.space->atom(a).label + "'");
        }
        values[a] = f.table[x.choice[a]].at(a);
    }
    return Rv(instance.space, std::move(values));
}

std::vector<std::size_t> DistinctFunctions::all_ids() const {
    std::vector<std::size_t> ids(tables.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return ids;
}

std::vector<std::size_t> DistinctFunctions::tail_ids() const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (in_tail[i]) ids.push_back(i);
    }
    return ids;
}

DistinctFunctions distinct_functions(const EventuallyPeriodicSeq<BaseFunction>& seq) {
    DistinctFunctions out;
    auto id_of = [&out](const BaseFunction& f) {
        for (std::size_t i = 0; i < out.tables.size(); ++i) {
            if (out.tables[i] == f) return i;
        }
        out.tables.push_back(f);
        out.in_tail.push_back(false);
        return out.tables.size() - 1;
    };
    for (const BaseFunction& f : seq.preamble()) out.preamble_ids.push_back(id_of(f));
    for (const BaseFunction& f : seq.cycle()) {
        std::size_t id = id_of(f);
        out.cycle_ids.push_back(id);
        out.in_tail[id] = true;
    }
    return out;
}

std::vector<std::vector<std::size_t>> per_atom_columns(const Instance& instance) {
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();
    std::vector<std::vector<std::size_t>> cols(atoms);
    if (instance.s_is_all()) {
        for (std::size_t a = 0; a < atoms; ++a) {
            cols[a].resize(bases);
            for (std::size_t b = 0; b < bases; ++b) cols[a][b] = b;
        }
        return cols;
    }
    for (std::size_t a = 0; a < atoms; ++a) {
        std::set<std::size_t> seen;
        for (const Selection& sel : *instance.selections) {
            if (a < sel.choice.size()) seen.insert(sel.choice[a]);
        }
        cols[a].assign(seen.begin(), seen.end());
    }
    return cols;
}

PayoffMatrix assemble_payoff_matrix(const Instance& instance,
                                    const DistinctFunctions& distinct,
                                    std::span<const std::size_t> ids) {
    PayoffMatrix matrix;
    matrix.space = instance.space;
    matrix.row_ids.assign(ids.begin(), ids.end());
    matrix.column_labels = instance.base_points;
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();
    matrix.entries.assign(atoms, std::vector<std::vector<Rat>>(ids.size(), std::vector<Rat>(bases)));
    for (std::size_t a = 0; a < atoms; ++a) {
        for (std::size_t r = 0; r < ids.size(); ++r) {
            const BaseFunction& f = distinct.tables[ids[r]];
            for (std::size_t b = 0; b < bases; ++b) {
                matrix.entries[a][r][b] = f.table[b].at(a);
            }
        }
    }
    return matrix;
}

const char* to_string(HypothesisVerdict verdict) {
    switch (verdict) {
        case HypothesisVerdict::Holds: return "HOLDS";
        case HypothesisVerdict::HoldsOnSamples: return "HOLDS-ON-SAMPLES";
        case HypothesisVerdict::Fails: return "FAILS";
    }
    return "UNKNOWN";
}

namespace {

/// True when some single member of S attains, at every atom, the supremum
/// over E of the mixture with constant weights w over the distinct tables.
bool mixture_attained(const Instance& instance, const DistinctFunctions& distinct,
                      const std::vector<Rat>& w) {
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();
    // Mixture table and its per-atom supremum over all base points (E is the
    // full selection set, so the supremum over E is the per-atom column max).
    std::vector<std::vector<Rat>> g(bases, std::vector<Rat>(atoms, Rat(0)));
    for (std::size_t b = 0; b < bases; ++b) {
        for (std::size_t a = 0; a < atoms; ++a) {
            for (std::size_t j = 0; j < distinct.tables.size(); ++j) {
                g[b][a] += w[j] * distinct.tables[j].table[b].at(a);
            }
        }
    }
    std::vector<Rat> sup(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        sup[a] = g[0][a];
        for (std::size_t b = 1; b < bases; ++b) {
            if (g[b][a] > sup[a]) sup[a] = g[b][a];
        }
    }
    for (const Selection& sel : *instance.selections) {
        bool attains = true;
        for (std::size_t a = 0; a < atoms; ++a) {
            if (g[sel.choice[a]][a] != sup[a]) {
                attains = false;
                break;
            }
        }
        if (attains) return true;
    }
    return false;
}

}  // namespace

HypothesisReport check_hypothesis(const Instance& instance, std::size_t samples,
                                  std::uint64_t seed) {
    if (instance.s_is_all()) {
        return HypothesisReport{HypothesisVerdict::Holds,
                                "S contains every selection: the per-atom argmax of any strictly "
                                "positive mixture is itself a selection",
                                std::nullopt};
    }

    DistinctFunctions distinct = distinct_functions(instance.functions);
    const std::size_t count = distinct.tables.size();

    std::vector<std::vector<Rat>> probes;
    probes.emplace_back(count, Rat(1, static_cast<unsigned long>(count)));
    if (count > 1) {
        // One tilted vector per id: mass (J+1)/(2J) on it, 1/(2J) elsewhere.
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Rat> w(count, make_rat(1, 2 * static_cast<long>(count)));
            w[i] = make_rat(static_cast<long>(count) + 1, 2 * static_cast<long>(count));
            probes.push_back(std::move(w));
        }
    }
    SeededRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rat> numerators(count);
        Rat total(0);
        for (std::size_t j = 0; j < count; ++j) {
            numerators[j] = Rat(rng.next_int(1, 1000));
            total += numerators[j];
        }
        for (Rat& v : numerators) v /= total;
        probes.push_back(std::move(numerators));
    }

    for (std::size_t p = 0; p < probes.size(); ++p) {
        if (!mixture_attained(instance, distinct, probes[p])) {
            std::string note = "no member of S attains the supremum over E of probe " +
                               std::to_string(p) + " at every atom";
            return HypothesisReport{HypothesisVerdict::Fails, std::move(note), probes[p]};
        }
    }
    return HypothesisReport{HypothesisVerdict::HoldsOnSamples,
                            "all " + std::to_string(probes.size()) +
                                " strictly positive probes were attained within S",
                            std::nullopt};
}

}  // namespace l0simons
