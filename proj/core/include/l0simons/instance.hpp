#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l0simons/lattice.hpp"
#include "l0simons/minimax.hpp"
#include "l0simons/rv.hpp"
#include "l0simons/sequence.hpp"

namespace l0simons {

/// One function of the sequence, tabulated over the base points: table[b] is
/// the value profile across atoms at base point b (aligned with
/// Instance::base_points).
struct BaseFunction {
    std::vector<Rv> table;

    friend bool operator==(const BaseFunction& a, const BaseFunction& b) {
        if (a.table.size() != b.table.size()) return false;
        for (std::size_t i = 0; i < a.table.size(); ++i) {
            if (!(a.table[i] == b.table[i])) return false;
        }
        return true;
    }
};

/// A measurable choice of one base point per atom.
struct Selection {
    std::vector<std::size_t> choice;  // [atom] -> base point index

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// The verification problem: a finite space, base points, an eventually
/// periodic sequence of tabulated functions with values inside the ball of
/// radius epsilon, and the selection subset S. The ground set E is always the
/// full selection set; S is the experimental variable (every selection, or an
/// explicit list).
struct Instance {
    SpacePtr space;
    std::vector<std::string> base_points;
    EventuallyPeriodicSeq<BaseFunction> functions;
    Rv epsilon;
    std::optional<std::vector<Selection>> selections;  // nullopt: S = all selections

    bool s_is_all() const { return !selections.has_value(); }
};

/// Structural and mathematical problems, each a complete sentence naming the
/// offending function, base point or atom. Valid instances return an empty
/// list; this never throws.
std::vector<std::string> validate(const Instance& instance);

/// |base_points| ^ |atoms|, or nullopt when it exceeds the cap.
std::optional<std::size_t> selection_count(const Instance& instance, std::size_t cap);

/// All selections in deterministic order (atom 0 is the most significant
/// digit). Throws ResourceError naming the count when it exceeds the cap.
std::vector<Selection> enumerate_selections(const Instance& instance, std::size_t cap);

/// Per atom: the value of f at the base point the selection picks there.
Rv evaluate(const Instance& instance, const BaseFunction& f, const Selection& x);

/// The finite range of the function sequence under exact table equality.
struct DistinctFunctions {
    std::vector<BaseFunction> tables;        // indexed by id, first-appearance order
    std::vector<std::size_t> preamble_ids;   // id of each preamble position
    std::vector<std::size_t> cycle_ids;      // id of each cycle position
    std::vector<bool> in_tail;               // id occurs in the cycle

    std::vector<std::size_t> all_ids() const;
    std::vector<std::size_t> tail_ids() const;
};

DistinctFunctions distinct_functions(const EventuallyPeriodicSeq<BaseFunction>& seq);

/// Base-point indices reachable at each atom as Z ranges over S.
std::vector<std::vector<std::size_t>> per_atom_columns(const Instance& instance);

/// entries[atom][row][column] = tables[ids[row]] at (column, atom), columns
/// being all base points (the ground set E).
PayoffMatrix assemble_payoff_matrix(const Instance& instance,
                                    const DistinctFunctions& distinct,
                                    std::span<const std::size_t> ids);

enum class HypothesisVerdict { Holds, HoldsOnSamples, Fails };

const char* to_string(HypothesisVerdict verdict);

struct HypothesisReport {
    HypothesisVerdict verdict = HypothesisVerdict::Holds;
    std::string note;
    /// For Fails: a strictly positive weight vector over the distinct ids
    /// whose supremum over E no single member of S attains at every atom.
    std::optional<std::vector<Rat>> witness;
};

/// Attainment hypothesis: every strictly positive mixture of the functions
/// must attain its supremum over E at a single member of S. With S = all
/// selections this holds by per-atom argmax and is reported exactly; for an
/// explicit S the check probes deterministic tilt vectors plus `samples`
/// seeded strictly positive draws, verifying each probe exactly. A failing
/// probe is a genuine counterexample; passing every probe is reported as
/// HoldsOnSamples, not Holds.
HypothesisReport check_hypothesis(const Instance& instance, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace l0simons
