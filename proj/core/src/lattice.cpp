#include "l0simons/lattice.hpp"

#include "l0simons/errors.hpp"

namespace l0simons {

namespace {

void require_family_space(std::span<const Rv> family, const char* op) {
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (!same_space(family[0].space(), family[i].space())) {
            throw StructuralError(std::string(op) + ": family members live on different spaces");
        }
    }
}

Rv fold_max(std::span<const Rv> family) {
    Rv acc = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) acc = pointwise_max(acc, family[i]);
    return acc;
}

Rv fold_min(std::span<const Rv> family) {
    Rv acc = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) acc = pointwise_min(acc, family[i]);
    return acc;
}

}  // namespace

Rv ess_sup(std::span<const Rv> family) {
    if (family.empty()) throw DomainError("ess_sup of an empty family");
    require_family_space(family, "ess_sup");
    return fold_max(family);
}

Rv ess_inf(std::span<const Rv> family) {
    if (family.empty()) throw DomainError("ess_inf of an empty family");
    require_family_space(family, "ess_inf");
    return fold_min(family);
}

Rv ess_limsup(const EventuallyPeriodicSeq<Rv>& seq) {
    std::vector<Rv> all;
    all.reserve(seq.preamble().size() + seq.cycle().size());
    all.insert(all.end(), seq.preamble().begin(), seq.preamble().end());
    all.insert(all.end(), seq.cycle().begin(), seq.cycle().end());
    require_family_space(all, "ess_limsup");
    return fold_max(std::span<const Rv>(seq.cycle()));
}

Rv ess_liminf(const EventuallyPeriodicSeq<Rv>& seq) {
    std::vector<Rv> all;
    all.reserve(seq.preamble().size() + seq.cycle().size());
    all.insert(all.end(), seq.preamble().begin(), seq.preamble().end());
    all.insert(all.end(), seq.cycle().begin(), seq.cycle().end());
    require_family_space(all, "ess_liminf");
    return fold_min(std::span<const Rv>(seq.cycle()));
}

Rv concatenate(const std::vector<Event>& partition, const std::vector<Rv>& pieces) {
    if (partition.empty()) throw DomainError("concatenate: empty partition");
    if (partition.size() != pieces.size()) {
        throw StructuralError("concatenate: partition and piece counts differ");
    }
    const SpacePtr& space = pieces[0].space();
    for (const Rv& piece : pieces) {
        if (!same_space(space, piece.space())) {
            throw StructuralError("concatenate: pieces live on different spaces");
        }
    }
    for (const Event& event : partition) {
        if (!same_space(space, event.space())) {
            throw StructuralError("concatenate: partition events live on a different space");
        }
    }

    std::vector<Rat> values(space->size());
    for (std::size_t atom = 0; atom < space->size(); ++atom) {
        std::size_t hits = 0;
        for (std::size_t k = 0; k < partition.size(); ++k) {
            if (partition[k].contains(atom)) {
                values[atom] = pieces[k].at(atom);
                ++hits;
            }
        }
        if (hits == 0) {
            throw DomainError("concatenate: atom '" + space->atom(atom).label +
                              "' is not covered by the partition");
        }
        if (hits > 1) {
            throw DomainError("concatenate: atom '" + space->atom(atom).label +
                              "' is covered by " + std::to_string(hits) + " events");
        }
    }
    return Rv(space, std::move(values));
}

bool in_ball(const Rv& x, const Rv& epsilon) {
    if (!same_space(x.space(), epsilon.space())) {
        throw StructuralError("in_ball: radius lives on a different space");
    }
    if (!epsilon.strictly_positive()) {
        throw DomainError("in_ball: the radius must be strictly positive at every atom");
    }
    for (std::size_t atom = 0; atom < x.size(); ++atom) {
        if (::abs(x.at(atom)) > epsilon.at(atom)) return false;
    }
    return true;
}

}  // namespace l0simons
