#include "l0simons/prob_space.hpp"

#include <algorithm>
#include <set>

#include "l0simons/errors.hpp"

namespace l0simons {

std::shared_ptr<const ProbSpace> ProbSpace::make(std::vector<Atom> atoms) {
    auto space = std::make_shared<const ProbSpace>(std::move(atoms));
    if (auto problems = space->diagnostics(); !problems.empty()) {
        throw DomainError("invalid probability space: " + problems.front());
    }
    return space;
}

std::optional<std::size_t> ProbSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].label == label) return i;
    }
    return std::nullopt;
}

std::vector<std::string> ProbSpace::diagnostics() const {
    std::vector<std::string> out;
    if (atoms_.empty()) {
        out.push_back("the space has no atoms");
        return out;
    }
    Rat total(0);
    std::set<std::string> seen;
    for (const Atom& a : atoms_) {
        if (sgn(a.mass) <= 0) {
            out.push_back("atom '" + a.label + "' has non-positive mass " +
                          to_fraction_string(a.mass));
        }
        if (!seen.insert(a.label).second) {
            out.push_back("duplicate atom label '" + a.label + "'");
        }
        total += a.mass;
    }
    if (total != 1) {
        out.push_back("masses sum to " + to_fraction_string(total) + ", expected 1/1");
    }
    return out;
}

bool ProbSpace::operator==(const ProbSpace& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].label != other.atoms_[i].label) return false;
        if (atoms_[i].mass != other.atoms_[i].mass) return false;
    }
    return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!a || !b) return false;
    return a.get() == b.get() || *a == *b;
}

Event::Event(SpacePtr space, std::vector<bool> mask)
    : space_(std::move(space)), mask_(std::move(mask)) {
    if (!space_) throw StructuralError("event requires a probability space");
    if (mask_.size() != space_->size()) {
        throw StructuralError("event mask length does not match the atom count");
    }
}

Event Event::from_labels(SpacePtr space, const std::vector<std::string>& labels) {
    if (!space) throw StructuralError("event requires a probability space");
    std::vector<bool> mask(space->size(), false);
    for (const std::string& label : labels) {
        auto idx = space->index_of(label);
        if (!idx) throw StructuralError("event member '" + label + "' is not an atom of the space");
        mask[*idx] = true;
    }
    return Event(std::move(space), std::move(mask));
}

Event Event::full(SpacePtr space) {
    std::vector<bool> mask(space ? space->size() : 0, true);
    return Event(std::move(space), std::move(mask));
}

Event Event::none(SpacePtr space) {
    std::vector<bool> mask(space ? space->size() : 0, false);
    return Event(std::move(space), std::move(mask));
}

std::size_t Event::count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

Event Event::complement() const {
    std::vector<bool> mask(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
    return Event(space_, std::move(mask));
}

}  // namespace l0simons
