#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l0simons/rational.hpp"

namespace l0simons {

struct Atom {
    std::string label;
    Rat mass;
};

/// Finite atomic probability space. Atoms are ordered; every operation in the
/// library indexes them by position. Construction itself does not enforce the
/// measure axioms so that file parsers can surface violations as diagnostics;
/// diagnostics() lists them and make() refuses a space that has any.
///
/// All atoms carrying strictly positive mass means the almost-sure equivalence
/// classes are singletons: the whole lattice layer works pointwise per atom.
class ProbSpace {
  public:
    explicit ProbSpace(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

    /// Throws DomainError unless the atoms form a genuine probability space.
    static std::shared_ptr<const ProbSpace> make(std::vector<Atom> atoms);

    std::size_t size() const { return atoms_.size(); }
    const Atom& atom(std::size_t i) const { return atoms_[i]; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Violations of: positive masses, masses summing to one, unique labels.
    std::vector<std::string> diagnostics() const;

    bool operator==(const ProbSpace& other) const;

  private:
    std::vector<Atom> atoms_;
};

using SpacePtr = std::shared_ptr<const ProbSpace>;

/// True when the two handles denote the same space (pointer identity or
/// structural equality). Operations mixing spaces throw StructuralError.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Measurable event: a subset of the atoms of one space.
class Event {
  public:
    Event(SpacePtr space, std::vector<bool> mask);

    static Event from_labels(SpacePtr space, const std::vector<std::string>& labels);
    static Event full(SpacePtr space);
    static Event none(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    std::size_t space_size() const { return mask_.size(); }
    bool contains(std::size_t atom) const { return mask_[atom]; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    Event complement() const;

  private:
    SpacePtr space_;
    std::vector<bool> mask_;
};

}  // namespace l0simons
