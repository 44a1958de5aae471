#pragma once

#include <vector>

#include "l0simons/prob_space.hpp"
#include "l0simons/rational.hpp"

namespace l0simons {

/// Element of L0 over a finite atomic space: one exact rational per atom.
/// Values are immutable after construction; every operation is pure.
class Rv {
  public:
    Rv(SpacePtr space, std::vector<Rat> values);

    static Rv constant(SpacePtr space, const Rat& value);
    static Rv zero(SpacePtr space) { return constant(std::move(space), Rat(0)); }

    const SpacePtr& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    const Rat& at(std::size_t atom) const { return values_[atom]; }
    const std::vector<Rat>& values() const { return values_; }

    /// Membership in the cones L0_+ and L0_++.
    bool nonnegative() const;
    bool strictly_positive() const;

    Rv abs() const;
    Rv operator-() const;

  private:
    SpacePtr space_;
    std::vector<Rat> values_;
};

Rv operator+(const Rv& x, const Rv& y);
Rv operator-(const Rv& x, const Rv& y);
Rv operator*(const Rv& x, const Rv& y);  // pointwise product
Rv operator*(const Rat& c, const Rv& x);
bool operator==(const Rv& x, const Rv& y);

/// Almost-sure dominance X <= Y: pointwise at every atom. The order is
/// partial; leq(x, y) and leq(y, x) may both be false.
bool leq(const Rv& x, const Rv& y);

/// Strict dominance at every atom.
bool lt(const Rv& x, const Rv& y);

/// Dominance restricted to a nonempty event.
bool leq_on(const Rv& x, const Rv& y, const Event& on);

Rv pointwise_min(const Rv& x, const Rv& y);
Rv pointwise_max(const Rv& x, const Rv& y);

}  // namespace l0simons
