#pragma once

#include <span>

#include "l0simons/rv.hpp"
#include "l0simons/sequence.hpp"

namespace l0simons {

/// Least random variable dominating every member of the family: the per-atom
/// maximum, since atoms all carry positive mass. Empty families are rejected
/// rather than mapped to -infinity; no caller needs extended values.
Rv ess_sup(std::span<const Rv> family);

/// Per-atom minimum; equals -ess_sup(-family).
Rv ess_inf(std::span<const Rv> family);

/// essinf over n of esssup over m >= n. For an eventually periodic sequence
/// the tail suprema stabilize at the per-atom maximum over the cycle, so the
/// preamble never affects the result.
Rv ess_limsup(const EventuallyPeriodicSeq<Rv>& seq);

/// Dual: per-atom minimum over the cycle.
Rv ess_liminf(const EventuallyPeriodicSeq<Rv>& seq);

/// Piecewise assembly over a partition: the result equals pieces[k] on
/// partition[k]. The events must be pairwise disjoint and cover the space.
Rv concatenate(const std::vector<Event>& partition, const std::vector<Rv>& pieces);

/// |x| <= epsilon at every atom; epsilon must be strictly positive.
bool in_ball(const Rv& x, const Rv& epsilon);

}  // namespace l0simons
