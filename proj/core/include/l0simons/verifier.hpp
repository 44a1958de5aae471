#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "l0simons/instance.hpp"
#include "l0simons/minimax.hpp"

namespace l0simons {

/// Both sides of the inequality, compared exactly per atom.
struct VerifierResult {
    explicit VerifierResult(const SpacePtr& space)
        : lhs(Rv::zero(space)), rhs(Rv::zero(space)), slack(Rv::zero(space)) {}

    Rv lhs;                       // sup over Z in S of the tail limsup of f_n(Z)
    Rv rhs;                       // inf over the module-valued hull of sup over E
    MixtureWeights rhs_weights;   // per-atom weights attaining the rhs
    HypothesisReport hypothesis;
    bool applicable = true;       // false when the hypothesis check FAILS
    bool holds = false;           // lhs >= rhs at every atom, exact
    Rv slack;                     // lhs - rhs
};

/// One step of the constructive run. gamma equals the supremum over S of the
/// weighted prefix sum s_n, so the telescoping checks read directly off it.
struct TraceStep {
    explicit TraceStep(const SpacePtr& space)
        : gamma(Rv::zero(space)), optimality_slack(Rv::zero(space)),
          telescope_slack(Rv::zero(space)), tail_sum_slack(Rv::zero(space)),
          g_at_z0_slack(Rv::zero(space)) {}

    std::vector<std::size_t> ids;           // function ids admissible at this step
    std::vector<std::vector<Rat>> weights;  // [atom][position in ids]
    Rv gamma;                               // objective at the chosen mixture
    Rv optimality_slack;                    // chosen objective minus exact minimum (0)
    std::optional<Rv> blend_slack;          // vs the (g_n + lambda g_{n+1})/(1+lambda) blend
    Rv telescope_slack;                     // step gain over the geometric floor
    Rv tail_sum_slack;                      // remaining-sum lower bound, tau-padded
    Rv g_at_z0_slack;                       // g_n(Z0) - (m - 2 delta - 2 tau)
};

struct ProofTrace {
    explicit ProofTrace(const SpacePtr& space)
        : delta(Rv::zero(space)), lambda(Rv::zero(space)), m(Rv::zero(space)),
          bound(Rv::zero(space)), lambda_certificate(Rv::zero(space)),
          tail_bound(Rv::zero(space)), esslimsup_at_z0(Rv::zero(space)),
          final_slack(Rv::zero(space)) {}

    HypothesisReport hypothesis;
    Rv delta;
    Rv lambda;
    Rv m;
    Rv bound;               // M: global supremum of the functions over E
    Rv lambda_certificate;  // left minus right of the lambda inequality (0)
    std::size_t steps = 0;  // truncation depth N
    Rv tail_bound;          // tau = epsilon * lambda^N / (1 - lambda)
    std::vector<TraceStep> trace;
    Selection z0;
    bool z0_in_s = true;
    /// False when some chosen mixture puts zero weight on a function; the
    /// constructive argmax extraction of z0 does not depend on it, so this
    /// only flags that the attainment hypothesis was never invoked at a
    /// degenerate weight vector.
    bool mixtures_strictly_positive = true;
    Rv esslimsup_at_z0;
    Rv final_slack;  // esslimsup at z0 minus (m - 2 delta - 2 tau)
    bool all_nonnegative = false;
};

/// Thrown by trace_proof when the hypothesis check FAILS; carries the witness.
struct HypothesisFailure : DomainError {
    HypothesisReport report;
    explicit HypothesisFailure(HypothesisReport r)
        : DomainError("hypothesis FAILS: " + r.note), report(std::move(r)) {}
};

/// Supremum over Z in S of the tail limsup of n -> f_n(Z), exact through the
/// cycle structure. Enumerating S = all selections respects the cap.
Rv compute_lhs(const Instance& instance, std::size_t cap);

/// Infimum over the module-valued hull of all distinct functions (preamble
/// and cycle) of the supremum over E, with the attaining per-atom weights.
std::pair<Rv, MixtureWeights> compute_rhs(const Instance& instance);

/// Per-atom maximum over every distinct function and base point.
Rv compute_M(const Instance& instance);

/// lambda = delta / (M - m + 3 delta) per atom: the equality solution of
///     m - delta (1 + lambda) - M lambda >= (m - 2 delta)(1 - lambda),
/// always in (0, 1/3]. Requires delta strictly positive and M >= m.
Rv choose_lambda(const Rv& m, const Rv& bound, const Rv& delta);

/// Default delta: (M - m + 1) / 10 per atom.
Rv default_delta(const Rv& m, const Rv& bound);

/// Smallest N with epsilon * lambda^N / (1 - lambda) < delta at every atom,
/// bumped to preamble length + 1 so at least one step runs on cycle ids only.
std::size_t default_steps(const Instance& instance, const Rv& delta, const Rv& lambda);

/// sup over Z in S of sum_{p<n} lambda^{p-1} prefix[p](Z) + lambda^{n-1} h(Z),
/// per atom, where n = prefix.size() + 1.
Rv gamma_value(const Instance& instance, std::span<const BaseFunction> prefix,
               const BaseFunction& h, const Rv& lambda);

struct GStep {
    explicit GStep(const SpacePtr& space)
        : gamma(Rv::zero(space)), optimality_slack(Rv::zero(space)) {}

    std::vector<std::size_t> ids;
    std::vector<std::vector<Rat>> weights;
    Rv gamma;
    Rv optimality_slack;
};

struct GSequence {
    std::vector<GStep> steps;
    std::vector<BaseFunction> mixtures;     // g_n tabulated over all base points
    std::vector<BaseFunction> prefix_sums;  // s_n = sum_{p<=n} lambda^{p-1} g_p
};

/// For each step n, minimizes the gamma objective exactly over mixtures of
/// the functions still admissible at n (remaining preamble ids plus the cycle
/// ids; cycle ids only once n passes the preamble). The per-atom minimizers
/// assembled into one weight table are the finite-space counterpart of
/// stitching countably many near-minimizers along a partition.
GSequence construct_g_sequence(const Instance& instance, const Rv& delta,
                               const Rv& lambda, std::size_t steps);

/// Runs the whole constructive argument with every inequality checked per
/// atom in exact arithmetic. The infinite weighted sum is truncated at N
/// with the explicit tail bound tau; tau is the only approximation anywhere
/// and every downstream check carries it. Throws HypothesisFailure when the
/// hypothesis check FAILS, and ResourceError when `steps` is too small for
/// the tail bound (naming the required depth).
ProofTrace trace_proof(const Instance& instance, std::optional<Rv> delta,
                       std::optional<std::size_t> steps, std::size_t samples,
                       std::uint64_t seed);

/// Exact comparison of both sides plus the hypothesis verdict. When the
/// hypothesis FAILS the result is marked inapplicable rather than treated as
/// a counterexample.
VerifierResult verify(const Instance& instance, std::size_t cap, std::size_t samples,
                      std::uint64_t seed);

}  // namespace l0simons
