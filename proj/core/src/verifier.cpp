#include "l0simons/verifier.hpp"

#include <algorithm>
#include <set>

#include "l0simons/errors.hpp"
#include "l0simons/lattice.hpp"
#include "l0simons/simplex.hpp"

namespace l0simons {

namespace {

Rv rv_div(const Rv& x, const Rv& y) {
    std::vector<Rat> values(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) values[a] = Rat(x.at(a) / y.at(a));
    return Rv(x.space(), std::move(values));
}

Rv rv_pow(const Rv& base, unsigned long exponent) {
    std::vector<Rat> values(base.size());
    for (std::size_t a = 0; a < base.size(); ++a) values[a] = rat_pow(base.at(a), exponent);
    return Rv(base.space(), std::move(values));
}

BaseFunction zero_table(const Instance& instance) {
    BaseFunction f;
    f.table.assign(instance.base_points.size(), Rv::zero(instance.space));
    return f;
}

/// Per atom: max over the available columns of prefix(b) + kappa * h(b).
Rv gamma_eval(const Instance& instance, const BaseFunction& prefix_sum,
              const BaseFunction& h, const Rv& kappa,
              const std::vector<std::vector<std::size_t>>& columns) {
    const std::size_t atoms = instance.space->size();
    std::vector<Rat> values(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        bool first = true;
        for (std::size_t b : columns[a]) {
            Rat candidate(prefix_sum.table[b].at(a) + kappa.at(a) * h.table[b].at(a));
            if (first || candidate > values[a]) {
                values[a] = candidate;
                first = false;
            }
        }
        if (first) throw DomainError("gamma evaluation: no column is reachable at atom '" +
                                     instance.space->atom(a).label + "'");
    }
    return Rv(instance.space, std::move(values));
}

std::vector<std::size_t> admissible_ids(const DistinctFunctions& distinct, std::size_t step) {
    // Functions occurring at any position >= step (1-based): the remaining
    // preamble ids plus every cycle id.
    std::set<std::size_t> ids;
    for (std::size_t p = step - 1; p < distinct.preamble_ids.size(); ++p) {
        ids.insert(distinct.preamble_ids[p]);
    }
    for (std::size_t id : distinct.cycle_ids) ids.insert(id);
    return std::vector<std::size_t>(ids.begin(), ids.end());
}

void require_valid_delta(const Rv& delta, const SpacePtr& space) {
    if (!same_space(delta.space(), space)) {
        throw StructuralError("delta lives on a different probability space");
    }
    if (!delta.strictly_positive()) {
        throw DomainError("delta must be strictly positive at every atom");
    }
}

}  // namespace

Rv compute_lhs(const Instance& instance, std::size_t cap) {
    std::vector<Selection> selections =
        instance.s_is_all() ? enumerate_selections(instance, cap) : *instance.selections;
    std::vector<Rv> limsups;
    limsups.reserve(selections.size());
    for (const Selection& z : selections) {
        std::vector<Rv> preamble;
        preamble.reserve(instance.functions.preamble().size());
        for (const BaseFunction& f : instance.functions.preamble()) {
            preamble.push_back(evaluate(instance, f, z));
        }
        std::vector<Rv> cycle;
        cycle.reserve(instance.functions.cycle().size());
        for (const BaseFunction& f : instance.functions.cycle()) {
            cycle.push_back(evaluate(instance, f, z));
        }
        limsups.push_back(ess_limsup(EventuallyPeriodicSeq<Rv>(std::move(preamble), std::move(cycle))));
    }
    return ess_sup(limsups);
}

std::pair<Rv, MixtureWeights> compute_rhs(const Instance& instance) {
    DistinctFunctions distinct = distinct_functions(instance.functions);
    std::vector<std::size_t> ids = distinct.all_ids();
    PayoffMatrix matrix = assemble_payoff_matrix(instance, distinct, ids);
    return essinf_over_hull(matrix);
}

Rv compute_M(const Instance& instance) {
    DistinctFunctions distinct = distinct_functions(instance.functions);
    const std::size_t atoms = instance.space->size();
    std::vector<Rat> values(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
        bool first = true;
        for (const BaseFunction& f : distinct.tables) {
            for (const Rv& profile : f.table) {
                if (first || profile.at(a) > values[a]) {
                    values[a] = profile.at(a);
                    first = false;
                }
            }
        }
        if (first) throw DomainError("compute_M: the instance has no function values");
    }
    return Rv(instance.space, std::move(values));
}

Rv choose_lambda(const Rv& m, const Rv& bound, const Rv& delta) {
    if (!same_space(m.space(), bound.space())) {
        throw StructuralError("choose_lambda: m and M live on different spaces");
    }
    require_valid_delta(delta, m.space());
    if (!leq(m, bound)) throw DomainError("choose_lambda: M must dominate m");
    std::vector<Rat> values(m.size());
    for (std::size_t a = 0; a < m.size(); ++a) {
        values[a] = Rat(delta.at(a) / (bound.at(a) - m.at(a) + Rat(3) * delta.at(a)));
    }
    return Rv(m.space(), std::move(values));
}

Rv default_delta(const Rv& m, const Rv& bound) {
    std::vector<Rat> values(m.size());
    for (std::size_t a = 0; a < m.size(); ++a) {
        values[a] = Rat((bound.at(a) - m.at(a) + 1) / 10);
    }
    return Rv(m.space(), std::move(values));
}

std::size_t default_steps(const Instance& instance, const Rv& delta, const Rv& lambda) {
    constexpr std::size_t kStepCap = 100000;
    std::size_t needed = 1;
    for (std::size_t a = 0; a < instance.space->size(); ++a) {
        Rat tail(instance.epsilon.at(a) / (Rat(1) - lambda.at(a)));
        std::size_t n = 0;
        while (tail >= delta.at(a)) {
            tail *= lambda.at(a);
            ++n;
            if (n > kStepCap) {
                throw ResourceError("tail bound does not drop below delta within " +
                                    std::to_string(kStepCap) + " steps");
            }
        }
        needed = std::max(needed, n);
    }
    return std::max(needed, instance.functions.preamble().size() + 1);
}

Rv gamma_value(const Instance& instance, std::span<const BaseFunction> prefix,
               const BaseFunction& h, const Rv& lambda) {
    const std::size_t bases = instance.base_points.size();
    if (h.table.size() != bases) {
        throw StructuralError("gamma_value: candidate table does not cover the base points");
    }
    BaseFunction prefix_sum = zero_table(instance);
    Rv power = Rv::constant(instance.space, Rat(1));
    for (const BaseFunction& g : prefix) {
        if (g.table.size() != bases) {
            throw StructuralError("gamma_value: prefix table does not cover the base points");
        }
        for (std::size_t b = 0; b < bases; ++b) {
            prefix_sum.table[b] = prefix_sum.table[b] + power * g.table[b];
        }
        power = power * lambda;
    }
    return gamma_eval(instance, prefix_sum, h, power, per_atom_columns(instance));
}

GSequence construct_g_sequence(const Instance& instance, const Rv& delta,
                               const Rv& lambda, std::size_t steps) {
    if (steps == 0) throw DomainError("construct_g_sequence: at least one step required");
    require_valid_delta(delta, instance.space);
    if (!lambda.strictly_positive() || !lt(lambda, Rv::constant(instance.space, Rat(1)))) {
        throw DomainError("construct_g_sequence: lambda must satisfy 0 < lambda < 1");
    }

    DistinctFunctions distinct = distinct_functions(instance.functions);
    std::vector<std::vector<std::size_t>> columns = per_atom_columns(instance);
    const std::size_t atoms = instance.space->size();
    const std::size_t bases = instance.base_points.size();

    GSequence out;
    BaseFunction running_sum = zero_table(instance);  // s_{n-1}
    Rv power = Rv::constant(instance.space, Rat(1));  // lambda^{n-1}

    for (std::size_t n = 1; n <= steps; ++n) {
        GStep step(instance.space);
        step.ids = admissible_ids(distinct, n);

        std::vector<Rat> gamma_values(atoms);
        step.weights.resize(atoms);
        for (std::size_t a = 0; a < atoms; ++a) {
            std::vector<std::vector<Rat>> payoff(step.ids.size(),
                                                 std::vector<Rat>(columns[a].size()));
            std::vector<Rat> offsets(columns[a].size());
            for (std::size_t c = 0; c < columns[a].size(); ++c) {
                std::size_t b = columns[a][c];
                offsets[c] = running_sum.table[b].at(a);
                for (std::size_t j = 0; j < step.ids.size(); ++j) {
                    payoff[j][c] = distinct.tables[step.ids[j]].table[b].at(a);
                }
            }
            GamePoint point = solve_matrix_game(payoff, offsets, power.at(a));
            gamma_values[a] = std::move(point.value);
            step.weights[a] = std::move(point.weights);
        }
        step.gamma = Rv(instance.space, std::move(gamma_values));

        // Materialize g_n over every base point.
        BaseFunction g;
        g.table.reserve(bases);
        for (std::size_t b = 0; b < bases; ++b) {
            std::vector<Rat> values(atoms, Rat(0));
            for (std::size_t a = 0; a < atoms; ++a) {
                for (std::size_t j = 0; j < step.ids.size(); ++j) {
                    values[a] += step.weights[a][j] *
                                 distinct.tables[step.ids[j]].table[b].at(a);
                }
            }
            g.table.emplace_back(instance.space, std::move(values));
        }

        // Consistency check of the solver against an independent evaluation
        // of the objective at the chosen weights; exact minimization makes
        // this identically zero.
        Rv reevaluated = gamma_eval(instance, running_sum, g, power, columns);
        step.optimality_slack = reevaluated - step.gamma;

        BaseFunction s_n;
        s_n.table.reserve(bases);
        for (std::size_t b = 0; b < bases; ++b) {
            s_n.table.push_back(running_sum.table[b] + power * g.table[b]);
        }

        out.steps.push_back(std::move(step));
        out.mixtures.push_back(std::move(g));
        out.prefix_sums.push_back(s_n);
        running_sum = std::move(s_n);
        power = power * lambda;
    }
    return out;
}

ProofTrace trace_proof(const Instance& instance, std::optional<Rv> delta_opt,
                       std::optional<std::size_t> steps_opt, std::size_t samples,
                       std::uint64_t seed) {
    ProofTrace trace(instance.space);
    trace.hypothesis = check_hypothesis(instance, samples, seed);
    if (trace.hypothesis.verdict == HypothesisVerdict::Fails) {
        throw HypothesisFailure(trace.hypothesis);
    }

    trace.m = compute_rhs(instance).first;
    trace.bound = compute_M(instance);
    trace.delta = delta_opt ? *delta_opt : default_delta(trace.m, trace.bound);
    require_valid_delta(trace.delta, instance.space);
    trace.lambda = choose_lambda(trace.m, trace.bound, trace.delta);

    const Rv one = Rv::constant(instance.space, Rat(1));
    const Rv two_delta = Rat(2) * trace.delta;
    {
        Rv left = trace.m - trace.delta * (one + trace.lambda) - trace.bound * trace.lambda;
        Rv right = (trace.m - two_delta) * (one - trace.lambda);
        trace.lambda_certificate = left - right;
    }

    const std::size_t required = default_steps(instance, trace.delta, trace.lambda);
    trace.steps = steps_opt ? *steps_opt : required;
    if (trace.steps < required) {
        throw ResourceError("steps=" + std::to_string(trace.steps) +
                            " is too small: the tail bound requires at least " +
                            std::to_string(required) + " steps");
    }

    trace.tail_bound = rv_div(instance.epsilon * rv_pow(trace.lambda, trace.steps),
                              one - trace.lambda);

    GSequence gseq = construct_g_sequence(instance, trace.delta, trace.lambda, trace.steps);
    const std::vector<std::vector<std::size_t>> columns = per_atom_columns(instance);
    const std::size_t atoms = instance.space->size();
    const std::size_t n_steps = trace.steps;

    const Rv zero = Rv::zero(instance.space);
    const Rv telescope_floor = trace.m - trace.delta * (one + trace.lambda);
    const Rv two_tau = Rat(2) * trace.tail_bound;
    const Rv final_floor = trace.m - two_delta - two_tau;
    const Rv gamma_last = gseq.steps.back().gamma;

    trace.trace.reserve(n_steps);
    Rv power = Rv::constant(instance.space, Rat(1));  // lambda^{n-1}
    for (std::size_t n = 1; n <= n_steps; ++n) {
        const GStep& g = gseq.steps[n - 1];
        TraceStep step(instance.space);
        step.ids = g.ids;
        step.weights = g.weights;
        step.gamma = g.gamma;
        step.optimality_slack = g.optimality_slack;

        const Rv& gamma_prev = (n >= 2) ? gseq.steps[n - 2].gamma : zero;
        step.telescope_slack = rv_div(step.gamma - gamma_prev, power) - telescope_floor;
        step.tail_sum_slack = gamma_last + trace.tail_bound - gamma_prev -
                           rv_div(power, one - trace.lambda) * telescope_floor;

        if (n < n_steps) {
            // Candidate (g_n + lambda * g_{n+1}) / (1 + lambda), still an
            // admissible mixture at step n.
            const BaseFunction& gn = gseq.mixtures[n - 1];
            const BaseFunction& gnext = gseq.mixtures[n];
            BaseFunction blend;
            blend.table.reserve(gn.table.size());
            for (std::size_t b = 0; b < gn.table.size(); ++b) {
                blend.table.push_back(
                    rv_div(gn.table[b] + trace.lambda * gnext.table[b], one + trace.lambda));
            }
            const BaseFunction& prev_sum =
                (n >= 2) ? gseq.prefix_sums[n - 2] : zero_table(instance);
            Rv blended_gamma = gamma_eval(instance, prev_sum, blend, power, columns);
            std::vector<Rat> margin(atoms);
            for (std::size_t a = 0; a < atoms; ++a) {
                margin[a] = trace.delta.at(a) * rat_pow(Rat(trace.lambda.at(a) / 2), n);
            }
            step.blend_slack = blended_gamma + Rv(instance.space, std::move(margin)) - step.gamma;
        }
        trace.trace.push_back(std::move(step));
        power = power * trace.lambda;
    }

    // z0: per-atom argmax of the truncated sum over S, lowest index first.
    const BaseFunction& s_last = gseq.prefix_sums.back();
    trace.z0.choice.assign(atoms, 0);
    if (instance.s_is_all()) {
        for (std::size_t a = 0; a < atoms; ++a) {
            std::size_t best = 0;
            for (std::size_t b = 1; b < s_last.table.size(); ++b) {
                if (s_last.table[b].at(a) > s_last.table[best].at(a)) best = b;
            }
            trace.z0.choice[a] = best;
        }
        trace.z0_in_s = true;
    } else {
        const std::vector<Selection>& pool = *instance.selections;
        for (std::size_t a = 0; a < atoms; ++a) {
            std::size_t best_k = 0;
            for (std::size_t k = 1; k < pool.size(); ++k) {
                if (s_last.table[pool[k].choice[a]].at(a) >
                    s_last.table[pool[best_k].choice[a]].at(a)) {
                    best_k = k;
                }
            }
            trace.z0.choice[a] = pool[best_k].choice[a];
        }
        trace.z0_in_s = std::find(pool.begin(), pool.end(), trace.z0) != pool.end();
    }

    for (std::size_t n = 1; n <= n_steps; ++n) {
        const BaseFunction& gn = gseq.mixtures[n - 1];
        std::vector<Rat> at_z0(atoms);
        for (std::size_t a = 0; a < atoms; ++a) {
            at_z0[a] = gn.table[trace.z0.choice[a]].at(a);
        }
        trace.trace[n - 1].g_at_z0_slack = Rv(instance.space, std::move(at_z0)) - final_floor;
    }

    trace.mixtures_strictly_positive = true;
    for (const TraceStep& step : trace.trace) {
        for (const auto& per_atom : step.weights) {
            for (const Rat& w : per_atom) {
                if (sgn(w) <= 0) trace.mixtures_strictly_positive = false;
            }
        }
    }

    {
        std::vector<Rv> preamble;
        for (const BaseFunction& f : instance.functions.preamble()) {
            preamble.push_back(evaluate(instance, f, trace.z0));
        }
        std::vector<Rv> cycle;
        for (const BaseFunction& f : instance.functions.cycle()) {
            cycle.push_back(evaluate(instance, f, trace.z0));
        }
        trace.esslimsup_at_z0 =
            ess_limsup(EventuallyPeriodicSeq<Rv>(std::move(preamble), std::move(cycle)));
    }
    trace.final_slack = trace.esslimsup_at_z0 - final_floor;

    const Rv zero_rv = Rv::zero(instance.space);
    bool ok = trace.lambda_certificate == zero_rv && leq(zero_rv, trace.final_slack);
    for (const TraceStep& step : trace.trace) {
        ok = ok && step.optimality_slack == zero_rv;
        ok = ok && leq(zero_rv, step.telescope_slack);
        ok = ok && leq(zero_rv, step.tail_sum_slack);
        ok = ok && leq(zero_rv, step.g_at_z0_slack);
        if (step.blend_slack) ok = ok && leq(zero_rv, *step.blend_slack);
    }
    trace.all_nonnegative = ok;
    return trace;
}

VerifierResult verify(const Instance& instance, std::size_t cap, std::size_t samples,
                      std::uint64_t seed) {
    VerifierResult result(instance.space);
    result.hypothesis = check_hypothesis(instance, samples, seed);
    result.applicable = result.hypothesis.verdict != HypothesisVerdict::Fails;
    result.lhs = compute_lhs(instance, cap);
    auto [rhs, weights] = compute_rhs(instance);
    result.rhs = rhs;
    result.rhs_weights = std::move(weights);
    result.holds = leq(result.rhs, result.lhs);
    result.slack = result.lhs - result.rhs;
    return result;
}

}  // namespace l0simons
