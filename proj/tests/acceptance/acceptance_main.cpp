// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit when anything fails. Expected to finish in well under two
// minutes on commodity hardware.

#include <cstdio>
#include <string>
#include <vector>

#include "l0simons/io.hpp"
#include "l0simons/oracle.hpp"
#include "l0simons/rng.hpp"
#include "l0simons/verifier.hpp"

#include "../support/oracles.hpp"

using namespace l0simons;

namespace {

constexpr std::size_t kCap = 4096;
constexpr std::size_t kSamples = 8;

struct Criterion {
    std::string label;
    bool pass = false;
    std::string detail;
};

Shape sweep_shape(std::uint64_t seed) {
    // Up to 4 atoms and base points, preamble + cycle <= 5 tables.
    return Shape{1 + seed % 4, 1 + (seed / 4) % 4, (seed / 16) % 3, 1 + (seed / 48) % 3};
}

Shape tiny_shape(std::uint64_t seed) {
    return Shape{1 + seed % 3, 1 + (seed / 3) % 3, (seed / 9) % 2, 1 + (seed / 18) % 3};
}

BaseFunction constant_mixture(const Instance& instance, const DistinctFunctions& distinct,
                              const std::vector<Rat>& w) {
    BaseFunction out;
    for (std::size_t b = 0; b < instance.base_points.size(); ++b) {
        std::vector<Rat> values(instance.space->size(), Rat(0));
        for (std::size_t a = 0; a < values.size(); ++a) {
            for (std::size_t j = 0; j < distinct.tables.size(); ++j) {
                values[a] += w[j] * distinct.tables[j].table[b].at(a);
            }
        }
        out.table.emplace_back(instance.space, std::move(values));
    }
    return out;
}

std::vector<Rat> random_weights(SeededRng& rng, std::size_t count) {
    std::vector<Rat> w(count);
    Rat total(0);
    for (Rat& v : w) {
        v = Rat(rng.next_int(1, 9));
        total += v;
    }
    for (Rat& v : w) v /= total;
    return w;
}

Criterion criterion_theorem_sweep() {
    Criterion c{.label = "theorem sweep: 1000 seeded instances, S = ALL, exact"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        Instance instance = generate(seed, sweep_shape(seed));
        VerifierResult result = verify(instance, kCap, kSamples, seed);
        if (!result.holds || result.hypothesis.verdict != HypothesisVerdict::Holds) {
            ++failures;
        }
    }
    c.pass = failures == 0;
    c.detail = std::to_string(1000 - failures) + "/1000 hold";
    return c;
}

Criterion criterion_lhs_oracle() {
    Criterion c{.label = "oracle equivalence: compute_lhs == brute_lhs on 200 tiny instances"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Instance instance = generate(seed + 20000, tiny_shape(seed));
        if (!(compute_lhs(instance, kCap) == oracle::brute_lhs(instance, kCap))) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(200 - failures) + "/200 equal";
    return c;
}

Criterion criterion_rhs_sandwich() {
    Criterion c{.label = "oracle sandwich: 0 <= brute_rhs(200) - compute_rhs <= range/200, 200 instances"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        // Up to 3 distinct functions so the lattice bound range/k is a theorem
        // and the k=200 enumeration stays fast.
        Shape shape{1 + seed % 3, 2 + (seed / 3) % 3, 0, 1 + (seed / 9) % 3};
        Instance instance = generate(seed + 40000, shape);
        OracleComparison comparison = compare_with_oracle(instance, 200, kCap);
        if (!comparison.sandwich_ok) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(200 - failures) + "/200 within bounds";
    return c;
}

Criterion criterion_equality_tightness() {
    Criterion c{.label = "equality tightness: one distinct function means slack 0, 100 instances"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Instance instance = generate(seed + 60000,
                                     Shape{1 + seed % 4, 1 + (seed / 4) % 4, 0, 1});
        if (seed % 2 == 1) {
            // Repeat the lone cycle table in the preamble: still one id.
            instance.functions = EventuallyPeriodicSeq<BaseFunction>(
                {instance.functions.cycle()[0]}, instance.functions.cycle());
        }
        VerifierResult result = verify(instance, kCap, kSamples, 0);
        if (!(result.slack == Rv::zero(instance.space))) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(100 - failures) + "/100 tight";
    return c;
}

Criterion criterion_lambda_certificate() {
    Criterion c{.label = "lambda certificate: equality solution, 0 < lambda <= 1/3, 100 triples"};
    SeededRng rng(505);
    int failures = 0;
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + rng.next_below(3);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < n; ++i) {
            atoms.push_back({"w" + std::to_string(i + 1), Rat(1, static_cast<unsigned long>(n))});
        }
        auto space = ProbSpace::make(std::move(atoms));
        std::vector<Rat> mv(n), gap(n), dv(n);
        for (std::size_t a = 0; a < n; ++a) {
            mv[a] = testsupport::random_rat(rng);
            gap[a] = make_rat(rng.next_int(0, 12), rng.next_int(1, 4));
            dv[a] = make_rat(rng.next_int(1, 9), rng.next_int(1, 9));
        }
        Rv m(space, mv);
        Rv bound = m + Rv(space, gap);
        Rv delta(space, dv);
        Rv lambda = choose_lambda(m, bound, delta);

        Rv one = Rv::constant(space, Rat(1));
        Rv left = m - delta * (one + lambda) - bound * lambda;
        Rv right = (m - Rat(2) * delta) * (one - lambda);
        bool ok = (left - right == Rv::zero(space)) && lambda.strictly_positive() &&
                  leq(lambda, Rv::constant(space, Rat(1, 3)));
        if (!ok) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(100 - failures) + "/100 exact";
    return c;
}

Criterion criterion_trace_soundness() {
    Criterion c{.label = "proof-trace soundness: every recorded slack nonnegative, 100 instances"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Shape shape{1 + seed % 3, 1 + (seed / 3) % 3, (seed / 9) % 2, 1 + (seed / 18) % 3};
        Instance instance = generate(seed + 80000, shape);
        ProofTrace trace = trace_proof(instance, std::nullopt, std::nullopt, kSamples, 0);

        bool ok = trace.all_nonnegative;
        const Rv zero = Rv::zero(instance.space);
        for (const TraceStep& step : trace.trace) {
            ok = ok && step.optimality_slack == zero;              // exactly zero
            ok = ok && leq(zero, step.telescope_slack);
            ok = ok && leq(zero, step.tail_sum_slack);
            ok = ok && leq(zero, step.g_at_z0_slack);
            if (step.blend_slack) ok = ok && leq(zero, *step.blend_slack);
        }
        ok = ok && leq(zero, trace.final_slack);
        if (!ok) ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(100 - failures) + "/100 sound";
    return c;
}

Criterion criterion_scalar_reduction() {
    Criterion c{.label = "scalar reduction: one-atom instances match the classical check, 50 cases"};
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Shape shape{1, 1 + seed % 4, seed % 2, 1 + (seed / 2) % 2};
        Instance instance = generate(seed + 100000, shape);
        VerifierResult result = verify(instance, kCap, kSamples, 0);
        testsupport::ScalarSimons classical = testsupport::classical_one_atom_check(instance);
        if (!(result.lhs.at(0) == classical.lhs && result.rhs.at(0) == classical.rhs)) {
            ++failures;
        }
    }
    c.pass = failures == 0;
    c.detail = std::to_string(50 - failures) + "/50 match";
    return c;
}

Criterion criterion_lattice_laws() {
    Criterion c{.label = "lattice laws: idempotence, monotonicity, duality, directedness, 500 each"};
    SeededRng rng(909);
    auto space = ProbSpace::make(
        {{"w1", Rat(1, 3)}, {"w2", Rat(1, 3)}, {"w3", Rat(1, 3)}});
    auto random_rv = [&]() {
        std::vector<Rat> values;
        for (int i = 0; i < 3; ++i) values.push_back(testsupport::random_rat(rng));
        return Rv(space, std::move(values));
    };

    int failures = 0;
    for (int round = 0; round < 500; ++round) {
        std::vector<Rv> family;
        std::size_t count = 1 + rng.next_below(5);
        for (std::size_t i = 0; i < count; ++i) family.push_back(random_rv());

        std::vector<Rv> doubled = family;
        doubled.insert(doubled.end(), family.begin(), family.end());
        bool ok = ess_sup(doubled) == ess_sup(family);

        std::vector<Rv> prefix(family.begin(), family.begin() + 1 + rng.next_below(count));
        ok = ok && leq(ess_sup(prefix), ess_sup(family));

        std::vector<Rv> negated;
        for (const Rv& member : family) negated.push_back(-member);
        ok = ok && ess_inf(family) == -ess_sup(negated);
        if (!ok) ++failures;
    }

    for (std::uint64_t round = 0; round < 500; ++round) {
        Instance instance = generate(round + 120000, Shape{3, 3, 0, 2});
        DistinctFunctions distinct = distinct_functions(instance.functions);
        Rv lambda = Rv::constant(instance.space, testsupport::random_unit_interval(rng));
        std::vector<BaseFunction> prefix{
            constant_mixture(instance, distinct, random_weights(rng, distinct.tables.size()))};
        BaseFunction g =
            constant_mixture(instance, distinct, random_weights(rng, distinct.tables.size()));
        BaseFunction gp =
            constant_mixture(instance, distinct, random_weights(rng, distinct.tables.size()));

        Rv gamma_g = gamma_value(instance, prefix, g, lambda);
        Rv gamma_gp = gamma_value(instance, prefix, gp, lambda);
        std::vector<bool> mask(instance.space->size());
        for (std::size_t a = 0; a < mask.size(); ++a) mask[a] = gamma_g.at(a) <= gamma_gp.at(a);
        Event on(instance.space, mask);
        BaseFunction stitched;
        for (std::size_t b = 0; b < instance.base_points.size(); ++b) {
            stitched.table.push_back(
                concatenate({on, on.complement()}, {g.table[b], gp.table[b]}));
        }
        if (!(gamma_value(instance, prefix, stitched, lambda) ==
              pointwise_min(gamma_g, gamma_gp))) {
            ++failures;
        }
    }
    c.pass = failures == 0;
    c.detail = failures == 0 ? "all cases exact" : std::to_string(failures) + " failures";
    return c;
}

Criterion criterion_hull_dominance() {
    Criterion c{.label = "hull dominance: per-atom weights beat every constant vector, 100 instances"};
    SeededRng rng(333);
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Instance instance = generate(seed + 140000, Shape{2, 2 + seed % 2, 0, 1 + seed % 3});
        DistinctFunctions distinct = distinct_functions(instance.functions);
        Rv hull = compute_rhs(instance).first;

        // Constant weight vectors on a resolution-12 lattice (plus seeded
        // interior draws): the per-atom hull value must never exceed theirs.
        std::vector<std::vector<Rat>> vectors;
        const std::size_t count = distinct.tables.size();
        if (count == 1) {
            vectors.push_back({Rat(1)});
        } else {
            // Enumerate compositions of 12 into `count` parts for count <= 3.
            for (unsigned i = 0; i <= 12; ++i) {
                if (count == 2) {
                    vectors.push_back({make_rat(i, 12), make_rat(12 - i, 12)});
                } else {
                    for (unsigned j = 0; i + j <= 12; ++j) {
                        vectors.push_back(
                            {make_rat(i, 12), make_rat(j, 12), make_rat(12 - i - j, 12)});
                    }
                }
            }
            for (int extra = 0; extra < 6; ++extra) {
                vectors.push_back(random_weights(rng, count));
            }
        }

        for (const std::vector<Rat>& w : vectors) {
            BaseFunction mixed = constant_mixture(instance, distinct, w);
            for (std::size_t a = 0; a < instance.space->size(); ++a) {
                Rat value = mixed.table[0].at(a);
                for (std::size_t b = 1; b < mixed.table.size(); ++b) {
                    if (mixed.table[b].at(a) > value) value = mixed.table[b].at(a);
                }
                if (!(hull.at(a) <= value)) ++failures;
            }
        }
    }

    // The fixture where every constant vector loses somewhere: atom w1 plays
    // matching pennies, atom w2 has a dominated row; the hull reaches (1/2, 0).
    auto space = ProbSpace::make({{"w1", Rat(1, 2)}, {"w2", Rat(1, 2)}});
    BaseFunction f0{{Rv(space, {Rat(1), Rat(1)}), Rv(space, {Rat(0), Rat(1)})}};
    BaseFunction f1{{Rv(space, {Rat(0), Rat(0)}), Rv(space, {Rat(1), Rat(0)})}};
    Instance fixture{space,
                     {"a", "b"},
                     EventuallyPeriodicSeq<BaseFunction>({}, {f0, f1}),
                     Rv(space, {Rat(1), Rat(1)}),
                     std::nullopt};
    Rv hull = compute_rhs(fixture).first;
    bool fixture_ok = hull == Rv(space, {Rat(1, 2), Rat(0)});
    DistinctFunctions distinct = distinct_functions(fixture.functions);
    for (long i = 0; i <= 50; ++i) {
        std::vector<Rat> w{make_rat(i, 50), make_rat(50 - i, 50)};
        BaseFunction mixed = constant_mixture(fixture, distinct, w);
        bool strictly_worse_somewhere = false;
        for (std::size_t a = 0; a < 2; ++a) {
            Rat value = mixed.table[0].at(a);
            for (std::size_t b = 1; b < mixed.table.size(); ++b) {
                if (mixed.table[b].at(a) > value) value = mixed.table[b].at(a);
            }
            if (value > hull.at(a)) strictly_worse_somewhere = true;
            if (value < hull.at(a)) fixture_ok = false;
        }
        if (!strictly_worse_somewhere) fixture_ok = false;
    }

    c.pass = failures == 0 && fixture_ok;
    c.detail = fixture_ok ? "dominance exact; fixture strict at some atom"
                          : "fixture failed";
    return c;
}

Criterion criterion_hypothesis_checker() {
    Criterion c{.label = "hypothesis checker: restricted pennies FAILS with witness; ALL HOLDS"};

    auto space = ProbSpace::make({{"w1", Rat(1)}});
    BaseFunction f1{{Rv(space, {Rat(1)}), Rv(space, {Rat(0)})}};
    BaseFunction f2{{Rv(space, {Rat(0)}), Rv(space, {Rat(1)})}};
    Instance restricted{space,
                        {"a", "b"},
                        EventuallyPeriodicSeq<BaseFunction>({}, {f1, f2}),
                        Rv(space, {Rat(1)}),
                        std::vector<Selection>{Selection{{0}}}};

    HypothesisReport report = check_hypothesis(restricted, kSamples, 1);
    bool ok = report.verdict == HypothesisVerdict::Fails && report.witness.has_value();

    if (ok) {
        // Re-verify the witness by direct enumeration: strictly positive,
        // sums to one, and its supremum over E escapes every member of S.
        const std::vector<Rat>& w = *report.witness;
        Rat total(0);
        for (const Rat& v : w) {
            ok = ok && sgn(v) > 0;
            total += v;
        }
        ok = ok && total == 1;
        DistinctFunctions distinct = distinct_functions(restricted.functions);
        Rat at_a(0), at_b(0);
        for (std::size_t j = 0; j < w.size(); ++j) {
            at_a += w[j] * distinct.tables[j].table[0].at(0);
            at_b += w[j] * distinct.tables[j].table[1].at(0);
        }
        Rat sup = at_a >= at_b ? at_a : at_b;
        ok = ok && at_a != sup;  // the only member of S misses the supremum
    }

    for (std::uint64_t seed = 1; seed <= 20 && ok; ++seed) {
        Instance instance = generate(seed + 160000, tiny_shape(seed));
        ok = ok && check_hypothesis(instance, kSamples, seed).verdict ==
                       HypothesisVerdict::Holds;
    }
    c.pass = ok;
    c.detail = ok ? "witness verified by enumeration" : "checker contract violated";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion_theorem_sweep());
    results.push_back(criterion_lhs_oracle());
    results.push_back(criterion_rhs_sandwich());
    results.push_back(criterion_equality_tightness());
    results.push_back(criterion_lambda_certificate());
    results.push_back(criterion_trace_soundness());
    results.push_back(criterion_scalar_reduction());
    results.push_back(criterion_lattice_laws());
    results.push_back(criterion_hull_dominance());
    results.push_back(criterion_hypothesis_checker());

    int failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        std::printf("[%2zu/10] %-78s %s (%s)\n", i + 1, c.label.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
        if (!c.pass) ++failed;
    }
    if (failed == 0) {
        std::printf("acceptance: all %zu criteria pass\n", results.size());
    } else {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, results.size());
    }
    return failed == 0 ? 0 : 1;
}
