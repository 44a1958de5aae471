#include <doctest.h>

#include <vector>

#include "l0simons/errors.hpp"
#include "l0simons/lattice.hpp"
#include "l0simons/rng.hpp"
#include "l0simons/rv.hpp"

#include "../support/oracles.hpp"

using namespace l0simons;

namespace {

SpacePtr two_atoms() {
    return ProbSpace::make({{"w1", Rat(1, 2)}, {"w2", Rat(1, 2)}});
}

SpacePtr uniform_space(std::size_t n) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({"w" + std::to_string(i + 1), Rat(1, static_cast<unsigned long>(n))});
    }
    return ProbSpace::make(std::move(atoms));
}

Rv rv(const SpacePtr& space, std::vector<long> values) {
    std::vector<Rat> out;
    for (long v : values) out.emplace_back(v);
    return Rv(space, std::move(out));
}

Rv random_rv(const SpacePtr& space, SeededRng& rng) {
    std::vector<Rat> values;
    for (std::size_t i = 0; i < space->size(); ++i) values.push_back(testsupport::random_rat(rng));
    return Rv(space, std::move(values));
}

}  // namespace

TEST_CASE("probability space invariants") {
    CHECK_THROWS_AS(ProbSpace::make({{"w1", Rat(1, 2)}, {"w2", Rat(1, 3)}}), DomainError);
    CHECK_THROWS_AS(ProbSpace::make({{"w1", Rat(3, 2)}, {"w2", Rat(-1, 2)}}), DomainError);
    CHECK_THROWS_AS(ProbSpace::make({{"w1", Rat(1, 2)}, {"w1", Rat(1, 2)}}), DomainError);
    CHECK_THROWS_AS(ProbSpace::make({}), DomainError);

    ProbSpace bad({{"w1", Rat(9, 10)}});
    auto problems = bad.diagnostics();
    REQUIRE(problems.size() == 1);
    CHECK(problems[0] == "masses sum to 9/10, expected 1/1");
}

TEST_CASE("dominance is a partial order") {
    auto space = two_atoms();
    CHECK(leq(rv(space, {1, 2}), rv(space, {1, 3})));
    CHECK(!leq(rv(space, {1, 2}), rv(space, {2, 1})));
    CHECK(!leq(rv(space, {2, 1}), rv(space, {1, 2})));  // incomparable pair
    CHECK(lt(rv(space, {0, 0}), rv(space, {1, 1})));
    CHECK(!lt(rv(space, {0, 0}), rv(space, {1, 0})));

    Event only_w2 = Event::from_labels(space, {"w2"});
    CHECK(leq_on(rv(space, {5, 1}), rv(space, {0, 2}), only_w2));
    CHECK_THROWS_AS(leq_on(rv(space, {0, 0}), rv(space, {1, 1}), Event::none(space)),
                    DomainError);

    auto other = two_atoms();  // structurally equal space is compatible
    CHECK(leq(rv(space, {0, 0}), rv(other, {0, 0})));
    auto different = ProbSpace::make({{"x", Rat(1)}});
    CHECK_THROWS_AS(leq(rv(space, {0, 0}), rv(different, {0})), StructuralError);
}

TEST_CASE("ess_sup basics") {
    auto space = two_atoms();
    std::vector<Rv> family{rv(space, {1, 3}), rv(space, {2, 2})};
    CHECK(ess_sup(family) == rv(space, {2, 3}));
    CHECK(ess_inf(family) == rv(space, {1, 2}));

    std::vector<Rv> singleton{rv(space, {7, -1})};
    CHECK(ess_sup(singleton) == rv(space, {7, -1}));

    CHECK_THROWS_AS(ess_sup(std::vector<Rv>{}), DomainError);
}

TEST_CASE("ess_sup equals an independent per-atom scan on seeded families") {
    auto space = uniform_space(4);
    SeededRng rng(2024);
    for (int round = 0; round < 50; ++round) {
        std::vector<Rv> family;
        std::size_t count = 1 + rng.next_below(6);
        for (std::size_t i = 0; i < count; ++i) family.push_back(random_rv(space, rng));

        Rv sup = ess_sup(family);
        for (std::size_t a = 0; a < space->size(); ++a) {
            Rat expected = family[0].at(a);
            for (const Rv& member : family) {
                if (member.at(a) > expected) expected = member.at(a);
            }
            CHECK(sup.at(a) == expected);
        }
    }
}

TEST_CASE("lattice laws: duality, idempotence, monotonicity, least upper bound") {
    auto space = uniform_space(3);
    SeededRng rng(99);
    for (int round = 0; round < 500; ++round) {
        std::vector<Rv> family;
        std::size_t count = 1 + rng.next_below(5);
        for (std::size_t i = 0; i < count; ++i) family.push_back(random_rv(space, rng));

        // Duality.
        std::vector<Rv> negated;
        for (const Rv& member : family) negated.push_back(-member);
        CHECK(ess_inf(family) == -ess_sup(negated));

        // Idempotence: duplicating members changes nothing.
        std::vector<Rv> doubled = family;
        doubled.insert(doubled.end(), family.begin(), family.end());
        CHECK(ess_sup(doubled) == ess_sup(family));

        // Monotonicity in the family.
        std::vector<Rv> prefix(family.begin(), family.begin() + 1 + rng.next_below(count));
        CHECK(leq(ess_sup(prefix), ess_sup(family)));

        // Any dominating rv dominates the supremum.
        Rv dominator = ess_sup(family) + random_rv(space, rng).abs();
        for (const Rv& member : family) REQUIRE(leq(member, dominator));
        CHECK(leq(ess_sup(family), dominator));
    }
}

TEST_CASE("tail limsup ignores the preamble") {
    auto one = ProbSpace::make({{"w1", Rat(1)}});
    auto space = two_atoms();

    EventuallyPeriodicSeq<Rv> constant({}, {rv(space, {4, -2})});
    CHECK(ess_limsup(constant) == rv(space, {4, -2}));

    EventuallyPeriodicSeq<Rv> with_preamble({rv(one, {5})}, {rv(one, {0}), rv(one, {1})});
    CHECK(ess_limsup(with_preamble) == rv(one, {1}));

    EventuallyPeriodicSeq<Rv> cycle2({}, {rv(space, {0, 2}), rv(space, {1, 0})});
    CHECK(ess_limsup(cycle2) == rv(space, {1, 2}));
    CHECK(ess_liminf(cycle2) == rv(space, {0, 0}));

    CHECK_THROWS_AS(EventuallyPeriodicSeq<Rv>({rv(one, {1})}, {}), DomainError);
}

TEST_CASE("tail limsup agrees with the inf-of-tail-sups definition") {
    auto space = uniform_space(3);
    SeededRng rng(7);
    for (int round = 0; round < 200; ++round) {
        std::vector<Rv> preamble;
        std::size_t p = rng.next_below(4);
        for (std::size_t i = 0; i < p; ++i) preamble.push_back(random_rv(space, rng));
        std::vector<Rv> cycle;
        std::size_t c = 1 + rng.next_below(4);
        for (std::size_t i = 0; i < c; ++i) cycle.push_back(random_rv(space, rng));
        EventuallyPeriodicSeq<Rv> seq(preamble, cycle);

        // sup over m >= n is constant once n passes the preamble, so the inf
        // over n is reached within the first p+1 tail suprema.
        std::vector<Rv> tail_sups;
        for (std::size_t n = 0; n <= p; ++n) {
            std::vector<Rv> tail(cycle);
            for (std::size_t k = n; k < p; ++k) tail.push_back(preamble[k]);
            tail_sups.push_back(ess_sup(tail));
        }
        CHECK(ess_limsup(seq) == ess_inf(tail_sups));
        CHECK(leq(ess_liminf(seq), ess_limsup(seq)));
    }
}

TEST_CASE("concatenate stitches pieces along a partition") {
    auto space = two_atoms();
    Event first = Event::from_labels(space, {"w1"});
    CHECK(concatenate({first, first.complement()}, {rv(space, {1, 3}), rv(space, {2, 2})}) ==
          rv(space, {1, 2}));
    CHECK(concatenate({Event::full(space)}, {rv(space, {9, 9})}) == rv(space, {9, 9}));

    CHECK_THROWS_AS(concatenate({first, Event::full(space)},
                                {rv(space, {0, 0}), rv(space, {1, 1})}),
                    DomainError);  // overlap at w1
    CHECK_THROWS_AS(concatenate({first, first}, {rv(space, {0, 0}), rv(space, {1, 1})}),
                    DomainError);  // w2 uncovered
}

TEST_CASE("ball membership") {
    auto space = two_atoms();
    CHECK(in_ball(rv(space, {1, -2}), rv(space, {2, 2})));
    CHECK(!in_ball(rv(space, {3, 0}), rv(space, {2, 2})));
    CHECK_THROWS_AS(in_ball(rv(space, {0, 0}), rv(space, {0, 1})), DomainError);
}

TEST_CASE("clipping into the ball always lands inside, and sups stay inside") {
    auto space = uniform_space(4);
    SeededRng rng(31);
    for (int round = 0; round < 100; ++round) {
        std::vector<Rat> radius;
        for (std::size_t a = 0; a < space->size(); ++a) {
            radius.push_back(make_rat(rng.next_int(1, 6), rng.next_int(1, 3)));
        }
        Rv epsilon(space, radius);

        std::vector<Rv> clipped;
        for (int i = 0; i < 5; ++i) {
            Rv raw = random_rv(space, rng) + random_rv(space, rng);
            clipped.push_back(pointwise_max(-epsilon, pointwise_min(epsilon, raw)));
            REQUIRE(in_ball(clipped.back(), epsilon));
        }
        CHECK(in_ball(ess_sup(clipped), epsilon));
    }
}
