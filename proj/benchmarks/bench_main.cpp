#include <benchmark/benchmark.h>

#include "l0simons/io.hpp"
#include "l0simons/oracle.hpp"
#include "l0simons/rng.hpp"
#include "l0simons/verifier.hpp"

using namespace l0simons;

namespace {

std::vector<std::vector<Rat>> random_payoff(std::uint64_t seed, std::size_t rows,
                                            std::size_t cols) {
    SeededRng rng(seed);
    std::vector<std::vector<Rat>> out(rows, std::vector<Rat>(cols));
    for (auto& row : out) {
        for (Rat& v : row) {
            long q = rng.next_int(1, 8);
            v = make_rat(rng.next_int(-q, q), q);
        }
    }
    return out;
}

}  // namespace

static void BM_MatrixGame(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto payoff = random_payoff(17, n, n);
    std::vector<Rat> offsets(n, Rat(0));
    for (auto _ : state) {
        auto point = solve_matrix_game(payoff, offsets, Rat(1));
        benchmark::DoNotOptimize(point.value);
    }
}
BENCHMARK(BM_MatrixGame)->DenseRange(2, 10, 2);

static void BM_EssSup(benchmark::State& state) {
    SeededRng rng(3);
    std::vector<Atom> atoms;
    for (int i = 0; i < 16; ++i) atoms.push_back({"w" + std::to_string(i), Rat(1, 16)});
    auto space = ProbSpace::make(std::move(atoms));
    std::vector<Rv> family;
    for (long k = 0; k < state.range(0); ++k) {
        std::vector<Rat> values;
        for (int i = 0; i < 16; ++i) values.push_back(make_rat(rng.next_int(-50, 50), 7));
        family.emplace_back(space, std::move(values));
    }
    for (auto _ : state) {
        Rv sup = ess_sup(family);
        benchmark::DoNotOptimize(sup.at(0));
    }
}
BENCHMARK(BM_EssSup)->Arg(8)->Arg(64)->Arg(256);

static void BM_Verify(benchmark::State& state) {
    Instance instance = generate(11, Shape{4, 4, 1, 3});
    for (auto _ : state) {
        VerifierResult result = verify(instance, 4096, 8, 0);
        benchmark::DoNotOptimize(result.holds);
    }
}
BENCHMARK(BM_Verify);

static void BM_TraceProof(benchmark::State& state) {
    Instance instance = generate(11, Shape{3, 3, 1, 2});
    for (auto _ : state) {
        ProofTrace trace = trace_proof(instance, std::nullopt, std::nullopt, 8, 0);
        benchmark::DoNotOptimize(trace.all_nonnegative);
    }
}
BENCHMARK(BM_TraceProof);

static void BM_BruteRhsGrid(benchmark::State& state) {
    Instance instance = generate(5, Shape{2, 3, 0, 2});
    const unsigned grid = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Rv value = oracle::brute_rhs(instance, oracle::GridSpec{grid});
        benchmark::DoNotOptimize(value.at(0));
    }
}
BENCHMARK(BM_BruteRhsGrid)->Arg(20)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
