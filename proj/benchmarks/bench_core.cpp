#include <benchmark/benchmark.h>

#include "qv/simulate.hpp"

using namespace qv;

namespace {

void BM_kron_chain(benchmark::State& state) {
    const int factors = static_cast<int>(state.range(0));
    const cmatrix q = qft(2);
    for (auto _ : state) {
        cmatrix acc = q;
        for (int i = 1; i < factors; ++i) acc = kron(acc, q);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_kron_chain)->Arg(6)->Arg(9)->Arg(11);

void BM_hermitian_spectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Xoshiro256 rng(1);
    cmatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cxd(rng.uniform(), rng.uniform());
    const cmatrix h = (m + m.adjoint()) / 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_spectrum(h));
    }
}
BENCHMARK(BM_hermitian_spectrum)->Arg(64)->Arg(256);

void BM_build_ghz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build(StateSpec::ghz(n, 2)));
    }
}
BENCHMARK(BM_build_ghz)->Arg(4)->Arg(6)->Arg(8);

void BM_lambda_coefficients(benchmark::State& state) {
    const TestPartition p = family_partition(StateSpec::ghz(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_coefficients(p));
    }
}
BENCHMARK(BM_lambda_coefficients)->Arg(4)->Arg(6);

void BM_optimize_weights(benchmark::State& state) {
    const TestPartition p = family_partition(StateSpec::ghz(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_weights(p));
    }
}
BENCHMARK(BM_optimize_weights)->Arg(3)->Arg(5);

void BM_protocol_rounds(benchmark::State& state) {
    const StateSpec spec = StateSpec::bell_like(0.6);
    const BuiltState s = build(spec);
    TestPartition p = family_partition(spec);
    const WeightOptimum opt = optimize_weights(p);
    p.mu = opt.mu;
    const VerificationOperator v = assemble_omega(s, p);
    const SourceModel sigma = worst_case_state(v, s, 0.1);
    const long long rounds = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_protocol(s, p, sigma, rounds, 1, 7));
    }
    state.SetItemsProcessed(state.iterations() * rounds);
}
BENCHMARK(BM_protocol_rounds)->Arg(1000)->Arg(10000);

void BM_sequential_measure(benchmark::State& state) {
    const BuiltState s = build(StateSpec::ghz(3, 2));
    const AdaptivePlan plan = computational_plan(s.dims);
    Xoshiro256 rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sequential_measure(plan, s.psi.amps, rng));
    }
}
BENCHMARK(BM_sequential_measure);

}  // namespace

BENCHMARK_MAIN();
