#include <benchmark/benchmark.h>

#include <vector>

#include "odsup/bootstrap.hpp"
#include "odsup/dgp.hpp"
#include "odsup/report.hpp"
#include "odsup/rng.hpp"

namespace {

odsup::ObservationSet sample(std::size_t n) {
    odsup::DgpSpec spec;
    spec.model = odsup::DgpModel::M0;
    spec.n = n;
    spec.p = 5;
    spec.seed = 1;
    return odsup::generate(spec);
}

odsup::JackknifeTerms terms_for(std::size_t n) {
    odsup::JackknifeTerms terms;
    terms.n = n;
    terms.a.resize(n);
    odsup::rng::Stream stream(3, 0);
    for (double& v : terms.a) v = stream.next_normal();
    return terms;
}

void BM_LagSums(benchmark::State& state) {
    const auto obs = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(odsup::lag_sums(odsup::Kernel::expneg(), obs));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LagSums)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_ReplicateNaive(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto terms = terms_for(n);
    odsup::rng::Stream stream(5, 0);
    std::vector<double> eps(n);
    for (double& v : eps) v = stream.next_normal();
    for (auto _ : state) {
        benchmark::DoNotOptimize(odsup::replicate_statistic_naive(eps, terms));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReplicateNaive)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_ReplicateFast(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto terms = terms_for(n);
    odsup::rng::Stream stream(5, 0);
    std::vector<double> eps(n);
    for (double& v : eps) v = stream.next_normal();
    for (auto _ : state) {
        benchmark::DoNotOptimize(odsup::replicate_statistic_fast(eps, terms));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReplicateFast)->RangeMultiplier(2)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_FullTest(benchmark::State& state) {
    const auto obs = sample(static_cast<std::size_t>(state.range(0)));
    odsup::TestOptions options;
    options.replicates = 300;
    options.seed = 11;
    for (auto _ : state) {
        benchmark::DoNotOptimize(odsup::run_iid_test(obs, odsup::Kernel::expneg(), options));
    }
}
BENCHMARK(BM_FullTest)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_NormalStream(benchmark::State& state) {
    odsup::rng::Stream stream(9, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_normal());
    }
}
BENCHMARK(BM_NormalStream);

}  // namespace

BENCHMARK_MAIN();
