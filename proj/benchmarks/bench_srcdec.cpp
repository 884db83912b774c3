#include <benchmark/benchmark.h>

#include <string>

#include "srcdec/groebner.hpp"
#include "srcdec/ideal_ops.hpp"
#include "srcdec/src_decomp.hpp"
#include "srcdec/system_io.hpp"

using namespace srcdec;

namespace {

SystemFile corpus(const std::string& name) {
    return load_system(std::string(SRCDEC_BENCH_CORPUS) + "/" + name + ".sys");
}

void BM_GroebnerBasis(benchmark::State& state, const std::string& name) {
    const auto sys = corpus(name);
    for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(sys.gens));
}

void BM_Decompose(benchmark::State& state, const std::string& name) {
    const auto sys = corpus(name);
    std::size_t pairs = 0;
    for (auto _ : state) {
        auto d = src_decompose(sys.gens);
        pairs = d.pairs.size();
        benchmark::DoNotOptimize(d);
    }
    state.counters["pairs"] = static_cast<double>(pairs);
}

void BM_Verify(benchmark::State& state, const std::string& name) {
    const auto sys = corpus(name);
    const auto d = src_decompose(sys.gens);
    for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(sys.gens, d));
}

void BM_SaturateByPoly(benchmark::State& state) {
    const auto sys = corpus("ex5_2");
    const auto g = groebner_basis(sys.gens);
    const auto& ord = sys.ordering;
    const auto w = Polynomial::variable(ord, *ord->index_of("w"));
    for (auto _ : state) benchmark::DoNotOptimize(saturate_by_poly(g, w));
}

void BM_FactorSplit(benchmark::State& state) {
    const auto sys = corpus("rand_2");
    Polynomial p = Polynomial::constant(sys.ordering, 1);
    for (const auto& g : sys.gens.gens()) p *= g;
    for (auto _ : state) benchmark::DoNotOptimize(factor_split(p));
}

}  // namespace

BENCHMARK_CAPTURE(BM_GroebnerBasis, ex5_2, std::string("ex5_2"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroebnerBasis, katsura4, std::string("katsura4"))
    ->Unit(benchmark::kSecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(BM_Decompose, ex3_1, std::string("ex3_1"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, ex5_1, std::string("ex5_1"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, ex5_2, std::string("ex5_2"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, rand_4, std::string("rand_4"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, cyclic5, std::string("cyclic5"))
    ->Unit(benchmark::kSecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(BM_Verify, ex5_2, std::string("ex5_2"))->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SaturateByPoly)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FactorSplit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
