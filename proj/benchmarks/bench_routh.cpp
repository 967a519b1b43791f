#include <benchmark/benchmark.h>

#include "routh/identities.hpp"
#include "routh/oracle.hpp"
#include "routh/routh.hpp"

using namespace routh;

namespace {

const RatioTuple kTuple(Rational::make(1, 2), Rational::make(3, 7), Rational::make(11, 5), Rational::make(2, 9));

void BM_RationalMulAdd(benchmark::State& state) {
    const Rational a = Rational::make(355, 113), b = Rational::make(-22, 7);
    for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RationalMulAdd);

void BM_ClosedForms(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(v_klmn_closed(kTuple));
        benchmark::DoNotOptimize(v_pqrs_closed(kTuple));
    }
}
BENCHMARK(BM_ClosedForms);

void BM_BuildTetraSection(benchmark::State& state) {
    const Tetra base = oracle::sample_bases(7, 1).front();
    for (auto _ : state) benchmark::DoNotOptimize(build_tetra_section(base, kTuple));
}
BENCHMARK(BM_BuildTetraSection);

void BM_OracleSectionVolumes(benchmark::State& state) {
    const Tetra base = oracle::sample_bases(7, 1).front();
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_section_volumes(base, kTuple));
}
BENCHMARK(BM_OracleSectionVolumes);

void BM_IdentityKlmn(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity_eq3());
}
BENCHMARK(BM_IdentityKlmn)->Unit(benchmark::kMillisecond);

void BM_IdentityPqrs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity_eq4());
}
BENCHMARK(BM_IdentityPqrs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
