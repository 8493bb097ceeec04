#include "g2an/frobenius.hpp"
#include "g2an/g2.hpp"
#include "g2an/poly.hpp"
#include "g2an/residues.hpp"

#include <benchmark/benchmark.h>

using namespace g2an;

namespace {

ParamPoint sampled(int n) { return sample_admissible(n, 42, 1, 256).at(0); }

void bm_find_roots_deg9(benchmark::State& state) {
    Poly dlam = build_superpotential(sampled(8)).derivative();
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(dlam));
}
BENCHMARK(bm_find_roots_deg9);

void bm_build_point_n8(benchmark::State& state) {
    ParamPoint p = sampled(8);
    for (auto _ : state) benchmark::DoNotOptimize(build_point(p));
}
BENCHMARK(bm_build_point_n8);

void bm_residue_oracle_R6(benchmark::State& state) {
    FrobeniusPoint fp = build_point(sampled(6));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_R6(fp, 0, 1, 4, 2));
}
BENCHMARK(bm_residue_oracle_R6);

void bm_pij_n6(benchmark::State& state) {
    FrobeniusPoint fp = build_point(sampled(6));
    for (auto _ : state) benchmark::DoNotOptimize(g2_Pij(fp, 0, 1));
}
BENCHMARK(bm_pij_n6);

void bm_g2_total_n4(benchmark::State& state) {
    FrobeniusPoint fp = build_point(sampled(4));
    Jet2 jet = sample_jet(4, 7, 256);
    for (auto _ : state) benchmark::DoNotOptimize(g2_total(fp, jet));
}
BENCHMARK(bm_g2_total_n4);

void bm_series_reciprocal(benchmark::State& state) {
    const long prec = 256;
    std::vector<BigComplex> c;
    for (int k = 0; k < 12; ++k) c.emplace_back(1.0 + k, 0.5 * k, prec);
    TruncatedSeries s(BigComplex(prec), c);
    for (auto _ : state) benchmark::DoNotOptimize(series_reciprocal(s));
}
BENCHMARK(bm_series_reciprocal);

} // namespace

BENCHMARK_MAIN();
