#include <benchmark/benchmark.h>

#include "autoseq/automata.hpp"
#include "autoseq/christol.hpp"
#include "autoseq/contfrac.hpp"

using namespace autoseq;

namespace {

ThmTwoSpec f4_spec(const FieldCtx* F) {
    PropOneSpec p1;
    p1.field = F;
    p1.ell = 1;
    p1.r = 2;
    p1.lambda_init = {F->one()};
    p1.eps1 = F->parse("0,1");
    p1.eps2 = F->parse("1,1");
    return spec_from_cf_params(p1);
}

void BM_generate(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(generate_thm2(spec, n));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_generate)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_series_mul(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long order = state.range(0);
    auto theta = theta_series(spec, order);
    for (auto _ : state) benchmark::DoNotOptimize(theta * theta);
}
BENCHMARK(BM_series_mul)->Arg(256)->Arg(1024)->Arg(4096);

void BM_series_inv(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long order = state.range(0);
    auto theta = theta_series(spec, order);
    for (auto _ : state) benchmark::DoNotOptimize(series_inv(theta, order));
}
BENCHMARK(BM_series_inv)->Arg(256)->Arg(1024)->Arg(4096);

void BM_certify(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long order = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hyperquadratic(spec, order));
}
BENCHMARK(BM_certify)->Arg(250)->Arg(1000)->Arg(4000);

void BM_kernel(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long horizon = state.range(0);
    auto v = generate_thm2(spec, 2 * horizon + 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_explore(v, 2, horizon));
}
BENCHMARK(BM_kernel)->Arg(512)->Arg(2048)->Arg(8192);

void BM_cf_expand(benchmark::State& state) {
    auto F = FieldCtx::make(2, 2);
    auto spec = f4_spec(F.get());
    long order = state.range(0);
    auto theta = theta_series(spec, order);
    for (auto _ : state) benchmark::DoNotOptimize(cf_expand(theta, order));
}
BENCHMARK(BM_cf_expand)->Arg(128)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
