#include <benchmark/benchmark.h>

#include <charlab/characters.hpp>
#include <charlab/congruences.hpp>
#include <charlab/field.hpp>
#include <charlab/sums.hpp>

using namespace charlab;

namespace {

void BM_char_eval_index_table(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(1000003, IndexPolicy::Always);
    Character chi = canonical_character(ctx, 3);
    u64 x = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi.eval(x));
        x = x % (ctx.p - 1) + 1;
    }
}
BENCHMARK(BM_char_eval_index_table);

void BM_char_eval_qr_table(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(1000003, IndexPolicy::Never);
    Character chi = legendre_character(ctx);
    u64 x = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi.eval(x));
        x = x % (ctx.p - 1) + 1;
    }
}
BENCHMARK(BM_char_eval_qr_table);

void BM_char_eval_subgroup_dlog(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(1000003, IndexPolicy::Never);
    Character chi = canonical_character(ctx, 3);
    u64 x = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi.eval(x));
        x = x % (ctx.p - 1) + 1;
    }
}
BENCHMARK(BM_char_eval_subgroup_dlog);

void BM_dlog(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(1000003, IndexPolicy::Never);
    u64 x = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dlog(ctx, x));
        x = x % (ctx.p - 1) + 1;
    }
}
BENCHMARK(BM_dlog);

void BM_interval_sum(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(10007, IndexPolicy::Always);
    Character chi = legendre_character(ctx);
    Subgroup G(ctx, 5003);
    Interval I{0, 100};
    IntervalAlgo algo = state.range(0) ? IntervalAlgo::ViaRU : IntervalAlgo::Direct;
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_interval_subgroup(chi, 1, I, G, algo));
}
BENCHMARK(BM_interval_sum)->Arg(0)->Arg(1);

void BM_pair_sum_via_f(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(10007, IndexPolicy::Always);
    Character chi = legendre_character(ctx);
    Subgroup G(ctx, (u64)state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_subgroup_pair(chi, 1, G, PairAlgo::ViaF));
}
BENCHMARK(BM_pair_sum_via_f)->Arg(2)->Arg(5003);

void BM_f_histogram(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(10007, IndexPolicy::Never);
    Subgroup G(ctx, (u64)state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(f_histogram(G));
}
BENCHMARK(BM_f_histogram)->Arg(2)->Arg(5003);

void BM_additive_energy(benchmark::State& state) {
    FieldCtx ctx = build_field_ctx(10007, IndexPolicy::Never);
    Subgroup G(ctx, 5003);
    for (auto _ : state)
        benchmark::DoNotOptimize(additive_energy(G, EnergyAlgo::Histogram));
}
BENCHMARK(BM_additive_energy);

} // namespace

BENCHMARK_MAIN();
