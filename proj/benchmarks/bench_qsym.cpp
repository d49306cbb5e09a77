#include <benchmark/benchmark.h>

#include "qsym/bijections.hpp"
#include "qsym/composition.hpp"
#include "qsym/enumerate.hpp"
#include "qsym/expansions.hpp"
#include "qsym/insertion.hpp"
#include "qsym/transition.hpp"

namespace {

void BM_EnumerateFillings(benchmark::State& state) {
    const qsym::Composition shape({2, 1, 2, 1});
    const int max_entry = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto fillings = qsym::enumerate_fillings(shape, qsym::FillingKind::RSCT, max_entry);
        benchmark::DoNotOptimize(fillings);
    }
}
BENCHMARK(BM_EnumerateFillings)->Arg(4)->Arg(6)->Arg(8);

void BM_RsInM(benchmark::State& state) {
    const qsym::Composition alpha({2, 1, 2, 1});
    for (auto _ : state) {
        auto element = qsym::rs_in_m(alpha);
        benchmark::DoNotOptimize(element);
    }
}
BENCHMARK(BM_RsInM);

void BM_TransitionMatrix(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto matrix = qsym::make_transition_matrix(qsym::Basis::RS, qsym::Basis::QS, degree);
        benchmark::DoNotOptimize(matrix);
    }
}
BENCHMARK(BM_TransitionMatrix)->Arg(4)->Arg(5);

void BM_Insert(benchmark::State& state) {
    const qsym::Filling f({{2, 1}, {2}, {4, 3, 2}, {4, 2}, {5, 2}}, qsym::FillingKind::RSCT);
    for (auto _ : state) {
        auto result = qsym::rsct_insert(f, 3);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Insert);

void BM_RowMapRoundtrip(benchmark::State& state) {
    const qsym::Filling t({{7, 6, 5, 4, 2}, {7, 5, 3, 1}, {6, 4, 2, 1}, {2}},
                          qsym::FillingKind::ReverseRowStrict);
    for (auto _ : state) {
        auto back = qsym::rho_row_inv(qsym::rho_row(t));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_RowMapRoundtrip);

}  // namespace

BENCHMARK_MAIN();
