#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "argmat/bool_matrix.hpp"
#include "argmat/oracle.hpp"
#include "argmat/parity.hpp"
#include "argmat/reachability.hpp"
#include "argmat/semantics.hpp"

namespace {

using namespace argmat;

Framework random_framework(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution flip(p);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) {
        names.push_back(std::to_string(i));
    }
    std::vector<std::pair<std::string, std::string>> attacks;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (flip(rng)) {
                attacks.emplace_back(names[i - 1], names[j - 1]);
            }
        }
    }
    return Framework::build(std::move(names), attacks);
}

void BM_BoolProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BoolMatrix m = attack_matrix(random_framework(n, 4.0 / n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bool_product(m, m));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BoolProduct)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_OddReach(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework f = random_framework(n, 4.0 / n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(odd_reach_matrix(f, OddMinLength::one));
    }
}
BENCHMARK(BM_OddReach)->Arg(64)->Arg(128)->Arg(256);

void BM_ParityBfs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework f = random_framework(n, 4.0 / n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parity_bfs(f));
    }
}
BENCHMARK(BM_ParityBfs)->Arg(64)->Arg(256)->Arg(1024);

void BM_EnumerateStable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework f = random_framework(n, 0.2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_block(f, SemanticsKind::stable));
    }
}
BENCHMARK(BM_EnumerateStable)->Arg(12)->Arg(16)->Arg(18);

void BM_EnumerateCompleteP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework f = random_framework(n, 0.25, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_block(f, SemanticsKind::complete_p));
    }
}
BENCHMARK(BM_EnumerateCompleteP)->Arg(10)->Arg(12)->Arg(14);

void BM_OracleExtensions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework f = random_framework(n, 0.25, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_extensions(f, SemanticsKind::complete_p));
    }
}
BENCHMARK(BM_OracleExtensions)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
