#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gradual/functorial.hpp"
#include "gradual/fuzzy.hpp"
#include "gradual/gradual_group.hpp"
#include "gradual/gradual_subset.hpp"

using namespace gradual;

namespace {

const GroundSet X8({"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"});

GradualSubset random_subset(std::mt19937_64& rng, int cuts) {
    std::vector<Rational> cs;
    std::uniform_int_distribution<int> num(1, 63);
    for (int i = 0; i < cuts; ++i) cs.push_back(Rational(num(rng), 64));
    sort_unique(cs);
    std::uniform_int_distribution<int> bits(0, 255);
    return GradualSubset{
        X8, build_step_map<ElemSet>(
                cs, [&](const Rational&) { return ElemSet(static_cast<unsigned>(bits(rng))); })};
}

void bm_closure(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<GradualSubset> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_subset(rng, static_cast<int>(state.range(0))));
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure_c(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(bm_closure)->Arg(4)->Arg(8)->Arg(16);

void bm_union_zip(benchmark::State& state) {
    std::mt19937_64 rng(8);
    GradualSubset a = random_subset(rng, static_cast<int>(state.range(0)));
    GradualSubset b = random_subset(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(subset_union({a, b}));
    }
}
BENCHMARK(bm_union_zip)->Arg(4)->Arg(16);

void bm_class_product(benchmark::State& state) {
    const FiniteGroup G = FiniteGroup::dihedral(4);
    std::vector<Rational> g1(8, Rational(1, 4)), g2(8, Rational(1, 8));
    g1[0] = g2[0] = Rational(1);
    g1[2] = Rational(1, 2);
    g2[2] = Rational(3, 4);
    FuzzySubgroupClass c1 = normalize_mu1(G, make_fuzzy_subset(G.ground(), g1));
    FuzzySubgroupClass c2 = normalize_mu1(G, make_fuzzy_subset(G.ground(), g2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(class_product(c1, c2));
    }
}
BENCHMARK(bm_class_product);

void bm_colimit(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    std::vector<Rational> levels;
    for (size_t i = 1; i <= n; ++i) levels.push_back(Rational(static_cast<int>(i), static_cast<int>(n)));
    LevelGrid grid = make_level_grid(levels);
    std::vector<int> sizes(n, 6);
    std::vector<std::vector<std::vector<int>>> t(n, std::vector<std::vector<int>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) t[i][j] = {0, 1, 2, 3, 4, 5};
    DirectedSetSystem sys = make_directed_set_system(grid, sizes, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(colimit_set(sys));
    }
}
BENCHMARK(bm_colimit)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();
