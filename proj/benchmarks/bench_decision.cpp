#include <benchmark/benchmark.h>

#include "fractiso/blowup.hpp"
#include "fractiso/quotient.hpp"
#include "fractiso/refinement.hpp"
#include "fractiso/signature.hpp"
#include "fractiso/trees.hpp"

using namespace fractiso;

namespace {

StepKernel blown_kernel(int splits_per_class, std::uint64_t seed) {
    const StepKernel base = StepKernel::create(
        {Ratio(1, 4), Ratio(3, 4)}, {{Ratio(0), Ratio(1)}, {Ratio(1), Ratio(0)}}, true);
    const BlowupPlan plan = make_plan(base, {splits_per_class, splits_per_class},
                                      derive_seed_table(seed, base.class_count()));
    return blowup(plan);
}

} // namespace

static void bm_refinement_fixpoint(benchmark::State& state) {
    const StepKernel w = blown_kernel(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(refinement_fixpoint(w).stabilized_at);
}
BENCHMARK(bm_refinement_fixpoint)->Arg(2)->Arg(8)->Arg(32);

static void bm_didm_equal_positive(benchmark::State& state) {
    const StepKernel a = blown_kernel(static_cast<int>(state.range(0)), 7);
    const StepKernel b = blown_kernel(static_cast<int>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(didm_equal(a, b).equal);
}
BENCHMARK(bm_didm_equal_positive)->Arg(2)->Arg(8)->Arg(32);

static void bm_quotient_kernel(benchmark::State& state) {
    const StepKernel w = blown_kernel(static_cast<int>(state.range(0)), 23);
    const Coloring fixpoint = refinement_fixpoint(w).fixpoint();
    for (auto _ : state) benchmark::DoNotOptimize(quotient_kernel(w, fixpoint).quotient.class_count());
}
BENCHMARK(bm_quotient_kernel)->Arg(2)->Arg(8)->Arg(32);

static void bm_tree_density(benchmark::State& state) {
    const StepKernel w = blown_kernel(4, 5);
    const auto trees = enumerate_free_trees(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Ratio acc;
        for (const RootedTree& t : trees) acc += tree_density(w, t);
        benchmark::DoNotOptimize(acc.sign());
    }
}
BENCHMARK(bm_tree_density)->Arg(5)->Arg(7);

static void bm_free_tree_enumeration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_free_trees(static_cast<int>(state.range(0))).size());
}
BENCHMARK(bm_free_tree_enumeration)->Arg(8)->Arg(10);
