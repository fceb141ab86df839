#include <benchmark/benchmark.h>

#include "nlbox/bounds.hpp"
#include "nlbox/symmetry.hpp"

namespace {

void bm_enumerate_orthogonal_6(benchmark::State& state)
{
    for (auto _ : state) {
        auto result = nlbox::enumerate_orthogonal(6);
        benchmark::DoNotOptimize(result.matrices.size());
    }
}
BENCHMARK(bm_enumerate_orthogonal_6)->Unit(benchmark::kMillisecond);

void bm_partition_6(benchmark::State& state)
{
    for (auto _ : state) {
        auto partition = nlbox::partition_by_symmetry(6);
        benchmark::DoNotOptimize(partition.subsets.size());
    }
}
BENCHMARK(bm_partition_6);

void bm_mean_square_chsh_6(benchmark::State& state)
{
    nlbox::SettingsQuad quad;
    quad.x1 = nlbox::BitVec::parse("010000");
    quad.x2 = nlbox::BitVec::parse("100000");
    quad.y1 = nlbox::BitVec::parse("011100");
    quad.y2 = nlbox::BitVec::parse("000100");
    for (auto _ : state) {
        auto ms = nlbox::mean_square_chsh(quad);
        benchmark::DoNotOptimize(ms.histogram.size());
    }
}
BENCHMARK(bm_mean_square_chsh_6);

void bm_within_subset_w_scan(benchmark::State& state)
{
    auto partition = nlbox::partition_by_symmetry(6);
    const auto& x = partition.subsets.front().X;
    for (auto _ : state) {
        int total = 0;
        for (const auto& x1 : x)
            for (const auto& x2 : x)
                for (const auto& y1 : x)
                    for (const auto& y2 : x)
                        total += nlbox::symmetry_parameter_W(x1, x2, y1, y2);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_within_subset_w_scan);

void bm_component_anf_6(benchmark::State& state)
{
    auto f = nlbox::identity_element(6);
    for (auto _ : state) {
        auto anf = nlbox::component_anf(f, 1);
        benchmark::DoNotOptimize(anf.size());
    }
}
BENCHMARK(bm_component_anf_6);

} // namespace
