/* vim: set sw=4 sts=4 et : */

#include <colorbound/kernels.hh>

#include <benchmark/benchmark.h>

using namespace colorbound;

namespace
{
    auto space_for(int which) -> EdgeSpace
    {
        switch (which) {
            case 0:  return EdgeSpace::all_graphs(6);
            case 1:  return EdgeSpace::all_graphs(7);
            default: return EdgeSpace::subgraphs_of(Partition{ 3, 3, 2 });
        }
    }

    auto label_for(int which) -> const char *
    {
        switch (which) {
            case 0:  return "all graphs v=6";
            case 1:  return "all graphs v=7";
            default: return "subgraphs of K(3,3,2)";
        }
    }

    void serial_tally(benchmark::State & state)
    {
        auto space = space_for(int(state.range(0)));
        state.SetLabel(label_for(int(state.range(0))));
        for (auto _ : state)
            benchmark::DoNotOptimize(serial::tally_chromatic(space, 0, space.size()));
        state.SetItemsProcessed(state.iterations() * std::int64_t(space.size()));
    }

    void parallel_tally(benchmark::State & state)
    {
        auto space = space_for(int(state.range(0)));
        int jobs = int(state.range(1));
        state.SetLabel(label_for(int(state.range(0))));
        for (auto _ : state)
            benchmark::DoNotOptimize(parallel::tally_chromatic(space, jobs));
        state.SetItemsProcessed(state.iterations() * std::int64_t(space.size()));
    }

    void serial_properly_coloured(benchmark::State & state)
    {
        auto space = EdgeSpace::all_graphs(7);
        std::vector<int> colours{ 1, 1, 1, 2, 2, 3, 3 };
        for (auto _ : state)
            benchmark::DoNotOptimize(serial::count_properly_coloured(space, colours, 0, space.size()));
        state.SetItemsProcessed(state.iterations() * std::int64_t(space.size()));
    }

    void parallel_properly_coloured(benchmark::State & state)
    {
        auto space = EdgeSpace::all_graphs(7);
        std::vector<int> colours{ 1, 1, 1, 2, 2, 3, 3 };
        int jobs = int(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(parallel::count_properly_coloured(space, colours, jobs));
        state.SetItemsProcessed(state.iterations() * std::int64_t(space.size()));
    }
}

BENCHMARK(serial_tally)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_tally)->ArgsProduct({ { 0, 1, 2 }, { 1, 2, 4, 8 } })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(serial_properly_coloured)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_properly_coloured)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
