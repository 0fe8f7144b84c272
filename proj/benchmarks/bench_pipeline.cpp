#include <benchmark/benchmark.h>

#include <fstream>

#include "tfqkd/channel_model.hpp"
#include "tfqkd/dataio.hpp"
#include "tfqkd/decoy_bounds.hpp"
#include "tfqkd/fluctuation.hpp"
#include "tfqkd/pipeline.hpp"

namespace {

using namespace tfqkd;

const ExperimentRecord& record38() {
    static const ExperimentRecord rec = [] {
        std::ifstream in(std::string(TFQKD_DATA_DIR) + "/38.0dB.json", std::ios::binary);
        return load_experiment(in, RecordFormat::json);
    }();
    return rec;
}

void BM_YieldBounds(benchmark::State& state) {
    const ExperimentRecord& rec = record38();
    const IntensityTriple s = rec.intensities.centers();
    for (auto _ : state) {
        benchmark::DoNotOptimize(yield_bounds(rec.gains, s, Outcome::d10));
    }
}
BENCHMARK(BM_YieldBounds);

void BM_DetectorPipeline(benchmark::State& state) {
    const ExperimentRecord& rec = record38();
    const IntensityTriple s = rec.intensities.centers();
    const double alpha2 = rec.intensities.alpha2.center;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            evaluate_detector(rec.gains, rec.x_stats, s, alpha2, Outcome::d10));
    }
}
BENCHMARK(BM_DetectorPipeline);

void BM_ExtremizeRate(benchmark::State& state) {
    const ExperimentRecord& rec = record38();
    ExtremizeConfig cfg;
    cfg.grid_points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremize_rate(rec.gains, rec.x_stats,
                                                rec.intensities.box(), Sense::minimize, cfg));
    }
}
BENCHMARK(BM_ExtremizeRate)->Arg(3)->Arg(5)->Arg(7);

void BM_SimulateGains(benchmark::State& state) {
    const ChannelParams ch{38.0, 6.8e-7, 0.998};
    const IntensityTriple s{0.087, 0.0088, 1.0e-4};
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_gains(ch, s, nodes));
    }
    state.SetComplexityN(nodes);
}
BENCHMARK(BM_SimulateGains)->RangeMultiplier(4)->Range(128, 8192)->Complexity();

void BM_AnalyzeExperiment(benchmark::State& state) {
    const ExperimentRecord& rec = record38();
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_experiment(rec));
    }
}
BENCHMARK(BM_AnalyzeExperiment);

}  // namespace

BENCHMARK_MAIN();
