#include <benchmark/benchmark.h>

#include "linklab/fft.hpp"
#include "linklab/frame.hpp"
#include "linklab/harness.hpp"
#include "linklab/modem.hpp"
#include "linklab/rng.hpp"
#include "linklab/sync.hpp"

using namespace linklab;

static void BM_Fft(benchmark::State& state) {
    Rng rng(1);
    ComplexVec x(state.range(0));
    for (auto& v : x) {
        const auto [a, b] = rng.gaussian_pair();
        v = Complex(a, b);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(fft(x));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_FrameSerialize(benchmark::State& state) {
    FrameConfig cfg;
    const BitStream bits = repeat_to_length(
        message_to_bits({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20}),
        cfg.n_occ);
    const OfdmFrame f = assemble_frame(cfg, {bpsk_map(bits)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_to_samples(cfg, f));
    }
}
BENCHMARK(BM_FrameSerialize);

static void BM_TimingMetric(benchmark::State& state) {
    FrameConfig cfg;
    Rng rng(2);
    SampleStream s;
    s.samples.resize(832);
    for (auto& v : s.samples) {
        const auto [a, b] = rng.gaussian_pair();
        v = Complex(a, b);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(timing_metric(s, cfg.n_fft / 2));
    }
}
BENCHMARK(BM_TimingMetric);

// End-to-end throughput; items/s is bits/s (soft target: 1e6 bits/minute).
static void BM_LinkThroughput(benchmark::State& state) {
    LinkOptions opt;
    opt.channel.taps = {Complex(0.8, 0.9), Complex(0.6, 0.7)};
    opt.channel.snr_db = 16.0;
    opt.master_seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_link(opt, 100000));
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_LinkThroughput)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
