#include <benchmark/benchmark.h>

#include <random>

#include "parkrec/geo.hpp"
#include "parkrec/recommend.hpp"
#include "parkrec/stream_gen.hpp"
#include "parkrec/tracker.hpp"

namespace {

using namespace parkrec;

void BM_HaversineKm(benchmark::State& state) {
    const geo::GeoPoint a(-26.0158, 28.0064);
    const geo::GeoPoint b(-26.0209, 28.0139);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geo::haversine_km(a, b));
    }
}
BENCHMARK(BM_HaversineKm);

void BM_Iou(benchmark::State& state) {
    const BBox a(50, 50, 150, 150);
    const BBox b(80, 60, 170, 160);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iou(a, b));
    }
}
BENCHMARK(BM_Iou);

void BM_ApplyEvent(benchmark::State& state) {
    const int spots = static_cast<int>(state.range(0));
    StreamSpec spec;
    spec.lot_id = "3";
    spec.camera_id = "cam-3";
    for (int s = 0; s < spots; ++s) {
        spec.spot_boxes.emplace_back(50 + 150.0 * s, 50, 150 + 150.0 * s, 150);
    }
    spec.frames = 200;
    spec.jitter_px = 5.0;
    spec.dropout = 0.1;
    spec.seed = 42;
    const auto events = generate_stream(spec);

    for (auto _ : state) {
        OccupancyTracker tracker(LotRegistry::default_lots());
        for (const auto& event : events) {
            benchmark::DoNotOptimize(tracker.apply_event(event));
        }
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(events.size()));
}
BENCHMARK(BM_ApplyEvent)->Arg(3)->Arg(20);

void BM_Recommend(benchmark::State& state) {
    const auto registry = LotRegistry::default_lots();
    OccupancySnapshot snapshot;
    snapshot.version = 1;
    int m = 1;
    for (const auto& lot : registry.lots()) snapshot.spots[lot.lot_id] = m++;
    const RecommendationRequest request{geo::GeoPoint(-26.05, 28.05), 0.5, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(recommend(snapshot, registry, request));
    }
}
BENCHMARK(BM_Recommend);

} // namespace

BENCHMARK_MAIN();
