#include <benchmark/benchmark.h>

#include "tipdetect/pipeline.hpp"
#include "tipdetect/synth.hpp"

using namespace tipdetect;

namespace {

const SyntheticHand& fixture() {
  static const SyntheticHand hand = [] {
    HandSpec spec;
    spec.fingers = 4;
    spec.seed = 4242;
    spec.noise = 0.01;
    return generate_hand(spec);
  }();
  return hand;
}

const BinarySilhouette& hand_blob() {
  static const BinarySilhouette blob = [] {
    const PipelineConfig cfg;
    const BinarySilhouette sil =
        filter_frame(fixture().frame, cfg.thresholds, cfg.smooth_kernel);
    return largest_blob(sil, cfg.connectivity);
  }();
  return blob;
}

}  // namespace

static void BM_SkinFilter(benchmark::State& state) {
  const PipelineConfig cfg;
  for (auto _ : state) {
    BinarySilhouette sil = filter_frame(fixture().frame, cfg.thresholds, cfg.smooth_kernel);
    benchmark::DoNotOptimize(sil);
  }
}
BENCHMARK(BM_SkinFilter);

static void BM_LargestBlob(benchmark::State& state) {
  const PipelineConfig cfg;
  const BinarySilhouette sil =
      filter_frame(fixture().frame, cfg.thresholds, cfg.smooth_kernel);
  for (auto _ : state) {
    BinarySilhouette blob = largest_blob(sil, cfg.connectivity);
    benchmark::DoNotOptimize(blob);
  }
}
BENCHMARK(BM_LargestBlob);

static void BM_FourWayScan(benchmark::State& state) {
  for (auto _ : state) {
    auto result = four_way_scan(hand_blob());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_FourWayScan);

static void BM_CropHand(benchmark::State& state) {
  const PipelineConfig cfg;
  const auto [profile, orient] = four_way_scan(hand_blob());
  for (auto _ : state) {
    const auto hist = projection_histogram(hand_blob(), Axis::Row);
    const auto cut = find_wrist_cut(hist, orient.wrist_side, cfg.slope_threshold,
                                    cfg.slope_window);
    auto cropped = crop_hand(hand_blob(), orient, cut);
    benchmark::DoNotOptimize(cropped);
  }
}
BENCHMARK(BM_CropHand);

static void BM_FingertipStage(benchmark::State& state) {
  const PipelineConfig cfg;
  const auto [profile, orient] = four_way_scan(hand_blob());
  const auto hist = projection_histogram(hand_blob(), Axis::Row);
  const auto cut =
      find_wrist_cut(hist, orient.wrist_side, cfg.slope_threshold, cfg.slope_window);
  const auto [box, cropped] = crop_hand(hand_blob(), orient, cut);
  for (auto _ : state) {
    const GrayImage ramp = intensity_ramp(cropped, orient);
    const FingerEdgeMap edges = finger_edges(ramp, orient);
    auto tips = detect_fingertips(edges, orient, cfg.tip_params, box.x_min, box.y_min);
    benchmark::DoNotOptimize(tips);
  }
}
BENCHMARK(BM_FingertipStage);

static void BM_ProcessFrame(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.crop_enabled = state.range(0) != 0;
  for (auto _ : state) {
    DetectionRecord rec = process_frame(fixture().frame, cfg);
    benchmark::DoNotOptimize(rec);
  }
  state.SetLabel(cfg.crop_enabled ? "crop" : "no-crop");
}
BENCHMARK(BM_ProcessFrame)->Arg(1)->Arg(0);

BENCHMARK_MAIN();
