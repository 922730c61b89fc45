#include "tipdetect/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tipdetect/errors.hpp"

namespace tipdetect {

void PipelineConfig::validate() const {
  thresholds.validate();
  if (smooth_kernel < 1 || smooth_kernel % 2 == 0) throw EvenKernel(smooth_kernel);
  if (connectivity != Connectivity::Four && connectivity != Connectivity::Eight)
    throw std::invalid_argument("connectivity must be 4 or 8");
  if (slope_threshold < 0.0) throw std::invalid_argument("slope_threshold must be >= 0");
  if (slope_window < 1) throw std::invalid_argument("slope_window must be >= 1");
  if (tip_params.diff_threshold < 1) throw std::invalid_argument("tip_diff must be >= 1");
  if (tip_params.min_run < 1) throw std::invalid_argument("tip_min_run must be >= 1");
  if (tip_params.max_tips < 0) throw std::invalid_argument("max_tips must be >= 0");
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
}

// Tunables are stated at 640x480; rescale but never below a usable floor.
int scaled_param(int base, int extent) {
  return std::max(1, static_cast<int>(std::lround(base * extent / 480.0)));
}

}  // namespace

DetectionRecord process_frame(const RgbImage& img, const PipelineConfig& cfg,
                              std::string frame_id) {
  DetectionRecord rec;
  rec.frame_id = std::move(frame_id);
  rec.width = img.width;
  rec.height = img.height;

  const auto t_start = Clock::now();
  auto t_prev = t_start;
  auto mark = [&](const char* stage) {
    const auto now = Clock::now();
    rec.timings_us.emplace_back(stage, elapsed_us(t_prev, now));
    t_prev = now;
  };
  auto finish = [&]() {
    rec.timings_us.emplace_back("total", elapsed_us(t_start, Clock::now()));
  };

  const BinarySilhouette sil = filter_frame(img, cfg.thresholds, cfg.smooth_kernel);
  mark("skin");

  BinarySilhouette hand;
  try {
    hand = largest_blob(sil, cfg.connectivity);
  } catch (const NoForeground&) {
    mark("blob");
    rec.status = DetectionRecord::Status::NoHand;
    finish();
    return rec;
  }
  mark("blob");

  const auto [profile, orient] = four_way_scan(hand);
  rec.orientation = orient;
  mark("orient");

  const BinarySilhouette* tip_input = &hand;
  BinarySilhouette cropped;
  int origin_row = 0;
  int origin_col = 0;
  if (cfg.crop_enabled) {
    const Axis axis =
        orient.hand_axis == HandAxis::Vertical ? Axis::Row : Axis::Column;
    const ProjectionHistogram hist = projection_histogram(hand, axis);
    const double threshold = cfg.slope_threshold * img.height / 480.0;
    const std::optional<int> cut =
        find_wrist_cut(hist, orient.wrist_side, threshold, cfg.slope_window);
    auto [box, local] = crop_hand(hand, orient, cut);
    rec.crop = box;
    cropped = std::move(local);
    tip_input = &cropped;
    origin_row = box.x_min;
    origin_col = box.y_min;
    mark("crop");
  }

  const int axis_extent =
      orient.hand_axis == HandAxis::Vertical ? tip_input->height : tip_input->width;
  TipParams params = cfg.tip_params;
  params.diff_threshold = scaled_param(params.diff_threshold, axis_extent);
  params.min_run = scaled_param(params.min_run, axis_extent);

  const GrayImage ramp = intensity_ramp(*tip_input, orient);
  const FingerEdgeMap edges = finger_edges(ramp, orient);
  rec.fingertips = detect_fingertips(edges, orient, params, origin_row, origin_col);
  rec.tip_stage_pixels = static_cast<long long>(tip_input->width) * tip_input->height;
  mark("tips");

  rec.status = DetectionRecord::Status::Ok;
  finish();
  return rec;
}

namespace {

void put_pixel(RgbImage& img, int row, int col, const std::uint8_t rgb[3]) {
  if (row < 0 || row >= img.height || col < 0 || col >= img.width) return;
  img.set(row, col, rgb[0], rgb[1], rgb[2]);
}

}  // namespace

RgbImage render_overlay(const RgbImage& img, const DetectionRecord& rec) {
  RgbImage out = img;
  if (rec.status != DetectionRecord::Status::Ok) return out;

  static constexpr std::uint8_t kBoxColor[3] = {0, 255, 0};
  static constexpr std::uint8_t kTipColor[3] = {255, 0, 0};

  if (rec.crop) {
    const CropBox& b = *rec.crop;
    for (int c = b.y_min; c <= b.y_max; ++c) {
      put_pixel(out, b.x_min, c, kBoxColor);
      put_pixel(out, b.x_max, c, kBoxColor);
    }
    for (int r = b.x_min; r <= b.x_max; ++r) {
      put_pixel(out, r, b.y_min, kBoxColor);
      put_pixel(out, r, b.y_max, kBoxColor);
    }
  }

  for (const Fingertip& tip : rec.fingertips) {
    put_pixel(out, tip.x, tip.y, kTipColor);
    for (int d = 1; d <= 2; ++d) {
      put_pixel(out, tip.x - d, tip.y, kTipColor);
      put_pixel(out, tip.x + d, tip.y, kTipColor);
      put_pixel(out, tip.x, tip.y - d, kTipColor);
      put_pixel(out, tip.x, tip.y + d, kTipColor);
    }
  }
  return out;
}

namespace {

std::int64_t nearest_rank(const std::vector<std::int64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  const auto n = static_cast<std::int64_t>(sorted.size());
  std::int64_t idx = static_cast<std::int64_t>(std::ceil(q * n)) - 1;
  idx = std::clamp<std::int64_t>(idx, 0, n - 1);
  return sorted[idx];
}

}  // namespace

BenchReport build_bench_report(const std::vector<DetectionRecord>& records) {
  BenchReport report;
  report.frames = static_cast<std::int64_t>(records.size());

  static const char* kStageOrder[] = {"skin", "blob", "orient", "crop", "tips", "total"};
  for (const char* stage : kStageOrder) {
    std::vector<std::int64_t> samples;
    for (const auto& rec : records)
      for (const auto& [name, us] : rec.timings_us)
        if (name == stage) samples.push_back(us);
    if (samples.empty()) continue;
    std::sort(samples.begin(), samples.end());
    StageStats st;
    st.name = stage;
    st.count = static_cast<std::int64_t>(samples.size());
    st.min_us = samples.front();
    st.median_us = nearest_rank(samples, 0.50);
    st.p95_us = nearest_rank(samples, 0.95);
    st.max_us = samples.back();
    report.stages.push_back(st);
  }

  std::vector<double> reductions;
  for (const auto& rec : records) {
    if (rec.status != DetectionRecord::Status::Ok) continue;
    const unsigned long long full =
        static_cast<unsigned long long>(rec.width) * rec.height;
    const unsigned long long used = static_cast<unsigned long long>(rec.tip_stage_pixels);
    report.tip_pixels_with_crop += used;
    report.tip_pixels_without_crop += full;
    if (full > 0) reductions.push_back(100.0 * (1.0 - static_cast<double>(used) / full));
  }
  if (!reductions.empty()) {
    std::sort(reductions.begin(), reductions.end());
    report.median_tip_pixel_reduction_pct = reductions[(reductions.size() - 1) / 2];
  }
  return report;
}

std::string format_bench_report(const BenchReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "frames processed: %lld\n",
                static_cast<long long>(report.frames));
  out += line;
  std::snprintf(line, sizeof(line), "%-8s %8s %10s %10s %10s %10s\n", "stage", "count",
                "min_us", "median_us", "p95_us", "max_us");
  out += line;
  for (const StageStats& st : report.stages) {
    std::snprintf(line, sizeof(line), "%-8s %8lld %10lld %10lld %10lld %10lld\n",
                  st.name.c_str(), static_cast<long long>(st.count),
                  static_cast<long long>(st.min_us), static_cast<long long>(st.median_us),
                  static_cast<long long>(st.p95_us), static_cast<long long>(st.max_us));
    out += line;
  }
  std::snprintf(line, sizeof(line),
                "tip-stage pixels: %llu with crop, %llu without, median reduction %.1f%%\n",
                report.tip_pixels_with_crop, report.tip_pixels_without_crop,
                report.median_tip_pixel_reduction_pct);
  out += line;
  return out;
}

}  // namespace tipdetect
