#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tipdetect/blob.hpp"
#include "tipdetect/crop.hpp"
#include "tipdetect/fingertip.hpp"
#include "tipdetect/image.hpp"
#include "tipdetect/orientation.hpp"
#include "tipdetect/skin_filter.hpp"

namespace tipdetect {

// Every tunable of the pipeline. slope_threshold and the tip params are
// stated at 640x480 scale; the pipeline rescales them per frame (slope by
// frame height / 480, tip params by crop extent along the hand axis / 480).
struct PipelineConfig {
  SkinThresholds thresholds;
  int smooth_kernel = 5;
  Connectivity connectivity = Connectivity::Eight;
  double slope_threshold = 4.0;
  int slope_window = 2;
  TipParams tip_params;
  bool crop_enabled = true;

  void validate() const;  // throws on malformed settings
};

struct DetectionRecord {
  enum class Status { Ok, NoHand };

  std::string frame_id;
  int width = 0;
  int height = 0;
  Status status = Status::NoHand;
  std::optional<Orientation> orientation;
  std::optional<CropBox> crop;
  std::vector<Fingertip> fingertips;
  // Insertion order skin, blob, orient, crop, tips, total; only executed
  // stages appear.
  std::vector<std::pair<std::string, std::int64_t>> timings_us;
  // Pixels handed to the fingertip stage (crop area, or frame area when
  // cropping is off). 0 for no_hand frames.
  long long tip_stage_pixels = 0;
};

// Runs skin filter -> largest blob -> orientation -> crop -> fingertips,
// timing each stage on a monotonic clock. An empty silhouette anywhere turns
// into status no_hand rather than an error.
DetectionRecord process_frame(const RgbImage& img, const PipelineConfig& cfg,
                              std::string frame_id = "");

// Draws the crop box perimeter and a cross (arm length 2) at each fingertip.
// no_hand records return the frame untouched.
RgbImage render_overlay(const RgbImage& img, const DetectionRecord& rec);

struct StageStats {
  std::string name;
  std::int64_t count = 0;
  std::int64_t min_us = 0;
  std::int64_t median_us = 0;
  std::int64_t p95_us = 0;
  std::int64_t max_us = 0;
};

struct BenchReport {
  std::int64_t frames = 0;
  std::vector<StageStats> stages;
  // A/B pixel load on the fingertip stage: actual (cropped) vs the full
  // frame it would scan with cropping off.
  unsigned long long tip_pixels_with_crop = 0;
  unsigned long long tip_pixels_without_crop = 0;
  double median_tip_pixel_reduction_pct = 0.0;
};

BenchReport build_bench_report(const std::vector<DetectionRecord>& records);
std::string format_bench_report(const BenchReport& report);

// One JSONL object per record; timings_us is omitted when include_timings
// is false so that byte-identical runs can be compared.
std::string record_to_json(const DetectionRecord& rec, bool include_timings = true);

}  // namespace tipdetect
