#pragma once

#include <vector>

#include "tipdetect/image.hpp"
#include "tipdetect/orientation.hpp"

namespace tipdetect {

// One mark per occupied scanline: the on-pixel nearest the finger end.
struct FingerEdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  FingerEdgeMap() = default;
  FingerEdgeMap(int w, int h)
      : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int row, int col) const {
    return bits[static_cast<std::size_t>(row) * width + col];
  }
};

// Frame coordinates: x is the row, y the column.
struct Fingertip {
  int x = 0;
  int y = 0;
  friend bool operator==(const Fingertip&, const Fingertip&) = default;
};

struct TipParams {
  int diff_threshold = 2;  // max jump between adjacent edge positions within one finger
  int min_run = 3;         // minimum finger width in scanlines
  int max_tips = 0;        // 0 = unbounded
};

// Scanlines run parallel to the hand axis (columns for a vertical hand,
// rows for a horizontal one); counts are indexed across the axis.
ProjectionHistogram scanline_counts(const BinarySilhouette& sil, const Orientation& orient);

// Ranks each scanline's on-pixels 1..c from the wrist side and assigns
// round(rank * 255 / c); off-pixels stay 0. The on-pixel nearest the finger
// end therefore lands exactly on 255.
GrayImage intensity_ramp(const BinarySilhouette& sil, const Orientation& orient);

// Marks, per scanline, the 255-valued pixel nearest the finger end. For
// scanlines under 510 on-pixels that is exactly the set of 255 pixels.
FingerEdgeMap finger_edges(const GrayImage& ramp, const Orientation& orient);

// Groups edge marks into runs (adjacent scanlines whose edge positions jump
// by at most diff_threshold), keeps runs of length >= min_run that sit
// strictly nearer the finger end than their neighbor runs, and reports one
// tip per run at its extremal edge pixel (ties toward the run median).
// origin_* translate box-local coordinates back to frame coordinates.
std::vector<Fingertip> detect_fingertips(const FingerEdgeMap& edges, const Orientation& orient,
                                         const TipParams& params, int origin_row = 0,
                                         int origin_col = 0);

}  // namespace tipdetect
