#pragma once

#include "tipdetect/image.hpp"

namespace tipdetect {

enum class ColorSpace { Hsv, YCbCr };

// Closed chroma intervals; the brightness channel (V or Y) never filters.
// Hue does not wrap: red tones above ~350 degrees are handled by widening
// [hue_min, hue_max], not by a wrapped interval.
struct SkinThresholds {
  ColorSpace color_space = ColorSpace::Hsv;
  double hue_min = 0.0;
  double hue_max = 50.0;
  double sat_min = 0.23;
  double sat_max = 0.68;
  int cb_min = 77;
  int cb_max = 127;
  int cr_min = 133;
  int cr_max = 173;

  void validate() const;  // throws std::invalid_argument when min > max
};

bool classify_skin_hsv(const HsvPixel& p, const SkinThresholds& t);
bool classify_skin_ycbcr(const YCbCrPixel& p, const SkinThresholds& t);

// Per-pixel conversion + classification followed by box_smooth(kernel).
// Output has the input's dimensions.
BinarySilhouette filter_frame(const RgbImage& img, const SkinThresholds& t, int smooth_kernel);

}  // namespace tipdetect
