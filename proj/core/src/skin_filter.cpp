#include "tipdetect/skin_filter.hpp"

#include <stdexcept>

namespace tipdetect {

void SkinThresholds::validate() const {
  if (hue_min > hue_max) throw std::invalid_argument("hue_min > hue_max");
  if (sat_min > sat_max) throw std::invalid_argument("sat_min > sat_max");
  if (cb_min > cb_max) throw std::invalid_argument("cb_min > cb_max");
  if (cr_min > cr_max) throw std::invalid_argument("cr_min > cr_max");
  if (hue_min < 0.0 || hue_max >= 360.0) throw std::invalid_argument("hue outside [0,360)");
  if (sat_min < 0.0 || sat_max > 1.0) throw std::invalid_argument("saturation outside [0,1]");
  if (cb_min < 0 || cb_max > 255 || cr_min < 0 || cr_max > 255)
    throw std::invalid_argument("chroma outside [0,255]");
}

bool classify_skin_hsv(const HsvPixel& p, const SkinThresholds& t) {
  return p.h >= t.hue_min && p.h <= t.hue_max && p.s >= t.sat_min && p.s <= t.sat_max;
}

bool classify_skin_ycbcr(const YCbCrPixel& p, const SkinThresholds& t) {
  return p.cb >= t.cb_min && p.cb <= t.cb_max && p.cr >= t.cr_min && p.cr <= t.cr_max;
}

BinarySilhouette filter_frame(const RgbImage& img, const SkinThresholds& t, int smooth_kernel) {
  BinarySilhouette raw(img.width, img.height);
  const std::uint8_t* p = img.data.data();
  std::uint8_t* out = raw.bits.data();
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;

  if (t.color_space == ColorSpace::Hsv) {
    for (std::size_t i = 0; i < n; ++i, p += 3)
      out[i] = classify_skin_hsv(rgb_to_hsv(p[0], p[1], p[2]), t) ? 1 : 0;
  } else {
    for (std::size_t i = 0; i < n; ++i, p += 3)
      out[i] = classify_skin_ycbcr(rgb_to_ycbcr(p[0], p[1], p[2]), t) ? 1 : 0;
  }
  return box_smooth(raw, smooth_kernel);
}

}  // namespace tipdetect
