#include "tipdetect/image.hpp"

#include <algorithm>
#include <cmath>

#include "tipdetect/errors.hpp"

namespace tipdetect {

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const double rn = r / 255.0;
  const double gn = g / 255.0;
  const double bn = b / 255.0;
  const double maxc = std::max({rn, gn, bn});
  const double minc = std::min({rn, gn, bn});
  const double delta = maxc - minc;

  HsvPixel p;
  p.v = maxc;
  p.s = (maxc == 0.0) ? 0.0 : delta / maxc;
  if (delta == 0.0) {
    p.h = 0.0;
  } else if (maxc == rn) {
    p.h = 60.0 * ((gn - bn) / delta);
    if (p.h < 0.0) p.h += 360.0;
  } else if (maxc == gn) {
    p.h = 60.0 * ((bn - rn) / delta + 2.0);
  } else {
    p.h = 60.0 * ((rn - gn) / delta + 4.0);
  }
  if (p.h >= 360.0) p.h -= 360.0;
  return p;
}

namespace {

std::uint8_t clamp_u8(double v) {
  const long r = std::lround(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

}  // namespace

YCbCrPixel rgb_to_ycbcr(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  // Full-range BT.601.
  YCbCrPixel p;
  p.y = clamp_u8(0.299 * r + 0.587 * g + 0.114 * b);
  p.cb = clamp_u8(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
  p.cr = clamp_u8(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
  return p;
}

BinarySilhouette box_smooth(const BinarySilhouette& sil, int kernel_width) {
  if (kernel_width < 1 || kernel_width % 2 == 0) throw EvenKernel(kernel_width);
  if (kernel_width == 1) return sil;

  const int w = sil.width;
  const int h = sil.height;
  const int half = kernel_width / 2;
  const int window = kernel_width * kernel_width;

  // Integral image: integ(r, c) = sum of bits above-left of (r, c).
  std::vector<int> integ(static_cast<std::size_t>(w + 1) * (h + 1), 0);
  auto iat = [&](int r, int c) -> int& {
    return integ[static_cast<std::size_t>(r) * (w + 1) + c];
  };
  for (int r = 0; r < h; ++r) {
    int rowsum = 0;
    for (int c = 0; c < w; ++c) {
      rowsum += sil.at(r, c);
      iat(r + 1, c + 1) = iat(r, c + 1) + rowsum;
    }
  }

  BinarySilhouette out(w, h);
  for (int r = 0; r < h; ++r) {
    const int r1 = std::max(0, r - half);
    const int r2 = std::min(h - 1, r + half);
    for (int c = 0; c < w; ++c) {
      const int c1 = std::max(0, c - half);
      const int c2 = std::min(w - 1, c + half);
      const int sum = iat(r2 + 1, c2 + 1) - iat(r1, c2 + 1) - iat(r2 + 1, c1) + iat(r1, c1);
      // Zero padding: the denominator stays k*k even at the border.
      out.at(r, c) = (2 * sum >= window) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace tipdetect
