#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tipdetect {

// Hue in degrees [0,360); saturation and value in [0,1].
// Achromatic pixels (s == 0) carry h == 0.
struct HsvPixel {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

// Full-range BT.601; neutral chroma sits at 128.
struct YCbCrPixel {
  std::uint8_t y = 0;
  std::uint8_t cb = 128;
  std::uint8_t cr = 128;
};

// Row-major interleaved 8-bit RGB. (row, col) addressing: row 0 is the top
// of the frame, col 0 the left edge.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be >= 1");
    data.assign(static_cast<std::size_t>(w) * h * 3, 0);
  }

  static RgbImage solid(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    RgbImage img(w, h);
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
      img.data[i] = r;
      img.data[i + 1] = g;
      img.data[i + 2] = b;
    }
    return img;
  }

  std::uint8_t* px(int row, int col) {
    return data.data() + 3 * (static_cast<std::size_t>(row) * width + col);
  }
  const std::uint8_t* px(int row, int col) const {
    return data.data() + 3 * (static_cast<std::size_t>(row) * width + col);
  }
  void set(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    std::uint8_t* p = px(row, col);
    p[0] = r;
    p[1] = g;
    p[2] = b;
  }
};

// Row-major 8-bit intensities; holds the wrist-to-finger ramp values.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be >= 1");
    data.assign(static_cast<std::size_t>(w) * h, 0);
  }

  std::uint8_t& at(int row, int col) {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }
};

// Binary hand mask: 1 = skin/hand, 0 = background.
struct BinarySilhouette {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinarySilhouette() = default;
  BinarySilhouette(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("silhouette dimensions must be >= 1");
    bits.assign(static_cast<std::size_t>(w) * h, 0);
  }

  std::uint8_t& at(int row, int col) {
    return bits[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t at(int row, int col) const {
    return bits[static_cast<std::size_t>(row) * width + col];
  }

  long long on_pixels() const {
    long long n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
  }
};

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);
YCbCrPixel rgb_to_ycbcr(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Majority-vote box filter: output bit is 1 iff the mean of the k x k
// neighborhood (zero-padded beyond the frame) is >= 0.5. k must be odd.
BinarySilhouette box_smooth(const BinarySilhouette& sil, int kernel_width);

}  // namespace tipdetect
