#pragma once

#include <stdexcept>
#include <string>

namespace tipdetect {

// Smoothing kernels must have odd width so the window has a center pixel.
struct EvenKernel : std::invalid_argument {
  explicit EvenKernel(int k)
      : std::invalid_argument("kernel width must be odd, got " + std::to_string(k)) {}
};

// The silhouette has no on-pixels; downstream stages have nothing to work on.
struct NoForeground : std::runtime_error {
  NoForeground() : std::runtime_error("silhouette has no foreground pixels") {}
};

// Slope over a zero-length interval.
struct DegenerateInterval : std::invalid_argument {
  explicit DegenerateInterval(int i)
      : std::invalid_argument("slope interval is degenerate at index " + std::to_string(i)) {}
};

}  // namespace tipdetect
