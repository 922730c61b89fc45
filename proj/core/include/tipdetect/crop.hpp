#pragma once

#include <optional>
#include <utility>

#include "tipdetect/image.hpp"
#include "tipdetect/orientation.hpp"

namespace tipdetect {

// Inclusive bounds in frame coordinates: x_* are row indices, y_* columns.
struct CropBox {
  int x_min = 0;
  int x_max = 0;
  int y_min = 0;
  int y_max = 0;

  int rows() const { return x_max - x_min + 1; }
  int cols() const { return y_max - y_min + 1; }
  long long area() const { return static_cast<long long>(rows()) * cols(); }
  bool contains(int row, int col) const {
    return row >= x_min && row <= x_max && col >= y_min && col <= y_max;
  }
};

// Two-point slope (counts[i2] - counts[i1]) / (i2 - i1).
double slope(const ProjectionHistogram& h, int i1, int i2);

// Walks the histogram from the wrist edge inward, starting at the first
// occupied scanline, and returns the index where counts first rise by at
// least slope_threshold per scanline over the given window. nullopt when no
// such step exists (hand without a visible forearm).
std::optional<int> find_wrist_cut(const ProjectionHistogram& h, Side scan_from,
                                  double slope_threshold, int window);

// Crops to the hand: wrist-side bound is one scanline inward of the cut (the
// first palm scanline); without a cut it degrades to the tight bounding box.
// Returns the box in frame coordinates plus the box-local silhouette.
std::pair<CropBox, BinarySilhouette> crop_hand(const BinarySilhouette& sil,
                                               const Orientation& orient,
                                               std::optional<int> cut);

}  // namespace tipdetect
