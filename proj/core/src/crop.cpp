#include "tipdetect/crop.hpp"

#include <algorithm>
#include <stdexcept>

#include "tipdetect/errors.hpp"

namespace tipdetect {

double slope(const ProjectionHistogram& h, int i1, int i2) {
  if (i1 == i2) throw DegenerateInterval(i1);
  const int n = static_cast<int>(h.counts.size());
  if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n)
    throw std::out_of_range("slope index outside histogram");
  return static_cast<double>(h.counts[i2] - h.counts[i1]) / (i2 - i1);
}

std::optional<int> find_wrist_cut(const ProjectionHistogram& h, Side scan_from,
                                  double slope_threshold, int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  const int n = static_cast<int>(h.counts.size());
  // Down/Right scan from the high-index edge toward low indices.
  const int dir = (scan_from == Side::Down || scan_from == Side::Right) ? -1 : 1;

  int start = -1;
  for (int i = (dir > 0) ? 0 : n - 1; i >= 0 && i < n; i += dir) {
    if (h.counts[i] > 0) {
      start = i;
      break;
    }
  }
  if (start < 0) return std::nullopt;

  // Rise of the histogram along the scan direction, per scanline.
  for (int i = start; i + dir * window >= 0 && i + dir * window < n; i += dir) {
    const double rise =
        static_cast<double>(h.counts[i + dir * window] - h.counts[i]) / window;
    if (rise >= slope_threshold) return i;
  }
  return std::nullopt;
}

std::pair<CropBox, BinarySilhouette> crop_hand(const BinarySilhouette& sil,
                                               const Orientation& orient,
                                               std::optional<int> cut) {
  const ProjectionHistogram rows = projection_histogram(sil, Axis::Row);
  const ProjectionHistogram cols = projection_histogram(sil, Axis::Column);

  auto span = [](const std::vector<int>& counts) -> std::pair<int, int> {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
      if (counts[i] > 0) {
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    return {lo, hi};
  };

  const auto [r0, r1] = span(rows.counts);
  if (r0 < 0) throw NoForeground();
  const auto [c0, c1] = span(cols.counts);

  CropBox box{r0, r1, c0, c1};
  if (cut) {
    // The cut is the last forearm scanline in scan order; the hand starts
    // one scanline inward.
    switch (orient.wrist_side) {
      case Side::Down: box.x_max = std::clamp(*cut - 1, r0, r1); break;
      case Side::Up: box.x_min = std::clamp(*cut + 1, r0, r1); break;
      case Side::Right: box.y_max = std::clamp(*cut - 1, c0, c1); break;
      case Side::Left: box.y_min = std::clamp(*cut + 1, c0, c1); break;
    }
  }

  BinarySilhouette cropped(box.cols(), box.rows());
  for (int r = box.x_min; r <= box.x_max; ++r)
    for (int c = box.y_min; c <= box.y_max; ++c)
      cropped.at(r - box.x_min, c - box.y_min) = sil.at(r, c);
  return {box, cropped};
}

}  // namespace tipdetect
