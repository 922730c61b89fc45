#include "tipdetect/fingertip.hpp"

#include <cmath>
#include <cstdlib>

#include "tipdetect/errors.hpp"

namespace tipdetect {

namespace {

// Scanlines run parallel to the hand axis: columns of the silhouette for a
// vertical hand, rows for a horizontal one. "along" is the coordinate
// inside a scanline (row resp. col).
struct ScanGeometry {
  bool vertical;
  int lines;       // number of scanlines
  int along_len;   // pixels per scanline
  bool wrist_high; // wrist at the high end of the along coordinate

  explicit ScanGeometry(int width, int height, const Orientation& orient)
      : vertical(orient.hand_axis == HandAxis::Vertical),
        lines(vertical ? width : height),
        along_len(vertical ? height : width),
        wrist_high(orient.wrist_side == Side::Down || orient.wrist_side == Side::Right) {}

  int row(int line, int along) const { return vertical ? along : line; }
  int col(int line, int along) const { return vertical ? line : along; }
};

}  // namespace

ProjectionHistogram scanline_counts(const BinarySilhouette& sil, const Orientation& orient) {
  if (sil.on_pixels() == 0) throw NoForeground();
  return projection_histogram(
      sil, orient.hand_axis == HandAxis::Vertical ? Axis::Column : Axis::Row);
}

GrayImage intensity_ramp(const BinarySilhouette& sil, const Orientation& orient) {
  if (sil.on_pixels() == 0) throw NoForeground();
  const ScanGeometry geo(sil.width, sil.height, orient);

  GrayImage ramp(sil.width, sil.height);
  std::vector<int> on;
  on.reserve(geo.along_len);
  for (int line = 0; line < geo.lines; ++line) {
    on.clear();
    for (int along = 0; along < geo.along_len; ++along)
      if (sil.at(geo.row(line, along), geo.col(line, along))) on.push_back(along);
    const int c = static_cast<int>(on.size());
    for (int j = 0; j < c; ++j) {
      // Rank 1 sits next to the wrist, rank c at the finger end.
      const int rank = geo.wrist_high ? c - j : j + 1;
      ramp.at(geo.row(line, on[j]), geo.col(line, on[j])) =
          static_cast<std::uint8_t>(std::lround(rank * 255.0 / c));
    }
  }
  return ramp;
}

FingerEdgeMap finger_edges(const GrayImage& ramp, const Orientation& orient) {
  const ScanGeometry geo(ramp.width, ramp.height, orient);
  FingerEdgeMap edges(ramp.width, ramp.height);

  // Scan each line from the finger end inward; the first 255 is the
  // extremal on-pixel. Long scanlines (>= 510 on-pixels) round more than
  // one rank to 255, so marking only the first keeps one mark per line.
  for (int line = 0; line < geo.lines; ++line) {
    const int begin = geo.wrist_high ? 0 : geo.along_len - 1;
    const int step = geo.wrist_high ? 1 : -1;
    for (int along = begin; along >= 0 && along < geo.along_len; along += step) {
      if (ramp.at(geo.row(line, along), geo.col(line, along)) == 255) {
        edges.bits[static_cast<std::size_t>(geo.row(line, along)) * edges.width +
                   geo.col(line, along)] = 1;
        break;
      }
    }
  }
  return edges;
}

std::vector<Fingertip> detect_fingertips(const FingerEdgeMap& edges, const Orientation& orient,
                                         const TipParams& params, int origin_row,
                                         int origin_col) {
  const ScanGeometry geo(edges.width, edges.height, orient);

  struct EdgePoint {
    int line;
    int along;
  };
  std::vector<EdgePoint> pts;
  for (int line = 0; line < geo.lines; ++line) {
    for (int along = 0; along < geo.along_len; ++along) {
      if (edges.at(geo.row(line, along), geo.col(line, along))) {
        pts.push_back({line, along});
        break;
      }
    }
  }
  if (pts.empty()) return {};

  // Split the indexed edge sequence where scanlines are not adjacent or the
  // differentiated along coordinate jumps beyond the threshold.
  std::vector<std::pair<int, int>> runs;  // [first, last] indices into pts
  int run_start = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    const bool adjacent = pts[i].line == pts[i - 1].line + 1;
    const bool smooth = std::abs(pts[i].along - pts[i - 1].along) <= params.diff_threshold;
    if (!adjacent || !smooth) {
      runs.emplace_back(run_start, i - 1);
      run_start = i;
    }
  }
  runs.emplace_back(run_start, static_cast<int>(pts.size()) - 1);

  // Smaller along coordinates are nearer the finger end when the wrist sits
  // at the high end, and vice versa.
  auto toward_finger = [&](int a, int b) { return geo.wrist_high ? a < b : a > b; };
  auto run_extremum = [&](const std::pair<int, int>& run) {
    int ext = pts[run.first].along;
    for (int i = run.first + 1; i <= run.second; ++i)
      if (toward_finger(pts[i].along, ext)) ext = pts[i].along;
    return ext;
  };

  std::vector<Fingertip> tips;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& run = runs[k];
    const int len = run.second - run.first + 1;
    if (len < params.min_run) continue;

    // A finger pokes out toward the finger end relative to whatever
    // surrounds it; runs that sit behind a neighbor (palm tops between
    // fingers) are not tips.
    const int ext = run_extremum(run);
    if (k > 0 && !toward_finger(ext, run_extremum(runs[k - 1]))) continue;
    if (k + 1 < runs.size() && !toward_finger(ext, run_extremum(runs[k + 1]))) continue;

    // Tip scanline: among the extremal positions, the one nearest the run
    // median.
    const double median_pos = run.first + (len - 1) / 2.0;
    int best_i = -1;
    for (int i = run.first; i <= run.second; ++i) {
      if (pts[i].along != ext) continue;
      if (best_i < 0 || std::abs(i - median_pos) < std::abs(best_i - median_pos)) best_i = i;
    }

    Fingertip tip;
    tip.x = origin_row + geo.row(pts[best_i].line, pts[best_i].along);
    tip.y = origin_col + geo.col(pts[best_i].line, pts[best_i].along);
    tips.push_back(tip);
    if (params.max_tips > 0 && static_cast<int>(tips.size()) >= params.max_tips) break;
  }
  return tips;
}

}  // namespace tipdetect
