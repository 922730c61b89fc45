#pragma once

#include <utility>

#include "tipdetect/image.hpp"

namespace tipdetect {

enum class Axis { Row, Column };

// On-pixel count per row (Axis::Row) or per column (Axis::Column).
// Both axes of the same silhouette sum to the same total.
struct ProjectionHistogram {
  Axis axis = Axis::Row;
  std::vector<int> counts;
};

enum class Side { Up, Down, Left, Right };
enum class HandAxis { Vertical, Horizontal };

Side opposite(Side s);
const char* side_name(Side s);

// Which frame edge the wrist touches. The finger side is always the 180
// degree opposite; the hand axis follows from the wrist side.
struct Orientation {
  Side wrist_side = Side::Down;
  Side finger_side = Side::Up;
  HandAxis hand_axis = HandAxis::Vertical;

  static Orientation from_wrist(Side wrist) {
    Orientation o;
    o.wrist_side = wrist;
    o.finger_side = opposite(wrist);
    o.hand_axis = (wrist == Side::Up || wrist == Side::Down) ? HandAxis::Vertical
                                                             : HandAxis::Horizontal;
    return o;
  }
};

// For each frame edge: the first occupied scanline moving inward and the
// number of on-pixels it carries.
struct ScanProfile {
  struct EdgeScan {
    int first_index = -1;  // absolute row/col index of the scanline
    int magnitude = 0;     // on-pixels within it
  };
  EdgeScan up, down, left, right;

  const EdgeScan& edge(Side s) const {
    switch (s) {
      case Side::Up: return up;
      case Side::Down: return down;
      case Side::Left: return left;
      default: return right;
    }
  }
};

ProjectionHistogram projection_histogram(const BinarySilhouette& sil, Axis axis);

// Scans inward from all four edges; the edge whose first occupied scanline
// holds the most on-pixels is the wrist end. Ties resolve with the fixed
// priority Down > Up > Left > Right. Throws NoForeground when empty.
std::pair<ScanProfile, Orientation> four_way_scan(const BinarySilhouette& sil);

}  // namespace tipdetect
