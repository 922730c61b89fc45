#include "tipdetect/orientation.hpp"

#include "tipdetect/errors.hpp"

namespace tipdetect {

Side opposite(Side s) {
  switch (s) {
    case Side::Up: return Side::Down;
    case Side::Down: return Side::Up;
    case Side::Left: return Side::Right;
    default: return Side::Left;
  }
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Up: return "up";
    case Side::Down: return "down";
    case Side::Left: return "left";
    default: return "right";
  }
}

ProjectionHistogram projection_histogram(const BinarySilhouette& sil, Axis axis) {
  ProjectionHistogram h;
  h.axis = axis;
  if (axis == Axis::Row) {
    h.counts.assign(sil.height, 0);
    for (int r = 0; r < sil.height; ++r)
      for (int c = 0; c < sil.width; ++c) h.counts[r] += sil.at(r, c);
  } else {
    h.counts.assign(sil.width, 0);
    for (int r = 0; r < sil.height; ++r)
      for (int c = 0; c < sil.width; ++c) h.counts[c] += sil.at(r, c);
  }
  return h;
}

std::pair<ScanProfile, Orientation> four_way_scan(const BinarySilhouette& sil) {
  const ProjectionHistogram rows = projection_histogram(sil, Axis::Row);
  const ProjectionHistogram cols = projection_histogram(sil, Axis::Column);

  auto first_occupied = [](const std::vector<int>& counts) {
    for (int i = 0; i < static_cast<int>(counts.size()); ++i)
      if (counts[i] > 0) return i;
    return -1;
  };
  auto last_occupied = [](const std::vector<int>& counts) {
    for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i)
      if (counts[i] > 0) return i;
    return -1;
  };

  const int top = first_occupied(rows.counts);
  if (top < 0) throw NoForeground();
  const int bottom = last_occupied(rows.counts);
  const int left = first_occupied(cols.counts);
  const int right = last_occupied(cols.counts);

  ScanProfile profile;
  profile.up = {top, rows.counts[top]};
  profile.down = {bottom, rows.counts[bottom]};
  profile.left = {left, cols.counts[left]};
  profile.right = {right, cols.counts[right]};

  // Tie-break priority Down > Up > Left > Right.
  Side wrist = Side::Down;
  int best = profile.down.magnitude;
  for (Side s : {Side::Up, Side::Left, Side::Right}) {
    if (profile.edge(s).magnitude > best) {
      best = profile.edge(s).magnitude;
      wrist = s;
    }
  }
  return {profile, Orientation::from_wrist(wrist)};
}

}  // namespace tipdetect
