#include "tipdetect/blob.hpp"

#include <numeric>

#include "tipdetect/errors.hpp"

namespace tipdetect {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];  // path halving
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  if (a < b)
    parent[b] = a;
  else
    parent[a] = b;
}

}  // namespace

ComponentLabels connected_components(const BinarySilhouette& sil, Connectivity conn) {
  const int w = sil.width;
  const int h = sil.height;
  const bool eight = conn == Connectivity::Eight;

  ComponentLabels out;
  out.width = w;
  out.height = h;
  out.labels.assign(static_cast<std::size_t>(w) * h, 0);

  std::vector<int> parent;
  parent.push_back(0);  // label 0 reserved for background
  int next = 1;

  // First pass: provisional labels from the already-visited neighbors
  // (west, and for 8-connectivity the NW/N/NE row above).
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!sil.at(r, c)) continue;
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;

      int best = 0;
      auto consider = [&](int rr, int cc) {
        if (rr < 0 || cc < 0 || cc >= w) return;
        const int lab = out.labels[static_cast<std::size_t>(rr) * w + cc];
        if (lab == 0) return;
        if (best == 0) {
          best = lab;
        } else {
          unite(parent, best, lab);
        }
      };
      consider(r, c - 1);
      consider(r - 1, c);
      if (eight) {
        consider(r - 1, c - 1);
        consider(r - 1, c + 1);
      }

      if (best == 0) {
        parent.push_back(next);
        best = next++;
      }
      out.labels[idx] = best;
    }
  }

  // Second pass: resolve roots and compact to dense labels in raster order
  // of first appearance.
  std::vector<int> dense(parent.size(), 0);
  int next_dense = 0;
  for (auto& lab : out.labels) {
    if (lab == 0) continue;
    const int root = find_root(parent, lab);
    if (dense[root] == 0) dense[root] = ++next_dense;
    lab = dense[root];
  }

  out.component_sizes.assign(next_dense, 0);
  for (int lab : out.labels)
    if (lab > 0) ++out.component_sizes[lab - 1];
  return out;
}

BinarySilhouette largest_blob(const BinarySilhouette& sil, Connectivity conn) {
  const ComponentLabels cl = connected_components(sil, conn);
  if (cl.count() == 0) throw NoForeground();

  // Smallest label wins ties: dense labels follow raster order, so that is
  // the component with the lexicographically smallest first pixel.
  int best_label = 1;
  for (int l = 2; l <= cl.count(); ++l)
    if (cl.component_sizes[l - 1] > cl.component_sizes[best_label - 1]) best_label = l;

  BinarySilhouette out(sil.width, sil.height);
  for (std::size_t i = 0; i < cl.labels.size(); ++i)
    out.bits[i] = (cl.labels[i] == best_label) ? 1 : 0;
  return out;
}

}  // namespace tipdetect
