#pragma once

#include "tipdetect/image.hpp"

namespace tipdetect {

enum class Connectivity { Four = 4, Eight = 8 };

// Dense labeling of connected foreground components. Label 0 is background;
// labels 1..L are assigned in raster order of first encounter, so a smaller
// label always has the lexicographically smaller first (row, col) pixel.
struct ComponentLabels {
  int width = 0;
  int height = 0;
  std::vector<int> labels;           // row-major, 0 = background
  std::vector<int> component_sizes;  // component_sizes[l - 1] = pixels of label l

  int count() const { return static_cast<int>(component_sizes.size()); }
  int at(int row, int col) const {
    return labels[static_cast<std::size_t>(row) * width + col];
  }
};

ComponentLabels connected_components(const BinarySilhouette& sil, Connectivity conn);

// Keeps only the maximum-size component. Size ties go to the component whose
// first raster pixel is smallest. Throws NoForeground on an empty silhouette.
BinarySilhouette largest_blob(const BinarySilhouette& sil, Connectivity conn);

}  // namespace tipdetect
