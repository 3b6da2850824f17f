#pragma once

#include <string>
#include <vector>

#include "padyn/geometry.hpp"

namespace padyn::svg {

struct Layer {
  std::string id;
  std::string color;
  PointCloud points;  // already in picture coordinates
  bool polyline = true;
  bool markers = true;
};

// Square canvas over [xmin, xmax] x [ymin, ymax], y pointing up.
struct Canvas {
  double xmin = -1.05, xmax = 1.05, ymin = -1.05, ymax = 1.05;
  int pixels = 800;
  std::string title;
};

std::string document(const Canvas& canvas, const std::vector<Layer>& layers, bool unit_circle);

std::string palette(std::size_t index);

}  // namespace padyn::svg
