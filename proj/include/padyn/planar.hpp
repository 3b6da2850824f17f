#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "padyn/geometry.hpp"
#include "padyn/padic.hpp"
#include "padyn/series.hpp"

namespace padyn {

// Digit k moves the point by eps^k toward the p-th root of unity of that
// digit. The picture is translated so that 0 sits at the origin and scaled
// by (1 - eps)/2 so everything lands inside the unit disc.
struct EmbedConfig {
  long prime = 3;
  int depth = 8;
  double contraction = 0.0;  // 0 selects 1/(2p)

  double eps() const { return contraction > 0.0 ? contraction : 1.0 / (2.0 * static_cast<double>(prime)); }
  double scale() const { return (1.0 - eps()) / 2.0; }
  Vec2 direction(int digit) const;
};

// x must lie in Z_p and carry at least depth digits.
Vec2 embed(const PadicNumber& x, const EmbedConfig& cfg);

struct OrbitImage {
  std::string label;
  PointCloud points;
};

// Embeds every iterate of the orbit. With scale_normalized, each nonzero
// iterate is replaced by its unit part before embedding so that orbits at
// different scales share one window.
OrbitImage orbit_image(const OrbitRecord& orbit, const EmbedConfig& cfg, bool scale_normalized = false,
                       std::string label = {});

// One <g> layer per image, in input order. Output depends only on the input.
std::string render_svg(const std::vector<OrbitImage>& images);
void render(const std::vector<OrbitImage>& images, const std::filesystem::path& out);

struct FitReport {
  double scale = 0.0;
  Vec2 translation;
  double residual = 0.0;  // RMS of b - (scale a + translation)
  bool pass = false;
};

// Least-squares fit img_b ~ scale * img_a + translation over corresponding points.
FitReport homothety_check(const OrbitImage& img_a, const OrbitImage& img_b, double expected_ratio,
                          double tolerance = 1e-2);

}  // namespace padyn
