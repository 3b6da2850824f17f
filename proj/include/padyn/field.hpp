#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "padyn/geometry.hpp"
#include "padyn/planar.hpp"
#include "padyn/series.hpp"

namespace padyn {

enum class FieldKind { vorticity, magnetic, synthetic };

std::string field_kind_name(FieldKind kind);
FieldKind parse_field_kind(const std::string& name);

// Uniform square grid; node (i, j) sits at (x0 + i h, y0 + j h) and its
// vector is stored at index j * nx + i.
struct FieldGrid {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double spacing = 0.0;
  std::vector<double> vx;
  std::vector<double> vy;
  FieldKind kind = FieldKind::synthetic;

  double x1() const { return x0 + spacing * (nx - 1); }
  double y1() const { return y0 + spacing * (ny - 1); }
  Vec2 node(int i, int j) const { return {x0 + spacing * i, y0 + spacing * j}; }
  bool inside(Vec2 q) const;
  // Bilinear; points outside are clamped to the boundary.
  Vec2 sample(Vec2 q) const;
  void validate() const;
};

// Grid over [-1, 1]^2 with n nodes per side.
FieldGrid blank_grid(int n, FieldKind kind = FieldKind::synthetic);

// CSV with header "x,y,vx,vy", or a JSON object (chosen by content).
FieldGrid load_field(const std::filesystem::path& path, FieldKind csv_kind = FieldKind::synthetic);
FieldGrid parse_field_csv(const std::string& text, FieldKind kind = FieldKind::synthetic);
FieldGrid parse_field_json(const std::string& text);
void save_field_csv(const FieldGrid& grid, const std::filesystem::path& path);
void save_field_json(const FieldGrid& grid, const std::filesystem::path& path);

// Synthetic stand-ins for measured fields.
FieldGrid uniform_field(int n, Vec2 v);
FieldGrid rotation_field(int n);
// Two staggered rows of counter-rotating Gaussian vortices.
FieldGrid vortex_street(int n, int vortices_per_row = 4, double core = 0.12);
// Concentric circulation with alternating sense per ring.
FieldGrid nested_circles(int n, int rings = 3);

// Every node flows toward its nearest orbit point, rotated by swirl radians.
// Streamlines end in spiral sinks at the image points.
struct OrbitFieldConfig {
  int n = 801;
  double swirl = 0.0;
};
FieldGrid orbit_field(const std::vector<OrbitImage>& images, const OrbitFieldConfig& cfg = {});

struct TraceConfig {
  double step = 1e-2;
  int max_steps = 5000;
  double speed_floor = 1e-6;
  int direction = 1;  // +1 forward, -1 backward
  // Stop once a polyline comes back within step of its seed.
  bool close_loops = false;
};

struct StreamlineSet {
  std::vector<PointCloud> polylines;
  PointCloud seeds;
  double step_size = 0.0;
  int max_steps = 0;

  PointCloud cloud() const;
  std::size_t point_count() const;
};

StreamlineSet trace(const FieldGrid& grid, const PointCloud& seeds, const TraceConfig& cfg = {});

// n x n lattice strictly inside [-1, 1]^2.
PointCloud lattice_seeds(int n, double margin = 0.1);

// Grid nodes that are local minima of |v| (8-neighbourhood) and slower than
// speed_threshold, in row-major order.
PointCloud critical_seeds(const FieldGrid& grid, double speed_threshold);

// Adds N(0, sigma^2) to both coordinates of every point.
StreamlineSet perturb(const StreamlineSet& lines, double sigma, std::uint64_t seed);

// Mean of the two directed mean nearest-neighbour distances, after dividing
// both clouds by max(1, largest norm in either).
double chamfer(const PointCloud& a, const PointCloud& b);
double score_match(const StreamlineSet& lines, const OrbitImage& img);

struct FitConfig {
  EmbedConfig embed{3, 8, 0.0};
  int precision = 24;
  std::vector<Rational> seeds;  // each must have positive valuation
  int steps = 2;
  bool scale_normalized = true;
};

struct RankEntry {
  std::size_t candidate_id = 0;
  double score = 0.0;
};

// Images of every seed orbit, concatenated into one cloud.
OrbitImage series_image(const TruncatedSeries& u, const FitConfig& cfg);

// Ascending score, ties by candidate index.
std::vector<RankEntry> fit_series(const StreamlineSet& lines, const std::vector<TruncatedSeries>& candidates,
                                  const FitConfig& cfg);

}  // namespace padyn
