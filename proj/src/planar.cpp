#include "padyn/planar.hpp"

#include <fstream>
#include <numbers>

#include "padyn/error.hpp"
#include "padyn/svg.hpp"

namespace padyn {

Vec2 EmbedConfig::direction(int digit) const {
  const double angle = 2.0 * std::numbers::pi * digit / static_cast<double>(prime);
  return {std::cos(angle), std::sin(angle)};
}

Vec2 embed(const PadicNumber& x, const EmbedConfig& cfg) {
  if (x.prime() != cfg.prime) fail(ErrorCode::DomainError, "embedding configured for another prime");
  if (cfg.depth < 1) fail(ErrorCode::DomainError, "embedding depth must be positive");
  if (cfg.eps() > 1.0 / (2.0 * static_cast<double>(cfg.prime)))
    fail(ErrorCode::DomainError, "contraction above 1/(2p) breaks injectivity");
  if (!x.is_zero() && x.valuation() < 0) fail(ErrorCode::NegativeValuation, "only elements of Z_p embed");
  if (!x.is_zero() && x.absolute_precision() < cfg.depth)
    fail(ErrorCode::PrecisionExhausted, "embedding depth exceeds the digits carried by x");
  const double eps = cfg.eps();
  const Vec2 origin = cfg.direction(0);
  Vec2 point;
  double weight = 1.0;
  for (int k = 0; k < cfg.depth; ++k) {
    point += (cfg.direction(x.digit_at(k)) - origin) * weight;
    weight *= eps;
  }
  return point * cfg.scale();
}

OrbitImage orbit_image(const OrbitRecord& orbit, const EmbedConfig& cfg, bool scale_normalized, std::string label) {
  OrbitImage img{std::move(label), {}};
  for (const auto& y : orbit.iterates) {
    if (scale_normalized && !y.is_zero()) img.points.push_back(embed(y.unit_part(), cfg));
    else img.points.push_back(embed(y, cfg));
  }
  return img;
}

std::string render_svg(const std::vector<OrbitImage>& images) {
  if (images.empty()) fail(ErrorCode::EmptyInput, "nothing to render");
  std::vector<svg::Layer> layers;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::string id = "orbit-" + std::to_string(i);
    layers.push_back({id, svg::palette(i), images[i].points, true, true});
  }
  return svg::document(svg::Canvas{}, layers, true);
}

void render(const std::vector<OrbitImage>& images, const std::filesystem::path& out) {
  std::string doc = render_svg(images);
  std::ofstream f(out, std::ios::binary);
  if (!f) fail(ErrorCode::IoFailure, "cannot open " + out.string() + " for writing");
  f << doc;
  if (!f) fail(ErrorCode::IoFailure, "write to " + out.string() + " failed");
}

FitReport homothety_check(const OrbitImage& img_a, const OrbitImage& img_b, double expected_ratio, double tolerance) {
  const auto& a = img_a.points;
  const auto& b = img_b.points;
  if (a.empty() || b.empty()) fail(ErrorCode::EmptyInput, "homothety check needs nonempty images");
  if (a.size() != b.size()) fail(ErrorCode::SizeMismatch, "images must have corresponding points");
  const double n = static_cast<double>(a.size());
  Vec2 ca, cb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca += a[i];
    cb += b[i];
  }
  ca = ca * (1.0 / n);
  cb = cb * (1.0 / n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec2 da = a[i] - ca, db = b[i] - cb;
    sxx += da.x * da.x + da.y * da.y;
    sxy += da.x * db.x + da.y * db.y;
  }
  if (sxx <= 1e-24) fail(ErrorCode::DegenerateConfiguration, "all points of the reference image coincide");
  FitReport rep;
  rep.scale = sxy / sxx;
  rep.translation = cb - ca * rep.scale;
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec2 r = b[i] - (a[i] * rep.scale + rep.translation);
    sq += r.x * r.x + r.y * r.y;
  }
  rep.residual = std::sqrt(sq / n);
  rep.pass = std::abs(rep.scale - expected_ratio) <= tolerance;
  return rep;
}

}  // namespace padyn
