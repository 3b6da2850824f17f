#include "padyn/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <array>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "padyn/error.hpp"

namespace padyn {

namespace {

constexpr double kCoverTol = 1e-9;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  f << text;
  if (!f) fail(ErrorCode::IoFailure, "write to " + path.string() + " failed");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& tok, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" + tok + "'");
  if (!std::isfinite(v)) fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": non-finite value");
  return v;
}

// Sorted distinct coordinates, merging values closer than tol.
std::vector<double> distinct(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

double uniform_step(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) fail(ErrorCode::NonRectangularGrid, std::string("fewer than two distinct ") + name + " values");
  double h = (axis.back() - axis.front()) / static_cast<double>(axis.size() - 1);
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (std::abs(axis[i] - axis[i - 1] - h) > 1e-9 * std::max(1.0, h))
      fail(ErrorCode::NonRectangularGrid, std::string("non-uniform ") + name + " spacing");
  return h;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string field_kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::vorticity: return "vorticity";
    case FieldKind::magnetic: return "magnetic";
    case FieldKind::synthetic: return "synthetic";
  }
  return "synthetic";
}

FieldKind parse_field_kind(const std::string& name) {
  if (name == "vorticity") return FieldKind::vorticity;
  if (name == "magnetic") return FieldKind::magnetic;
  if (name == "synthetic") return FieldKind::synthetic;
  fail(ErrorCode::ParseError, "unknown field kind '" + name + "'");
}

bool FieldGrid::inside(Vec2 q) const {
  return q.x >= x0 && q.x <= x1() && q.y >= y0 && q.y <= y1();
}

Vec2 FieldGrid::sample(Vec2 q) const {
  double fx = (std::clamp(q.x, x0, x1()) - x0) / spacing;
  double fy = (std::clamp(q.y, y0, y1()) - y0) / spacing;
  int i = std::min(static_cast<int>(fx), nx - 2);
  int j = std::min(static_cast<int>(fy), ny - 2);
  double tx = fx - i, ty = fy - j;
  auto at = [&](const std::vector<double>& v, int a, int b) { return v[static_cast<std::size_t>(b) * nx + a]; };
  auto lerp2 = [&](const std::vector<double>& v) {
    double lo = at(v, i, j) * (1 - tx) + at(v, i + 1, j) * tx;
    double hi = at(v, i, j + 1) * (1 - tx) + at(v, i + 1, j + 1) * tx;
    return lo * (1 - ty) + hi * ty;
  };
  return {lerp2(vx), lerp2(vy)};
}

void FieldGrid::validate() const {
  if (nx < 2 || ny < 2) fail(ErrorCode::NonRectangularGrid, "grid needs at least 2 nodes per axis");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) fail(ErrorCode::NonRectangularGrid, "spacing must be positive");
  const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  if (vx.size() != n || vy.size() != n) fail(ErrorCode::NonRectangularGrid, "sample count does not match nx*ny");
  for (std::size_t k = 0; k < n; ++k)
    if (!std::isfinite(vx[k]) || !std::isfinite(vy[k])) fail(ErrorCode::ParseError, "non-finite field sample");
  if (x0 > -1.0 + kCoverTol || y0 > -1.0 + kCoverTol || x1() < 1.0 - kCoverTol || y1() < 1.0 - kCoverTol)
    fail(ErrorCode::NonRectangularGrid, "grid does not cover [-1,1]^2");
}

FieldGrid blank_grid(int n, FieldKind kind) {
  if (n < 2) fail(ErrorCode::DomainError, "grid needs at least 2 nodes per side");
  FieldGrid g;
  g.nx = g.ny = n;
  g.x0 = g.y0 = -1.0;
  g.spacing = 2.0 / (n - 1);
  g.vx.assign(static_cast<std::size_t>(n) * n, 0.0);
  g.vy.assign(static_cast<std::size_t>(n) * n, 0.0);
  g.kind = kind;
  return g;
}

FieldGrid parse_field_csv(const std::string& text, FieldKind kind) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<std::array<double, 4>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!header) {
      std::string compact;
      for (char c : t)
        if (c != ' ') compact += c;
      if (compact != "x,y,vx,vy") fail(ErrorCode::ParseError, "expected header x,y,vx,vy");
      header = true;
      continue;
    }
    std::array<double, 4> row{};
    std::size_t start = 0;
    for (int c = 0; c < 4; ++c) {
      auto comma = t.find(',', start);
      if ((c < 3) != (comma != std::string::npos))
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 4 columns");
      row[c] = parse_number(trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start)),
                            lineno);
      start = comma + 1;
    }
    rows.push_back(row);
  }
  if (!header) fail(ErrorCode::ParseError, "empty field file");
  if (rows.empty()) fail(ErrorCode::ParseError, "field file has no samples");

  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    xs.push_back(r[0]);
    ys.push_back(r[1]);
  }
  auto ax = distinct(xs, 1e-12), ay = distinct(ys, 1e-12);
  double hx = uniform_step(ax, "x"), hy = uniform_step(ay, "y");
  if (std::abs(hx - hy) > 1e-9 * std::max(1.0, hx)) fail(ErrorCode::NonRectangularGrid, "x and y spacing differ");
  FieldGrid g;
  g.nx = static_cast<int>(ax.size());
  g.ny = static_cast<int>(ay.size());
  g.x0 = ax.front();
  g.y0 = ay.front();
  g.spacing = hx;
  g.kind = kind;
  const auto n = static_cast<std::size_t>(g.nx) * g.ny;
  if (rows.size() != n) fail(ErrorCode::NonRectangularGrid, "missing or repeated grid nodes");
  g.vx.assign(n, 0.0);
  g.vy.assign(n, 0.0);
  std::vector<char> seen(n, 0);
  for (const auto& r : rows) {
    long i = std::lround((r[0] - g.x0) / g.spacing), j = std::lround((r[1] - g.y0) / g.spacing);
    if (std::abs(g.x0 + i * g.spacing - r[0]) > 1e-9 || std::abs(g.y0 + j * g.spacing - r[1]) > 1e-9)
      fail(ErrorCode::NonRectangularGrid, "sample off the grid lattice");
    auto k = static_cast<std::size_t>(j) * g.nx + static_cast<std::size_t>(i);
    if (seen[k]) fail(ErrorCode::NonRectangularGrid, "repeated grid node");
    seen[k] = 1;
    g.vx[k] = r[2];
    g.vy[k] = r[3];
  }
  g.validate();
  return g;
}

FieldGrid parse_field_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    FieldGrid g;
    g.nx = j.at("nx").get<int>();
    g.ny = j.at("ny").get<int>();
    g.x0 = j.at("x0").get<double>();
    g.y0 = j.at("y0").get<double>();
    g.spacing = j.at("spacing").get<double>();
    g.kind = parse_field_kind(j.value("kind", std::string("synthetic")));
    for (const auto& v : j.at("vx")) {
      if (!v.is_number()) fail(ErrorCode::ParseError, "non-numeric sample");
      g.vx.push_back(v.get<double>());
    }
    for (const auto& v : j.at("vy")) {
      if (!v.is_number()) fail(ErrorCode::ParseError, "non-numeric sample");
      g.vy.push_back(v.get<double>());
    }
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field json: ") + e.what());
  }
}

FieldGrid load_field(const std::filesystem::path& path, FieldKind csv_kind) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_field_json(text);
  return parse_field_csv(text, csv_kind);
}

void save_field_csv(const FieldGrid& grid, const std::filesystem::path& path) {
  grid.validate();
  std::string out = "x,y,vx,vy\n";
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      auto k = static_cast<std::size_t>(j) * grid.nx + i;
      Vec2 q = grid.node(i, j);
      out += fmt17(q.x) + "," + fmt17(q.y) + "," + fmt17(grid.vx[k]) + "," + fmt17(grid.vy[k]) + "\n";
    }
  write_file(path, out);
}

void save_field_json(const FieldGrid& grid, const std::filesystem::path& path) {
  grid.validate();
  nlohmann::ordered_json j;
  j["nx"] = grid.nx;
  j["ny"] = grid.ny;
  j["x0"] = grid.x0;
  j["y0"] = grid.y0;
  j["spacing"] = grid.spacing;
  j["kind"] = field_kind_name(grid.kind);
  j["vx"] = grid.vx;
  j["vy"] = grid.vy;
  write_file(path, j.dump() + "\n");
}

namespace {

template <class F>
FieldGrid fill(int n, F f) {
  FieldGrid g = blank_grid(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Vec2 v = f(g.node(i, j));
      auto k = static_cast<std::size_t>(j) * n + i;
      g.vx[k] = v.x;
      g.vy[k] = v.y;
    }
  return g;
}

}  // namespace

FieldGrid uniform_field(int n, Vec2 v) {
  return fill(n, [v](Vec2) { return v; });
}

FieldGrid rotation_field(int n) {
  return fill(n, [](Vec2 q) { return Vec2{-q.y, q.x}; });
}

FieldGrid vortex_street(int n, int per_row, double core) {
  if (per_row < 1 || !(core > 0.0)) fail(ErrorCode::DomainError, "vortex street needs vortices and a core size");
  std::vector<std::pair<Vec2, double>> vortices;  // center, circulation sign
  const double dx = 2.0 / per_row;
  for (int k = 0; k < per_row; ++k) {
    vortices.push_back({{-1.0 + dx * (k + 0.25), 0.3}, 1.0});
    vortices.push_back({{-1.0 + dx * (k + 0.75), -0.3}, -1.0});
  }
  return fill(n, [&](Vec2 q) {
    Vec2 v{0.4, 0.0};  // mean stream
    for (const auto& [c, s] : vortices) {
      Vec2 d = q - c;
      double w = s * std::exp(-(d.x * d.x + d.y * d.y) / (2 * core * core)) / core;
      v += Vec2{-d.y, d.x} * w;
    }
    return v;
  });
}

FieldGrid nested_circles(int n, int rings) {
  if (rings < 1) fail(ErrorCode::DomainError, "need at least one ring");
  return fill(n, [rings](Vec2 q) {
    double r = q.norm();
    double band = std::floor(r * rings);
    double sense = static_cast<long>(band) % 2 == 0 ? 1.0 : -1.0;
    // smooth in r, vanishing at the ring boundaries and the center
    double mag = std::sin(std::numbers::pi * r * rings);
    mag = std::abs(mag) * sense;
    return Vec2{-q.y, q.x} * mag;
  });
}

FieldGrid orbit_field(const std::vector<OrbitImage>& images, const OrbitFieldConfig& cfg) {
  PointCloud sinks;
  for (const auto& img : images) sinks.insert(sinks.end(), img.points.begin(), img.points.end());
  if (sinks.empty()) fail(ErrorCode::EmptyInput, "no orbit points to build a field from");
  const double c = std::cos(cfg.swirl), s = std::sin(cfg.swirl);
  return fill(cfg.n, [&](Vec2 q) {
    const Vec2* best = &sinks.front();
    double bd = std::numeric_limits<double>::infinity();
    for (const auto& p : sinks) {
      double d = dist(p, q);
      if (d < bd) {
        bd = d;
        best = &p;
      }
    }
    Vec2 d = *best - q;
    return Vec2{c * d.x - s * d.y, s * d.x + c * d.y};
  });
}

PointCloud StreamlineSet::cloud() const {
  PointCloud out;
  out.reserve(point_count());
  for (const auto& pl : polylines) out.insert(out.end(), pl.begin(), pl.end());
  return out;
}

std::size_t StreamlineSet::point_count() const {
  std::size_t n = 0;
  for (const auto& pl : polylines) n += pl.size();
  return n;
}

StreamlineSet trace(const FieldGrid& grid, const PointCloud& seeds, const TraceConfig& cfg) {
  if (!(cfg.step > 0.0) || cfg.max_steps < 0) fail(ErrorCode::DomainError, "trace needs a positive step");
  if (cfg.direction != 1 && cfg.direction != -1) fail(ErrorCode::DomainError, "direction must be +1 or -1");
  StreamlineSet out;
  out.seeds = seeds;
  out.step_size = cfg.step;
  out.max_steps = cfg.max_steps;
  const double h = cfg.step * cfg.direction;
  for (const auto& seed : seeds) {
    if (!grid.inside(seed)) fail(ErrorCode::SeedOutOfDomain, "seed outside the grid");
    PointCloud line{seed};
    Vec2 q = seed;
    double travelled = 0.0;
    for (int step = 0; step < cfg.max_steps; ++step) {
      Vec2 k1 = grid.sample(q);
      if (k1.norm() < cfg.speed_floor) break;
      Vec2 k2 = grid.sample(q + k1 * (h / 2));
      Vec2 k3 = grid.sample(q + k2 * (h / 2));
      Vec2 k4 = grid.sample(q + k3 * h);
      Vec2 next = q + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
      if (!grid.inside(next)) break;
      travelled += dist(next, q);
      q = next;
      line.push_back(q);
      if (cfg.close_loops && travelled > 4 * cfg.step && dist(q, seed) < cfg.step) break;
    }
    out.polylines.push_back(std::move(line));
  }
  return out;
}

PointCloud lattice_seeds(int n, double margin) {
  if (n < 1 || margin <= 0.0 || margin >= 1.0) fail(ErrorCode::DomainError, "bad lattice");
  PointCloud out;
  const double lo = -1.0 + margin, hi = 1.0 - margin;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double tx = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
      double ty = n == 1 ? 0.5 : static_cast<double>(j) / (n - 1);
      out.push_back({lo + (hi - lo) * tx, lo + (hi - lo) * ty});
    }
  return out;
}

PointCloud critical_seeds(const FieldGrid& grid, double speed_threshold) {
  PointCloud out;
  auto speed = [&](int i, int j) {
    auto k = static_cast<std::size_t>(j) * grid.nx + i;
    return std::hypot(grid.vx[k], grid.vy[k]);
  };
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const double s = speed(i, j);
      if (s >= speed_threshold) continue;
      bool minimum = true;
      for (int dj = -1; dj <= 1 && minimum; ++dj)
        for (int di = -1; di <= 1; ++di) {
          int a = i + di, b = j + dj;
          if ((di || dj) && a >= 0 && b >= 0 && a < grid.nx && b < grid.ny && speed(a, b) < s) {
            minimum = false;
            break;
          }
        }
      if (minimum) out.push_back(grid.node(i, j));
    }
  return out;
}

StreamlineSet perturb(const StreamlineSet& lines, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  StreamlineSet out = lines;
  for (auto& pl : out.polylines)
    for (auto& p : pl) {
      p.x += noise(rng);
      p.y += noise(rng);
    }
  return out;
}

namespace {

double max_norm(const PointCloud& c) {
  double m = 0.0;
  for (const auto& p : c) m = std::max(m, p.norm());
  return m;
}

PointCloud scaled(const PointCloud& c, double k) {
  PointCloud out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(p * k);
  return out;
}

// Mean over a of the distance to the nearest point of b; large b is bucketed
// on a uniform grid.
double directed(const PointCloud& a, const PointCloud& b) {
  double total = 0.0;
  if (b.size() < 64) {
    for (const auto& p : a) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : b) best = std::min(best, dist(p, q));
      total += best;
    }
    return total / static_cast<double>(a.size());
  }
  double lo_x = b[0].x, hi_x = b[0].x, lo_y = b[0].y, hi_y = b[0].y;
  for (const auto& p : b) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const int cells = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(b.size()) / 2.0)), 1, 512);
  const double w = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12}) / cells;
  const int side = cells + 1;
  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(side) * side);
  auto cell = [&](double v, double lo) { return static_cast<int>(std::floor((v - lo) / w)); };
  for (std::size_t k = 0; k < b.size(); ++k)
    buckets[static_cast<std::size_t>(cell(b[k].y, lo_y)) * side + cell(b[k].x, lo_x)].push_back(k);

  for (const auto& p : a) {
    const int ci = std::clamp(cell(p.x, lo_x), 0, side - 1), cj = std::clamp(cell(p.y, lo_y), 0, side - 1);
    // distance from p to its (clamped) cell; zero when p lies inside the bucket grid
    const double gap_x = std::max({lo_x + ci * w - p.x, p.x - (lo_x + (ci + 1) * w), 0.0});
    const double gap_y = std::max({lo_y + cj * w - p.y, p.y - (lo_y + (cj + 1) * w), 0.0});
    const double offset = std::hypot(gap_x, gap_y);
    double best = std::numeric_limits<double>::infinity();
    for (int ring = 0; ring <= side; ++ring) {
      for (int dj = -ring; dj <= ring; ++dj)
        for (int di = -ring; di <= ring; ++di) {
          if (std::max(std::abs(di), std::abs(dj)) != ring) continue;
          int i = ci + di, j = cj + dj;
          if (i < 0 || j < 0 || i >= side || j >= side) continue;
          for (auto k : buckets[static_cast<std::size_t>(j) * side + i]) best = std::min(best, dist(p, b[k]));
        }
      // unexamined cells lie at least ring * w from p's cell
      if (best <= ring * w - offset) break;
    }
    total += best;
  }
  return total / static_cast<double>(a.size());
}

}  // namespace

double chamfer(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty()) fail(ErrorCode::EmptyInput, "chamfer distance of an empty cloud");
  // one common factor, so relative geometry survives
  const double k = 1.0 / std::max({1.0, max_norm(a), max_norm(b)});
  PointCloud na = scaled(a, k), nb = scaled(b, k);
  return 0.5 * (directed(na, nb) + directed(nb, na));
}

double score_match(const StreamlineSet& lines, const OrbitImage& img) {
  PointCloud cloud = lines.cloud();
  if (cloud.empty() || img.points.empty()) fail(ErrorCode::EmptyInput, "score_match needs two nonempty clouds");
  return chamfer(cloud, img.points);
}

OrbitImage series_image(const TruncatedSeries& u, const FitConfig& cfg) {
  if (cfg.seeds.empty()) fail(ErrorCode::EmptyInput, "fit needs at least one seed");
  OrbitImage img;
  for (const auto& s : cfg.seeds) {
    auto x = PadicNumber::from_rational(s, cfg.embed.prime, cfg.precision);
    auto orbit = iterate(u, x, cfg.steps);
    auto part = orbit_image(orbit, cfg.embed, cfg.scale_normalized);
    img.points.insert(img.points.end(), part.points.begin(), part.points.end());
  }
  return img;
}

std::vector<RankEntry> fit_series(const StreamlineSet& lines, const std::vector<TruncatedSeries>& candidates,
                                  const FitConfig& cfg) {
  if (candidates.empty()) fail(ErrorCode::EmptyInput, "no candidate series");
  std::vector<RankEntry> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) out.push_back({i, score_match(lines, series_image(candidates[i], cfg))});
  std::stable_sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) { return a.score < b.score; });
  return out;
}

}  // namespace padyn
