#include "padyn/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "padyn/config.hpp"
#include "padyn/error.hpp"
#include "padyn/json_io.hpp"
#include "padyn/modular.hpp"
#include "padyn/svg.hpp"

namespace padyn {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) fail(ErrorCode::UsageError, "empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) fail(ErrorCode::UsageError, "empty list");
  return out;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

long parse_prime_option(const std::string& text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p() || !is_prime(q.get_num()))
    fail(ErrorCode::UsageError, "--p expects a prime, got '" + text + "'");
  return q.get_num().get_si();
}

fs::path output_path(const RunConfig& cfg, const std::string& cli_dir, const std::string& name) {
  fs::path file(name);
  if (file.is_absolute()) return file;
  std::string dir = cfg.output_dir;
  if (const char* env = std::getenv("PADYN_OUTPUT_DIR"); env && *env) dir = env;
  if (!cli_dir.empty()) dir = cli_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoFailure, "cannot create output directory " + dir);
  return fs::path(dir) / file;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  f << text;
  if (!f) fail(ErrorCode::IoFailure, "write to " + path.string() + " failed");
}

std::string read_text(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// distances of every appropriate fibre to both endpoints, against t
std::string distance_plot(const std::vector<FiberRecord>& records, const MetricConfig& metric) {
  svg::Layer to1{"d-to-e1", svg::palette(0), {}, true, true};
  svg::Layer to2{"d-to-e2", svg::palette(1), {}, true, true};
  const auto& f1 = *records.front().coeff_vector;
  const auto& f2 = *records.back().coeff_vector;
  double top = 0.0;
  for (const auto& r : records) {
    if (!r.coeff_vector) continue;
    double t = r.t.get_d();
    double a = distance(*r.coeff_vector, f1, metric), b = distance(*r.coeff_vector, f2, metric);
    to1.points.push_back({t, a});
    to2.points.push_back({t, b});
    top = std::max({top, a, b});
  }
  if (top <= 0.0) top = 1.0;
  svg::Canvas canvas{-0.05, 1.05, -0.05 * top, 1.05 * top, 800, "distance to endpoint newforms versus t"};
  return svg::document(canvas, {to1, to2}, false);
}

struct Shared {
  std::string config_path;
  std::string output_dir;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic dynamics, elliptic curve and field-matching toolkit", "padyn"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Shared shared;
  app.add_option("--config", shared.config_path, "key = value config file");
  app.add_option("--output-dir", shared.output_dir, "directory for emitted files");

  // orbit
  std::string series_text, seed_text = "3", seeds_text = "3", curve_text, e1_text, e2_text, j_text;
  std::string p_text, coeffs_text, field_path, candidates_path, out_name, objective = "max", seeding = "critical";
  std::string kind = "vortex-street", r_text, rstar_text;
  int steps = 4, order = 8, terms = 10, n_star = 0, lattice = 9, max_steps = 100, count = 10, field_n = 801;
  int precision = -1, nmax = -1, grid = -1, window = -1, depth = -1;
  double s_value = 3.0, trace_step = 1.0, speed_floor = 0.0;
  bool normalized = false;

  auto* orbit = app.add_subcommand("orbit", "iterate u(x) = x^3(1 + ...) from a seed in pZ_p");
  orbit->add_option("--series", series_text, "series literal")->required();
  orbit->add_option("--p", p_text, "prime")->required();
  orbit->add_option("--seed", seed_text, "rational seed with positive valuation");
  orbit->add_option("--steps", steps);
  orbit->add_option("--precision", precision);

  auto* render_cmd = app.add_subcommand("render", "draw orbit images in the planar model of Z_p as SVG");
  render_cmd->add_option("--series", series_text)->required();
  render_cmd->add_option("--p", p_text)->required();
  render_cmd->add_option("--seeds", seeds_text, "comma separated seeds, one layer each");
  render_cmd->add_option("--steps", steps);
  render_cmd->add_option("--depth", depth);
  render_cmd->add_option("--precision", precision);
  render_cmd->add_option("--out", out_name, "SVG file name")->required();
  render_cmd->add_flag("--normalized", normalized, "embed unit parts of the iterates");

  auto* c_from_s = app.add_subcommand("curve-from-series", "recover [a1,a2,a3,a4,a6] from a formal-group series");
  c_from_s->add_option("--series", series_text)->required();

  auto* s_from_c = app.add_subcommand("series-from-curve", "formal-group expansion of a curve");
  s_from_c->add_option("--curve", curve_text)->required();
  s_from_c->add_option("--order", order);

  auto* tate = app.add_subcommand("tate", "local reduction data at p");
  tate->add_option("--curve", curve_text)->required();
  tate->add_option("--p", p_text)->required();

  auto* lseries = app.add_subcommand("lseries", "coefficients a(1..n) of L(s, E)");
  lseries->add_option("--curve", curve_text)->required();
  lseries->add_option("--nmax", nmax);

  auto* qparam = app.add_subcommand("qparam", "Tate parameter q(j) at p");
  qparam->add_option("--j", j_text)->required();
  qparam->add_option("--p", p_text)->required();
  qparam->add_option("--terms", terms);

  auto* fact = app.add_subcommand("factorize", "pair of Tate tori over a common multiplicative prime");
  fact->add_option("--e1", e1_text)->required();
  fact->add_option("--e2", e2_text)->required();
  fact->add_option("--terms", terms);

  auto* formation = app.add_subcommand("formation", "character table, recovery sum and formation counts");
  formation->add_option("--coeffs", coeffs_text, "a(2),...,a(n*)");
  formation->add_option("--curve", curve_text, "take a(2..n*) from L(s, E)");
  formation->add_option("--nstar", n_star);
  formation->add_option("--s", s_value, "real s > 2");

  auto* surface = app.add_subcommand("surface-scan", "fibre table, geodesic path and gap report");
  auto* geodesic = app.add_subcommand("geodesic", "geodesic path only");
  for (auto* sub : {surface, geodesic}) {
    sub->add_option("--e1", e1_text)->required();
    sub->add_option("--e2", e2_text)->required();
    sub->add_option("--grid", grid);
    sub->add_option("--p", p_text, "prime or auto");
    sub->add_option("--window", window);
    sub->add_option("--nmax", nmax);
    sub->add_option("--objective", objective)->check(CLI::IsMember({"max", "min"}));
  }
  surface->add_option("--plot", out_name, "SVG of endpoint distances versus t");

  auto* match = app.add_subcommand("match-field", "rank candidate series against a vector field");
  match->add_option("--field", field_path)->required();
  match->add_option("--candidates", candidates_path, "one series literal per line")->required();
  match->add_option("--p", p_text)->required();
  match->add_option("--seeds", seeds_text);
  match->add_option("--steps", steps);
  match->add_option("--depth", depth);
  match->add_option("--precision", precision);
  match->add_option("--seeding", seeding)->check(CLI::IsMember({"critical", "lattice"}));
  match->add_option("--lattice", lattice);
  match->add_option("--trace-step", trace_step);
  match->add_option("--max-steps", max_steps);
  match->add_option("--speed-floor", speed_floor);

  auto* synth = app.add_subcommand("synth-field", "write a synthetic field file");
  synth->add_option("--kind", kind)->check(CLI::IsMember({"vortex-street", "nested-circles", "rotation", "orbit"}));
  synth->add_option("--n", field_n);
  synth->add_option("--series", series_text, "for --kind orbit");
  synth->add_option("--p", p_text);
  synth->add_option("--seeds", seeds_text);
  synth->add_option("--steps", steps);
  synth->add_option("--depth", depth);
  synth->add_option("--precision", precision);
  synth->add_option("--out", out_name)->required();

  auto* tfilter = app.add_subcommand("tfilter-check", "hole sequence and the four filter conditions");
  tfilter->add_option("--r", r_text)->required();
  tfilter->add_option("--rstar", rstar_text)->required();
  tfilter->add_option("--count", count);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    RunConfig cfg = shared.config_path.empty() ? RunConfig{} : RunConfig::load(shared.config_path);
    if (precision < 0) precision = cfg.precision;
    if (nmax < 0) nmax = cfg.n_max;
    if (grid < 0) grid = cfg.grid;
    if (window < 0) window = cfg.window;
    if (depth < 0) depth = cfg.depth;
    MetricConfig metric{nmax, cfg.weight_exponent};
    auto prime_or_default = [&] { return p_text.empty() ? cfg.prime : parse_prime_option(p_text); };
    auto embed_cfg = [&](long p) { return EmbedConfig{p, depth, 0.0}; };
    Json result;

    if (orbit->parsed()) {
      long p = prime_or_default();
      auto u = TruncatedSeries::parse(series_text, p);
      auto x = PadicNumber::from_rational(parse_rational(seed_text), p, precision);
      result = to_json(iterate(u, x, steps));
    } else if (render_cmd->parsed()) {
      long p = prime_or_default();
      auto u = TruncatedSeries::parse(series_text, p);
      std::vector<OrbitImage> images;
      for (const auto& s : rational_list(seeds_text)) {
        auto orbit_rec = iterate(u, PadicNumber::from_rational(s, p, precision), steps);
        images.push_back(orbit_image(orbit_rec, embed_cfg(p), normalized, to_string(s)));
      }
      auto path = output_path(cfg, shared.output_dir, out_name);
      render(images, path);
      result["file"] = path.string();
      result["layers"] = images.size();
    } else if (c_from_s->parsed()) {
      result["curve"] = to_json(series_to_curve(TruncatedSeries::parse(series_text)));
    } else if (s_from_c->parsed()) {
      auto e = WeierstrassCurve::parse(curve_text);
      auto u = formal_expansion(e, order);
      result["series"] = u.to_string();
      result["coefficients"] = Json::array();
      for (const auto& a : u.coefficients) result["coefficients"].push_back(rational_json(a));
    } else if (tate->parsed()) {
      result = to_json(tate_reduce(WeierstrassCurve::parse(curve_text), parse_prime_option(p_text), cfg.ap_bound));
    } else if (lseries->parsed()) {
      auto e = WeierstrassCurve::parse(curve_text);
      result["curve"] = to_json(e);
      auto f = l_coefficients(e, nmax, cfg.ap_bound, true);
      result["level"] = integer_json(f.level);
      result["a"] = to_json(f)["a"];
    } else if (qparam->parsed()) {
      result = to_json(tate_parameter(parse_rational(j_text), terms, parse_prime_option(p_text)));
    } else if (fact->parsed()) {
      result = to_json(factorize(WeierstrassCurve::parse(e1_text), WeierstrassCurve::parse(e2_text), terms));
    } else if (formation->parsed()) {
      std::vector<Rational> a;
      if (!coeffs_text.empty() == !curve_text.empty())
        fail(ErrorCode::UsageError, "formation needs exactly one of --coeffs and --curve");
      if (!coeffs_text.empty()) {
        a = rational_list(coeffs_text);
      } else {
        if (n_star < 2) fail(ErrorCode::UsageError, "--curve needs --nstar >= 2");
        auto f = l_coefficients(WeierstrassCurve::parse(curve_text), n_star, cfg.ap_bound, false);
        a.assign(f.coeffs.begin() + 1, f.coeffs.end());
      }
      auto tbl = character_table(a);
      result["p_star"] = tbl.p_star;
      result["n_star"] = tbl.n_star;
      result["n2"] = rational_json(tbl.n2);
      result["s"] = s_value;
      result["recovery_sum"] = recovery_sum(tbl, s_value, SignMode::magnitude);
      result["recovery_sum_signed"] = recovery_sum(tbl, s_value, SignMode::restored);
      result["truncated_l"] = truncated_dirichlet(a, s_value);
      result["tail_bound"] = tail_bound(tbl.n_star, s_value, cfg.growth_constant);
      result["axiomA_max_err"] = axiom_a_max_error(tbl.p_star, cfg.axiom_x);
      result["pnt_x"] = cfg.pnt_x;
      result["pnt_ratios"] = pnt_ratios(tbl.p_star, cfg.pnt_x);
    } else if (surface->parsed() || geodesic->parsed()) {
      auto e1 = WeierstrassCurve::parse(e1_text), e2 = WeierstrassCurve::parse(e2_text);
      FiberFamily fam{e1, e2, FiberFamily::uniform_grid(grid), 0};
      fam.working_prime = (p_text.empty() || p_text == "auto") ? auto_working_prime(e1, e2) : parse_prime_option(p_text);
      auto records = scan(fam, nmax, cfg.ap_bound);
      GeodesicConfig gcfg{metric, window,
                          objective == "max" ? GeodesicObjective::max_variation : GeodesicObjective::min_variation};
      result["working_prime"] = fam.working_prime;
      PathSelection path;
      if (surface->parsed()) {
        result["fibers"] = Json::array();
        for (const auto& r : records) result["fibers"].push_back(to_json(r));
        // the scan is still worth reporting when no path exists
        try {
          path = select_geodesic(records, gcfg);
          result["path"] = to_json(path);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoAdmissiblePath) throw;
          path.gap_runs = gap_runs(records);
          result["path"] = nullptr;
          result["path_error"] = e.what();
        }
      } else {
        path = select_geodesic(records, gcfg);
        result["path"] = to_json(path);
      }
      result["report"] = to_json(precursor_report(path, cfg.energy_scale, cfg.gap_threshold));
      if (surface->parsed() && !out_name.empty()) {
        auto file = output_path(cfg, shared.output_dir, out_name);
        write_text(file, distance_plot(records, metric));
        result["plot"] = file.string();
      }
    } else if (match->parsed()) {
      long p = parse_prime_option(p_text);
      auto grid_data = load_field(field_path);
      std::vector<TruncatedSeries> candidates;
      std::istringstream lines_in(read_text(candidates_path));
      for (std::string line; std::getline(lines_in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
          continue;
        candidates.push_back(TruncatedSeries::parse(line, p));
      }
      FitConfig fit{embed_cfg(p), precision, rational_list(seeds_text), steps, true};
      TraceConfig tc;
      tc.step = trace_step;
      tc.max_steps = max_steps;
      tc.speed_floor = speed_floor;
      auto seeds = seeding == "critical" ? critical_seeds(grid_data, grid_data.spacing) : lattice_seeds(lattice);
      auto lines = trace(grid_data, seeds, tc);
      result["streamlines"] = lines.polylines.size();
      result["points"] = lines.point_count();
      result["ranking"] = to_json(fit_series(lines, candidates, fit));
    } else if (synth->parsed()) {
      FieldGrid g;
      if (kind == "vortex-street") g = vortex_street(field_n);
      else if (kind == "nested-circles") g = nested_circles(field_n);
      else if (kind == "rotation") g = rotation_field(field_n);
      else {
        if (series_text.empty()) fail(ErrorCode::UsageError, "--kind orbit needs --series");
        long p = prime_or_default();
        FitConfig fit{embed_cfg(p), precision, rational_list(seeds_text), steps, true};
        g = orbit_field({series_image(TruncatedSeries::parse(series_text, p), fit)}, {field_n, 0.0});
      }
      auto file = output_path(cfg, shared.output_dir, out_name);
      if (file.extension() == ".json") save_field_json(g, file);
      else save_field_csv(g, file);
      result["file"] = file.string();
      result["nx"] = g.nx;
      result["ny"] = g.ny;
    } else if (tfilter->parsed()) {
      Rational r = parse_rational(r_text), rs = parse_rational(rstar_text);
      auto seq = generate_hole_sequence(r, rs, count);
      auto base = canonical_filter_base(seq);
      result["sequence"] = to_json(seq);
      result["specs"] = to_json(verify_specs(seq, base));
    }
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(e.name());
    j["message"] = e.what();
    out << j.dump(2) << "\n";
    if (e.code() == ErrorCode::UsageError) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 1;
  }
}

}  // namespace padyn
