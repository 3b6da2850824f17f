#include "padyn/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "padyn/error.hpp"
#include "padyn/number_theory.hpp"

namespace padyn {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_as(const std::string& key, const std::string& v) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    fail(ErrorCode::UsageError, "config key '" + key + "': cannot parse '" + v + "'");
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::UsageError, "config: " + what);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "prime") prime = parse_as<long>(key, value);
  else if (key == "precision") precision = parse_as<int>(key, value);
  else if (key == "n_max") n_max = parse_as<int>(key, value);
  else if (key == "grid") grid = parse_as<int>(key, value);
  else if (key == "window") window = parse_as<int>(key, value);
  else if (key == "weight_exponent") weight_exponent = parse_as<double>(key, value);
  else if (key == "gap_threshold") gap_threshold = parse_as<int>(key, value);
  else if (key == "energy_scale") energy_scale = parse_as<double>(key, value);
  else if (key == "output_dir") output_dir = value;
  else if (key == "ap_bound") ap_bound = parse_as<long>(key, value);
  else if (key == "depth") depth = parse_as<int>(key, value);
  else if (key == "pnt_x") pnt_x = parse_as<long>(key, value);
  else if (key == "axiom_x") axiom_x = parse_as<long>(key, value);
  else if (key == "growth_constant") growth_constant = parse_as<double>(key, value);
  else fail(ErrorCode::UsageError, "unknown config key '" + key + "'");
}

void RunConfig::validate() const {
  require(prime >= 2 && is_prime(Integer(prime)), "prime must be a prime");
  require(precision >= 1 && precision <= 2000, "precision must be in [1, 2000]");
  require(n_max >= 1 && n_max <= 100000, "n_max must be in [1, 100000]");
  require(grid >= 1 && grid <= 10000, "grid must be in [1, 10000]");
  require(window >= 1, "window must be >= 1");
  require(weight_exponent > 0.0, "weight_exponent must be positive");
  require(gap_threshold >= 1, "gap_threshold must be >= 1");
  require(energy_scale >= 0.0, "energy_scale must be >= 0");
  require(!output_dir.empty(), "output_dir must be nonempty");
  require(ap_bound >= 2, "ap_bound must be >= 2");
  require(depth >= 1 && depth <= 64, "depth must be in [1, 64]");
  require(pnt_x >= 10, "pnt_x must be >= 10");
  require(axiom_x >= 1, "axiom_x must be >= 1");
  require(growth_constant > 0.0, "growth_constant must be positive");
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::UsageError, "config line " + std::to_string(lineno) + ": expected key = value");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::IoFailure, "cannot open config " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

}  // namespace padyn
