#include "padyn/formation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "padyn/error.hpp"

namespace padyn {

NormalizedCoefficients normalize(const std::vector<Rational>& a) {
  if (a.empty()) fail(ErrorCode::DomainError, "need at least a(2)");
  NormalizedCoefficients out;
  out.n_star = static_cast<int>(a.size()) + 1;
  out.n2 = 0;
  for (const auto& c : a) out.n2 += c;
  if (out.n2 == 0) fail(ErrorCode::ZeroSum, "coefficients a(2..n*) sum to zero");
  for (const auto& c : a) out.values.push_back(c / out.n2);
  return out;
}

Rational CharacterTable::reduced_angle(int n) const {
  Rational theta = angles.at(static_cast<std::size_t>(n - 2));
  // theta - 2 ceil((theta - 1) / 2) lies in (-1, 1].
  Rational half = (theta - 1) / 2;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  return theta - 2 * Rational(k);
}

std::complex<double> CharacterTable::value(std::int64_t n) const {
  std::int64_t r = ((n % p_star) + p_star) % p_star;
  if (r == 0) return {0.0, 0.0};
  if (r < 2 || r > n_star) return {1.0, 0.0};
  double angle = std::numbers::pi * reduced_angle(static_cast<int>(r)).get_d();
  return std::polar(1.0, angle);
}

namespace {

bool is_even_integer(const Rational& q) {
  return q.get_den() == 1 && mpz_even_p(q.get_num_mpz_t());
}

}  // namespace

long minimal_prime(int n_star, const std::vector<Rational>& angles) {
  if (n_star < 2) fail(ErrorCode::DomainError, "n* must be at least 2");
  bool any_nontrivial = false;
  for (const auto& a : angles) any_nontrivial = any_nontrivial || !is_even_integer(a);
  if (!any_nontrivial) fail(ErrorCode::DomainError, "every angle is trivial; no prime gives a non-principal function");
  // For p > n* the residues 2..n* are distinct units, so the first prime
  // past n* already carries a nontrivial value.
  for (Integer p = next_prime(Integer(n_star));; p = next_prime(p)) {
    for (int n = 2; n <= n_star; ++n)
      if (!is_even_integer(angles.at(static_cast<std::size_t>(n - 2)))) return p.get_si();
  }
}

CharacterTable character_table(const std::vector<Rational>& a) {
  NormalizedCoefficients norm = normalize(a);
  CharacterTable tbl;
  tbl.n_star = norm.n_star;
  tbl.n2 = norm.n2;
  tbl.angles = norm.values;
  tbl.p_star = minimal_prime(tbl.n_star, tbl.angles);
  return tbl;
}

std::vector<Rational> recovered_coefficients(const CharacterTable& tbl, SignMode mode) {
  std::vector<Rational> out;
  for (int n = 2; n <= tbl.n_star; ++n) {
    Rational theta = tbl.reduced_angle(n);
    // arccos(cos(pi theta)) / pi = |theta| on (-1, 1]; sin(pi theta) has the sign of theta.
    Rational magnitude = abs(theta);
    out.push_back(tbl.n2 * (mode == SignMode::restored && theta < 0 ? Rational(-magnitude) : magnitude));
  }
  return out;
}

namespace {

void check_abscissa(double s) {
  if (!(s > 2.0)) fail(ErrorCode::DomainError, "absolute convergence needs s > 2");
}

}  // namespace

double recovery_sum(const CharacterTable& tbl, double s, SignMode mode) {
  check_abscissa(s);
  auto rec = recovered_coefficients(tbl, mode);
  return truncated_dirichlet(rec, s);
}

double recovery_sum_numeric(const CharacterTable& tbl, double s, SignMode mode) {
  check_abscissa(s);
  const double n2 = tbl.n2.get_d();
  double sum = 0.0;
  for (int n = 2; n <= tbl.n_star; ++n) {
    std::complex<double> chi = std::polar(1.0, std::numbers::pi * tbl.angles[static_cast<std::size_t>(n - 2)].get_d());
    double term = std::acos(std::clamp(chi.real(), -1.0, 1.0));
    if (mode == SignMode::restored && chi.imag() < 0) term = -term;
    sum += term * std::pow(static_cast<double>(n), -s);
  }
  return n2 / std::numbers::pi * sum;
}

double truncated_dirichlet(const std::vector<Rational>& a, double s) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k].get_d() * std::pow(static_cast<double>(k + 2), -s);
  return sum;
}

double tail_bound(int n_star, double sigma, double growth_constant) {
  if (!(sigma > 2.0)) fail(ErrorCode::DomainError, "tail bound needs sigma > 2");
  if (n_star < 1) fail(ErrorCode::DomainError, "n* must be positive");
  return growth_constant * std::pow(static_cast<double>(n_star), 2.0 - sigma) / (sigma - 2.0);
}

ClassCounts class_counts(const Formation& f, long h, std::int64_t x) {
  if (f.p_star < 2 || !is_prime(Integer(f.p_star))) fail(ErrorCode::DomainError, "p* must be prime");
  if (h % f.p_star == 0) fail(ErrorCode::DomainError, "class must be a unit residue");
  const std::int64_t r = ((h % f.p_star) + f.p_star) % f.p_star;
  ClassCounts out;
  if (x >= r) out.norm_count = (x - r) / f.p_star + 1;
  for (std::int64_t p : primes_up_to(x))
    if (p % f.p_star == r) ++out.prime_count;
  return out;
}

double axiom_a_max_error(long p_star, std::int64_t x_max) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p_star), 0);
  const double inv = 1.0 / static_cast<double>(p_star);
  double worst = 0.0;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    const std::int64_t r = x % p_star;
    if (r != 0) ++counts[static_cast<std::size_t>(r)];
    const double expected = static_cast<double>(x) * inv;
    for (long h = 1; h < p_star; ++h) worst = std::max(worst, std::abs(static_cast<double>(counts[h]) - expected));
  }
  return worst;
}

std::vector<double> pnt_ratios(long p_star, std::int64_t x) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p_star), 0);
  for (std::int64_t p : primes_up_to(x)) ++counts[static_cast<std::size_t>(p % p_star)];
  const double scale = static_cast<double>(p_star - 1) * std::log(static_cast<double>(x)) / static_cast<double>(x);
  std::vector<double> out;
  for (long h = 1; h < p_star; ++h) out.push_back(static_cast<double>(counts[h]) * scale);
  return out;
}

}  // namespace padyn
