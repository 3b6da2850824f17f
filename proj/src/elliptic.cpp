#include "padyn/elliptic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "padyn/error.hpp"

namespace padyn {

WeierstrassCurve WeierstrassCurve::parse(std::string_view literal) {
  std::string s;
  for (char c : literal)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(ErrorCode::ParseError, "curve literal must be [a1,a2,a3,a4,a6]: '" + std::string(literal) + "'");
  std::vector<Rational> vals;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    vals.push_back(parse_rational(body.substr(start, comma - start)));
    start = comma + 1;
  }
  if (vals.size() != 5)
    fail(ErrorCode::ParseError, "curve literal needs exactly five coefficients: '" + std::string(literal) + "'");
  return {vals[0], vals[1], vals[2], vals[3], vals[4]};
}

std::string WeierstrassCurve::to_string() const {
  std::ostringstream out;
  out << "[" << a1.get_str() << "," << a2.get_str() << "," << a3.get_str() << "," << a4.get_str() << ","
      << a6.get_str() << "]";
  return out.str();
}

bool WeierstrassCurve::is_integral() const {
  auto c = coefficients();
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return padyn::is_integral(q); });
}

Rational discriminant(const WeierstrassCurve& e) {
  return invariants(e, false).delta;
}

CurveInvariants invariants(const WeierstrassCurve& e, bool require_nonsingular) {
  CurveInvariants iv;
  const auto& [a1, a2, a3, a4, a6] = e;
  iv.b2 = a1 * a1 + 4 * a2;
  iv.b4 = 2 * a4 + a1 * a3;
  iv.b6 = a3 * a3 + 4 * a6;
  iv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  iv.c4 = iv.b2 * iv.b2 - 24 * iv.b4;
  iv.c6 = -iv.b2 * iv.b2 * iv.b2 + 36 * iv.b2 * iv.b4 - 216 * iv.b6;
  iv.delta = -iv.b2 * iv.b2 * iv.b8 - 8 * iv.b4 * iv.b4 * iv.b4 - 27 * iv.b6 * iv.b6 + 9 * iv.b2 * iv.b4 * iv.b6;
  if (iv.delta == 0) {
    iv.singular = true;
    if (require_nonsingular) fail(ErrorCode::SingularCurve, "discriminant vanishes for " + e.to_string());
    iv.j = 0;
  } else {
    iv.j = iv.c4 * iv.c4 * iv.c4 / iv.delta;
  }
  return iv;
}

WeierstrassCurve change_coordinates(const WeierstrassCurve& e, const Rational& u, const Rational& r,
                                    const Rational& s, const Rational& t) {
  const auto& [a1, a2, a3, a4, a6] = e;
  Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  WeierstrassCurve out;
  out.a1 = (a1 + 2 * s) / u;
  out.a2 = (a2 - s * a1 + 3 * r - s * s) / u2;
  out.a3 = (a3 + r * a1 + 2 * t) / u3;
  out.a4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  out.a6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  return out;
}

IntegralModel integral_model(const WeierstrassCurve& e) {
  Integer u = 1;
  for (const auto& c : e.coefficients()) mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), c.get_den_mpz_t());
  if (u == 1) return {e, 1};
  // Scaling by u^{-1} multiplies a_i by u^i.
  return {change_coordinates(e, Rational(1, 1) / Rational(u), 0, 0, 0), u};
}

namespace {

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series shift(const Series& a, std::size_t k, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t i = 0; i + k <= degree && i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

}  // namespace

TruncatedSeries formal_expansion(const WeierstrassCurve& e, int order) {
  if (order < 1) fail(ErrorCode::InsufficientOrder, "formal expansion order must be positive");
  const std::size_t degree = static_cast<std::size_t>(3 + order);
  Series cube(degree + 1, Rational(0));
  cube[3] = 1;
  Series w = cube;
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass <= order; ++pass) {
    Series w2 = multiply(w, w, degree);
    Series w3 = multiply(w2, w, degree);
    Series zw = shift(w, 1, degree), z2w = shift(w, 2, degree), zw2 = shift(w2, 1, degree);
    Series next = cube;
    for (std::size_t i = 0; i <= degree; ++i)
      next[i] += e.a1 * zw[i] + e.a2 * z2w[i] + e.a3 * w2[i] + e.a4 * zw2[i] + e.a6 * w3[i];
    w = std::move(next);
  }
  TruncatedSeries out;
  for (int j = 1; j <= order; ++j) out.coefficients.push_back(w[static_cast<std::size_t>(3 + j)]);
  return out;
}

WeierstrassCurve series_to_curve(const TruncatedSeries& u) {
  if (u.truncation_order() < 6)
    fail(ErrorCode::InsufficientOrder, "recovering a6 needs A_1..A_6, got order " + std::to_string(u.truncation_order()));
  // a1, a2, a3, a4, a6 enter A_1, A_2, A_3, A_4, A_6 linearly with coefficient 1
  // and never earlier, so the system is solved by back-substitution.
  WeierstrassCurve e{};
  Rational WeierstrassCurve::*slots[] = {&WeierstrassCurve::a1, &WeierstrassCurve::a2, &WeierstrassCurve::a3,
                                         &WeierstrassCurve::a4, &WeierstrassCurve::a6};
  const int index[] = {1, 2, 3, 4, 6};
  for (int k = 0; k < 5; ++k) {
    TruncatedSeries current = formal_expansion(e, 6);
    e.*slots[k] = u.coefficient(index[k]) - current.coefficient(index[k]);
  }
  return e;
}

CoefficientVector l_coefficients(const WeierstrassCurve& e, int n_max, long ap_bound, bool with_level) {
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be positive");
  invariants(e);
  IntegralModel model = integral_model(e);
  const Rational delta = discriminant(model.curve);
  CoefficientVector out;
  out.coeffs.assign(static_cast<std::size_t>(n_max), Rational(0));
  out.coeffs[0] = 1;
  std::vector<long> ap(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<bool> good(static_cast<std::size_t>(n_max) + 1, true);
  for (std::int64_t p : primes_up_to(n_max)) {
    if (valuation(delta.get_num(), Integer(p)) == 0) {
      ap[p] = ap_count(model.curve, p, ap_bound);
    } else {
      ReductionData rd = tate_reduce(model.curve, p, ap_bound);
      ap[p] = rd.ap_or_flag;
      good[p] = rd.kind == ReductionKind::good;
    }
  }
  // Prime powers first, then multiplicativity via the smallest prime factor.
  for (std::int64_t p : primes_up_to(n_max)) {
    Rational prev = 1, cur = ap[p];
    for (std::int64_t q = p; q <= n_max; q *= p) {
      out.coeffs[static_cast<std::size_t>(q - 1)] = cur;
      Rational next = good[p] ? Rational(ap[p] * cur - p * prev) : Rational(ap[p] * cur);
      prev = cur;
      cur = next;
      if (q > n_max / p) break;
    }
  }
  for (int n = 2; n <= n_max; ++n) {
    int m = n;
    int p = 2;
    while (m % p != 0) ++p;
    int pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m > 1) out.coeffs[static_cast<std::size_t>(n - 1)] = out.a(pk) * out.a(m);
  }
  if (with_level) out.level = global_reduction(e, ap_bound).conductor;
  return out;
}

namespace {

using IntSeries = std::vector<Integer>;

IntSeries imul(const IntSeries& a, const IntSeries& b, std::size_t len) {
  IntSeries out(len, Integer(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1/a for a[0] == 1.
IntSeries iinverse(const IntSeries& a, std::size_t len) {
  IntSeries out(len, Integer(0));
  out[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * out[n - k];
    out[n] = -s;
  }
  return out;
}

Integer divisor_power_sum(long n, unsigned long k) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += ipow(Integer(d), k);
  return s;
}

// E4(q) and prod (1 - q^n)^24, both to len terms.
std::pair<IntSeries, IntSeries> eisenstein_and_eta24(std::size_t len) {
  IntSeries e4(len, Integer(0));
  e4[0] = 1;
  for (std::size_t n = 1; n < len; ++n) e4[n] = 240 * divisor_power_sum(static_cast<long>(n), 3);
  IntSeries eta(len, Integer(0));
  eta[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    IntSeries factor(len, Integer(0));
    factor[0] = 1;
    factor[n] = -1;
    for (int k = 0; k < 24; ++k) eta = imul(eta, factor, len);
  }
  return {e4, eta};
}

}  // namespace

std::vector<Integer> j_expansion(int count) {
  if (count < 1) return {};
  const std::size_t len = static_cast<std::size_t>(count);
  auto [e4, eta] = eisenstein_and_eta24(len);
  // j = q^{-1} E4^3 / prod(1 - q^n)^24
  IntSeries e4cubed = imul(imul(e4, e4, len), e4, len);
  return imul(e4cubed, iinverse(eta, len), len);
}

std::vector<Integer> tate_series(int terms) {
  if (terms < 1) fail(ErrorCode::DomainError, "need at least one Tate series term");
  const std::size_t len = static_cast<std::size_t>(terms);
  // 1/j = q g(q) and 1/g(q) = q j(q); solve q = J / g(q) for q(J).
  IntSeries inv_g = j_expansion(terms);
  // q(J) stored with index k -> coefficient of J^{k+1}.
  IntSeries q(len, Integer(0));
  q[0] = 1;
  for (std::size_t pass = 1; pass < len; ++pass) {
    // (1/g)(q(J)) = sum_m inv_g[m] q(J)^m; q(J)^m = J^m (q/J)^m.
    IntSeries ratio = q;  // q(J)/J as a series in J
    IntSeries composed(len, Integer(0));
    IntSeries power(len, Integer(0));
    power[0] = 1;
    for (std::size_t m = 0; m < len; ++m) {
      // J^m * ratio^m contributes from index m on.
      for (std::size_t i = 0; i + m < len; ++i) composed[i + m] += inv_g[m] * power[i];
      power = imul(power, ratio, len);
    }
    q = composed;  // q(J) = J * (1/g)(q(J))
  }
  return q;
}

TateParameter tate_parameter(const Rational& j, int terms, long p) {
  if (!is_prime(Integer(p))) fail(ErrorCode::DomainError, "p must be prime");
  if (j == 0 || valuation(j, Integer(p)) >= 0)
    fail(ErrorCode::BadReductionRequired, "Tate parameter needs |j|_p > 1, got j=" + j.get_str());
  TateParameter out;
  out.prime = p;
  out.j = j;
  out.h = tate_series(terms);
  Rational inv_j = Rational(1) / j, power = inv_j;
  out.q = 0;
  for (const auto& hn : out.h) {
    out.q += Rational(hn) * power;
    power *= inv_j;
  }
  out.valuation = valuation(out.q, Integer(p));
  return out;
}

FactorizationRecord factorize(const WeierstrassCurve& e1, const WeierstrassCurve& e2, int terms) {
  GlobalReduction g1 = global_reduction(e1), g2 = global_reduction(e2);
  if (!g1.semistable || !g2.semistable)
    fail(ErrorCode::NotSemistable, "factorization needs semi-stable curves");
  auto m1 = g1.multiplicative_primes(), m2 = g2.multiplicative_primes();
  std::vector<long> common;
  std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(common));
  if (common.empty())
    fail(ErrorCode::NoCommonBadPrime, "no common place of multiplicative reduction; change the ground field");
  FactorizationRecord rec;
  rec.common_prime = common.front();
  auto torus = [&](const WeierstrassCurve& e, const GlobalReduction& g) {
    Rational j = invariants(e).j;
    return TorusData{e, j, tate_parameter(j, terms, rec.common_prime), g.conductor};
  };
  rec.first = torus(e1, g1);
  rec.second = torus(e2, g2);
  return rec;
}

}  // namespace padyn
