#include "padyn/modular.hpp"

#include <cmath>

#include "padyn/error.hpp"

namespace padyn {

double MetricConfig::weight(int n) const { return std::pow(static_cast<double>(n), -weight_exponent); }

CoefficientVector newform_vector(const WeierstrassCurve& e, int n_max, long ap_bound) {
  GlobalReduction g = global_reduction(e, ap_bound);
  if (!g.semistable) fail(ErrorCode::NotSemistable, e.to_string() + " has additive reduction somewhere");
  CoefficientVector v = l_coefficients(e, n_max, ap_bound, false);
  v.level = g.conductor;
  return v;
}

CoefficientVector combine(const CoefficientVector& f1, const CoefficientVector& f2, const Rational& t,
                          bool clear_denominator) {
  if (f1.n_max() != f2.n_max()) fail(ErrorCode::SizeMismatch, "coefficient vectors of different length");
  if (t < 0 || t > 1) fail(ErrorCode::DomainError, "family parameter must lie in [0,1]");
  CoefficientVector out;
  if (t == 0) out.level = f1.level;
  else if (t == 1) out.level = f2.level;
  else mpz_lcm(out.level.get_mpz_t(), f1.level.get_mpz_t(), f2.level.get_mpz_t());
  out.coeffs.reserve(f1.coeffs.size());
  const Rational s = 1 - t;
  for (std::size_t i = 0; i < f1.coeffs.size(); ++i) out.coeffs.push_back(s * f1.coeffs[i] + t * f2.coeffs[i]);
  if (clear_denominator && !out.coeffs.empty()) {
    const Rational scale = out.coeffs[0];
    if (scale == 0) fail(ErrorCode::DegenerateCombination, "combined a(1) vanishes");
    if (scale != 1)
      for (auto& c : out.coeffs) c /= scale;
  }
  return out;
}

double distance(const CoefficientVector& f, const CoefficientVector& g, const MetricConfig& cfg) {
  if (f.n_max() != g.n_max()) fail(ErrorCode::SizeMismatch, "coefficient vectors of different length");
  const int n_max = std::min(cfg.n_max, f.n_max());
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    double d = Rational(f.a(n) - g.a(n)).get_d();
    sum += cfg.weight(n) * d * d;
  }
  return std::sqrt(sum);
}

}  // namespace padyn
