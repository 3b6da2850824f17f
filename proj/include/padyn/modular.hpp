#pragma once

#include "padyn/coefficient_vector.hpp"
#include "padyn/elliptic.hpp"

namespace padyn {

// Weighted l2 proxy for the Petersson distance on truncated coefficient
// vectors: w_n = n^{-weight_exponent}.
struct MetricConfig {
  int n_max = 50;
  double weight_exponent = 2.0;

  double weight(int n) const;
};

// Coefficient vector of the newform attached to a semi-stable curve;
// level is the conductor (product of the multiplicative primes).
CoefficientVector newform_vector(const WeierstrassCurve& e, int n_max, long ap_bound = 10000);

// (1 - t) f1 + t f2, then divided by the combined a(1) when clear_denominator.
CoefficientVector combine(const CoefficientVector& f1, const CoefficientVector& f2, const Rational& t,
                          bool clear_denominator = true);

double distance(const CoefficientVector& f, const CoefficientVector& g, const MetricConfig& cfg);

}  // namespace padyn
