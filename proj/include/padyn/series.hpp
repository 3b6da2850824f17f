#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "padyn/padic.hpp"

namespace padyn {

// u(x) = x^3 (1 + A_1 x + ... + A_J x^J).
//
// Coefficients are exact rationals so that the same object can come out of
// the formal group of a rational Weierstrass curve; evaluation in Z_p needs
// them p-integral. prime == 0 means "not bound to a prime".
struct TruncatedSeries {
  long prime = 0;
  std::vector<Rational> coefficients;  // A_1 .. A_J

  int truncation_order() const { return static_cast<int>(coefficients.size()); }
  // A_j for j >= 1, zero past the truncation order; A_0 = 1.
  Rational coefficient(int j) const;

  // Literal "x^3*(1 + A1*x + A2*x^2 + ...)".
  static TruncatedSeries parse(std::string_view literal, long prime = 0);
  std::string to_string() const;

  bool operator==(const TruncatedSeries&) const = default;
};

struct OrbitRecord {
  PadicNumber seed;
  std::vector<PadicNumber> iterates;  // iterates[0] == seed
  std::vector<int> valuations;
};

// Requires v(x) >= 1. v(u(x)) = 3 v(x).
PadicNumber evaluate(const TruncatedSeries& u, const PadicNumber& x);

OrbitRecord iterate(const TruncatedSeries& u, const PadicNumber& seed, int steps);

// x in V_n = u^{-1}(p^n Z_p \ p^{n+1} Z_p).
bool vn_membership(const TruncatedSeries& u, const PadicNumber& x, int n);

}  // namespace padyn
