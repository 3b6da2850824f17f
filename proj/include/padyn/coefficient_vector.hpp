#pragma once

#include <vector>

#include "padyn/number_theory.hpp"

namespace padyn {

// Truncated Fourier coefficients a(1..n_max) of a weight-2 form.
// level == 0 marks a formal family member with no attached level.
struct CoefficientVector {
  Integer level = 0;
  std::vector<Rational> coeffs;  // coeffs[n-1] = a(n)

  int n_max() const { return static_cast<int>(coeffs.size()); }
  const Rational& a(int n) const { return coeffs.at(static_cast<std::size_t>(n - 1)); }

  bool operator==(const CoefficientVector&) const = default;
};

}  // namespace padyn
