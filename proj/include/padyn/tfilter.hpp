#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "padyn/number_theory.hpp"

namespace padyn {

// Holes are carried only through their metric data: which side of zero they
// sit on and their radius. Radii live in the value group [0, +inf) and are
// kept as exact rationals.
struct HoleRecord {
  int side_id = 0;
  Rational radius;
  Rational distance_to_beach;
  int index = 0;
};

struct HoleSequence {
  Rational beach_radius;  // r
  Rational outer_radius;  // r*
  std::vector<HoleRecord> holes;
};

// Annuli Gamma(0, r_{n+1}, r_n) shrinking onto the beach radius r.
struct FilterBase {
  Rational center_radius;
  std::vector<Rational> annulus_radii;
};

struct SpecReport {
  bool spec_i = false;    // holes on pairwise distinct sides of zero
  bool spec_ii = false;   // radii strictly decreasing inside (r, r*)
  bool spec_iii = false;  // each radius equals its distance to the beach
  bool spec_iv = false;   // each annulus of the base meets at most one hole radius
  std::vector<std::string> details;

  bool all() const { return spec_i && spec_ii && spec_iii && spec_iv; }
};

// Radii r_m = r + (r* - r) / 2^m, m = 1..count, on sides 1..count.
HoleSequence generate_hole_sequence(const Rational& r, const Rational& r_star, int count);

// r_n = r + (r* - r) / 2^n for n = 0..length-1.
FilterBase canonical_filter_base(const Rational& r, const Rational& r_star, int length);
// Base long enough that annulus (r_{m+1}, r_m] exists for every hole m.
FilterBase canonical_filter_base(const HoleSequence& seq);

// Annuli before first_annulus are exempt from condition iv.
SpecReport verify_specs(const HoleSequence& seq, const FilterBase& base, int first_annulus = 0);

using Evaluator = std::function<Rational(const Rational&)>;

// y0 = y + lambda * y', with lambda = (target - y(point)) / y'(point) fixed
// per sample. Off the samples, y0 uses the lambda of the nearest sample point
// (first one on ties).
class ContinuationAdjustment {
public:
  ContinuationAdjustment(Evaluator y, Evaluator y_prime,
                         std::vector<std::pair<Rational, Rational>> samples,
                         std::vector<Rational> factors);

  Rational operator()(const Rational& z) const;
  const std::vector<Rational>& factors() const { return factors_; }
  const std::vector<std::pair<Rational, Rational>>& samples() const { return samples_; }
  Evaluator as_evaluator() const;

private:
  Evaluator y_;
  Evaluator y_prime_;
  std::vector<std::pair<Rational, Rational>> samples_;
  std::vector<Rational> factors_;
};

// eta: (eta_1(tau), eta_2(tau)) pairs. DivisionByZero when y' vanishes at a sample.
ContinuationAdjustment continuation_adjust(const Evaluator& y, const Evaluator& y_prime,
                                           const std::vector<std::pair<Rational, Rational>>& eta);

}  // namespace padyn
