#include "padyn/tfilter.hpp"

#include <algorithm>
#include <set>

#include "padyn/error.hpp"

namespace padyn {

namespace {

Rational schedule(const Rational& r, const Rational& r_star, int m) {
  Rational step = (r_star - r);
  step /= Rational(ipow(Integer(2), static_cast<unsigned long>(m)));
  return r + step;
}

void check_radii(const Rational& r, const Rational& r_star) {
  if (!(r > 0 && r < r_star && r_star < 1))
    fail(ErrorCode::InvalidRadii, "need 0 < r < r* < 1, got r=" + r.get_str() + ", r*=" + r_star.get_str());
}

}  // namespace

HoleSequence generate_hole_sequence(const Rational& r, const Rational& r_star, int count) {
  check_radii(r, r_star);
  if (count < 1) fail(ErrorCode::InvalidRadii, "hole count must be positive");
  HoleSequence seq{r, r_star, {}};
  for (int m = 1; m <= count; ++m) {
    Rational radius = schedule(r, r_star, m);
    seq.holes.push_back({m, radius, radius, m});
  }
  return seq;
}

FilterBase canonical_filter_base(const Rational& r, const Rational& r_star, int length) {
  check_radii(r, r_star);
  FilterBase base{r, {}};
  for (int n = 0; n < length; ++n) base.annulus_radii.push_back(schedule(r, r_star, n));
  return base;
}

FilterBase canonical_filter_base(const HoleSequence& seq) {
  return canonical_filter_base(seq.beach_radius, seq.outer_radius, static_cast<int>(seq.holes.size()) + 2);
}

SpecReport verify_specs(const HoleSequence& seq, const FilterBase& base, int first_annulus) {
  SpecReport rep;
  const auto& holes = seq.holes;

  std::set<int> sides;
  rep.spec_i = true;
  for (const auto& h : holes) {
    if (!sides.insert(h.side_id).second) {
      rep.spec_i = false;
      rep.details.push_back("condition i: side " + std::to_string(h.side_id) + " carries more than one hole");
    }
  }

  rep.spec_ii = true;
  for (std::size_t m = 0; m < holes.size(); ++m) {
    const auto& h = holes[m];
    if (!(h.radius > seq.beach_radius && h.radius < seq.outer_radius)) {
      rep.spec_ii = false;
      rep.details.push_back("condition ii: hole " + std::to_string(h.index) + " radius " + h.radius.get_str() + " outside (r, r*)");
    }
    if (m > 0 && !(h.radius < holes[m - 1].radius)) {
      rep.spec_ii = false;
      rep.details.push_back("condition ii: radii not strictly decreasing at hole " + std::to_string(h.index));
    }
  }

  rep.spec_iii = true;
  for (const auto& h : holes) {
    if (h.distance_to_beach != h.radius) {
      rep.spec_iii = false;
      rep.details.push_back("condition iii: hole " + std::to_string(h.index) + " distance to beach differs from its radius");
    }
  }

  rep.spec_iv = true;
  const auto& rn = base.annulus_radii;
  for (std::size_t n = 0; n < rn.size(); ++n) {
    if (!(rn[n] > base.center_radius) || (n + 1 < rn.size() && !(rn[n] > rn[n + 1]))) {
      rep.spec_iv = false;
      rep.details.push_back("condition iv: filter base radii not strictly decreasing onto r at index " + std::to_string(n));
    }
  }
  for (std::size_t n = static_cast<std::size_t>(std::max(first_annulus, 0)); n + 1 < rn.size(); ++n) {
    int inside = 0;
    for (const auto& h : holes)
      if (h.radius > rn[n + 1] && h.radius <= rn[n]) ++inside;
    if (inside > 1) {
      rep.spec_iv = false;
      rep.details.push_back("condition iv: annulus " + std::to_string(n) + " contains " + std::to_string(inside) + " hole radii");
    }
  }
  if (!rn.empty()) {
    for (const auto& h : holes) {
      if (h.radius <= rn.back() || h.radius > rn.front()) {
        rep.spec_iv = false;
        rep.details.push_back("condition iv: hole " + std::to_string(h.index) + " not covered by the filter base");
      }
    }
  }
  return rep;
}

ContinuationAdjustment::ContinuationAdjustment(Evaluator y, Evaluator y_prime,
                                               std::vector<std::pair<Rational, Rational>> samples,
                                               std::vector<Rational> factors)
    : y_(std::move(y)), y_prime_(std::move(y_prime)), samples_(std::move(samples)), factors_(std::move(factors)) {}

Rational ContinuationAdjustment::operator()(const Rational& z) const {
  Rational base = y_(z);
  if (samples_.empty()) return base;
  std::size_t best = 0;
  Rational best_dist = abs(z - samples_[0].first);
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    Rational d = abs(z - samples_[k].first);
    if (d < best_dist) {
      best_dist = d;
      best = k;
    }
  }
  if (factors_[best] == 0) return base;
  return base + factors_[best] * y_prime_(z);
}

Evaluator ContinuationAdjustment::as_evaluator() const {
  return [self = *this](const Rational& z) { return self(z); };
}

ContinuationAdjustment continuation_adjust(const Evaluator& y, const Evaluator& y_prime,
                                           const std::vector<std::pair<Rational, Rational>>& eta) {
  std::vector<Rational> factors;
  factors.reserve(eta.size());
  for (const auto& [point, target] : eta) {
    Rational slope = y_prime(point);
    if (slope == 0) fail(ErrorCode::DivisionByZero, "y' vanishes at sample " + point.get_str());
    factors.push_back((target - y(point)) / slope);
  }
  return ContinuationAdjustment(y, y_prime, eta, std::move(factors));
}

}  // namespace padyn
