#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "padyn/coefficient_vector.hpp"
#include "padyn/number_theory.hpp"
#include "padyn/series.hpp"

namespace padyn {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;

  // "[a1,a2,a3,a4,a6]", entries may be fractions.
  static WeierstrassCurve parse(std::string_view literal);
  std::string to_string() const;
  std::array<Rational, 5> coefficients() const { return {a1, a2, a3, a4, a6}; }
  bool is_integral() const;

  bool operator==(const WeierstrassCurve&) const = default;
};

struct CurveInvariants {
  Rational b2, b4, b6, b8, c4, c6, delta, j;
  bool singular = false;  // delta == 0; j is then left at 0
};

// Throws SingularCurve on delta == 0 unless require_nonsingular is false.
CurveInvariants invariants(const WeierstrassCurve& e, bool require_nonsingular = true);
Rational discriminant(const WeierstrassCurve& e);

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
WeierstrassCurve change_coordinates(const WeierstrassCurve& e, const Rational& u, const Rational& r,
                                    const Rational& s, const Rational& t);

// Integral model obtained by scaling with u^{-1}, u the lcm of denominators.
struct IntegralModel {
  WeierstrassCurve curve;
  Integer scale;  // a_i(model) = scale^i a_i(original)
};
IntegralModel integral_model(const WeierstrassCurve& e);

// Formal-group coordinate w(z) = z^3 (1 + A_1 z + ...), to the given order.
TruncatedSeries formal_expansion(const WeierstrassCurve& e, int order);

// Inverse of formal_expansion; needs A_1..A_6 (a6 first enters at A_6).
WeierstrassCurve series_to_curve(const TruncatedSeries& u);

enum class ReductionKind { good, multiplicative, additive };
std::string_view reduction_kind_name(ReductionKind k);

struct ReductionData {
  long prime = 0;
  ReductionKind kind = ReductionKind::good;
  int conductor_exponent = 0;
  // a_p at good p; +1 split / -1 nonsplit multiplicative; 0 additive.
  int ap_or_flag = 0;
  std::string kodaira;             // "I0", "I5", "II", "I1*", ...
  int discriminant_valuation = 0;  // of the p-minimal model
  WeierstrassCurve minimal_model;  // integral and minimal at p
};

// Tate's algorithm at p. ap_or_flag is filled by point counting at good p
// when p <= ap_bound, otherwise left 0.
ReductionData tate_reduce(const WeierstrassCurve& e, long p, long ap_bound = 10000);

// p + 1 - #E(F_p) on the p-minimal model. PrimeTooLarge past bound.
long ap_count(const WeierstrassCurve& e, long p, long bound = 10000);

struct GlobalReduction {
  IntegralModel model;
  std::vector<ReductionData> bad_primes;  // primes dividing the model discriminant, ascending
  Integer conductor;
  bool semistable = true;

  std::vector<long> multiplicative_primes() const;
};
GlobalReduction global_reduction(const WeierstrassCurve& e, long ap_bound = 10000);

// a(1..n_max) of L(s, E) from local data; level is the conductor when
// with_level, else 0.
CoefficientVector l_coefficients(const WeierstrassCurve& e, int n_max, long ap_bound = 10000,
                                 bool with_level = true);

// Laurent coefficients of j(q) = sum_{n >= -1} c(n) q^n; element k holds c(k-1).
std::vector<Integer> j_expansion(int count);

struct TateParameter {
  long prime = 0;
  Rational j;
  std::vector<Integer> h;  // h[n-1] = h_n in q = sum h_n j^{-n}
  Rational q;              // truncated value at j
  int valuation = 0;       // v_p(q)
};

// Series inversion of j(q). BadReductionRequired if v_p(j) >= 0.
std::vector<Integer> tate_series(int terms);
TateParameter tate_parameter(const Rational& j, int terms, long p);

struct TorusData {
  WeierstrassCurve curve;
  Rational j;
  TateParameter q;
  Integer level;
};

// Fibre product of the two Tate tori over the common place, kept as data.
struct FactorizationRecord {
  long common_prime = 0;
  TorusData first, second;

  const TorusData& proj1() const { return first; }
  const TorusData& proj2() const { return second; }
};

FactorizationRecord factorize(const WeierstrassCurve& e1, const WeierstrassCurve& e2, int terms = 10);

}  // namespace padyn
