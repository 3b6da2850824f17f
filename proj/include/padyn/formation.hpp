#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "padyn/number_theory.hpp"

namespace padyn {

// a(n) / n2 for n = 2..n_star, with n2 = sum_{m=2}^{n_star} a(m) kept unreduced.
struct NormalizedCoefficients {
  int n_star = 1;
  Rational n2;
  std::vector<Rational> values;  // values[k] belongs to n = k + 2
};

// a holds a(2..n_star). ZeroSum when the coefficients sum to zero.
NormalizedCoefficients normalize(const std::vector<Rational>& a);

// chi(n) = exp(i pi theta(n)) with theta(n) = a(n)/n2, stored as exact
// rational angles (multiples of pi). Extended to all integers periodically
// mod p_star: chi(1) = 1, residues outside 2..n_star are filled with 1,
// multiples of p_star map to 0.
struct CharacterTable {
  long p_star = 0;
  int n_star = 1;
  Rational n2;
  std::vector<Rational> angles;  // angles[k] belongs to n = k + 2

  // Angle reduced into (-1, 1].
  Rational reduced_angle(int n) const;
  std::complex<double> value(std::int64_t n) const;
};

// Smallest prime p > n_star for which the periodic extension of chi is not
// identically 1 on (Z/p)^*.
long minimal_prime(int n_star, const std::vector<Rational>& angles);

CharacterTable character_table(const std::vector<Rational>& a);

enum class SignMode {
  magnitude,  // arccos(Re chi) alone, as in the displayed identity
  restored,   // sign taken from Im chi
};

// n2 * arccos(Re chi(n)) / pi, computed on the rational angles.
std::vector<Rational> recovered_coefficients(const CharacterTable& tbl, SignMode mode = SignMode::magnitude);

// (n2/pi) sum_{n=2}^{n*} arccos(Re chi(n)) n^{-s}; DomainError unless s > 2.
double recovery_sum(const CharacterTable& tbl, double s, SignMode mode = SignMode::magnitude);
// Same sum through floating-point acos/cos.
double recovery_sum_numeric(const CharacterTable& tbl, double s, SignMode mode = SignMode::magnitude);

// sum_{n=2}^{n*} a(n) n^{-s}, a given for n = 2..n*.
double truncated_dirichlet(const std::vector<Rational>& a, double s);

// C * sum_{n > n*} n^{1 - sigma} <= C n*^{2 - sigma} / (sigma - 2).
double tail_bound(int n_star, double sigma, double growth_constant);

struct Formation {
  long p_star = 0;
  int n_star = 1;

  long class_count() const { return p_star - 1; }
};

struct ClassCounts {
  std::int64_t norm_count = 0;   // N_H(x)
  std::int64_t prime_count = 0;  // pi_H(x)
};

// H is a unit residue mod p_star.
ClassCounts class_counts(const Formation& f, long h, std::int64_t x);

// max over unit classes H and integers 1 <= x <= x_max of |N_H(x) - x/p*|.
double axiom_a_max_error(long p_star, std::int64_t x_max);

// pi_H(x) phi(p*) ln x / x for H = 1..p*-1.
std::vector<double> pnt_ratios(long p_star, std::int64_t x);

}  // namespace padyn
