#pragma once

#include <string>
#include <vector>

#include "padyn/number_theory.hpp"

namespace padyn {

// Element of Q_p carried to a fixed number of significant base-p digits.
//
// A nonzero value is p^valuation * unit, where unit is known modulo
// p^precision and is not divisible by p. Zero is exact and has no finite
// valuation. Values are immutable.
class PadicNumber {
public:
  static PadicNumber zero(long prime, int precision);
  static PadicNumber from_integer(const Integer& n, long prime, int precision);
  static PadicNumber from_rational(const Rational& q, long prime, int precision);
  // Little-endian unit digits; digits[0] must be nonzero.
  static PadicNumber from_digits(long prime, int valuation, const std::vector<int>& digits);

  long prime() const { return prime_; }
  int precision() const { return precision_; }
  bool is_zero() const { return zero_; }
  // kInfiniteValuation for zero.
  int valuation() const { return zero_ ? kInfiniteValuation : valuation_; }
  // Digits below this index are known; zero reports kInfiniteValuation.
  int absolute_precision() const { return zero_ ? kInfiniteValuation : valuation_ + precision_; }
  const Integer& unit() const { return unit_; }
  std::vector<int> digits() const;
  // Digit k of the base-p expansion of an element of Z_p (k < absolute precision).
  int digit_at(int k) const;
  // |x|_p as a double (0 for zero).
  double norm() const;

  // Unit part p^{-v} x as an element of Z_p^x.
  PadicNumber unit_part() const;
  // Same value retained to fewer digits.
  PadicNumber with_precision(int precision) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  // Inverse of a unit; NonUnitInverse otherwise.
  PadicNumber inverse() const;

  // Agreement in every digit both operands carry.
  bool operator==(const PadicNumber& other) const;

  // "p^v * (d0 + d1*p + ... + O(p^N))"
  std::string to_string() const;

private:
  PadicNumber(long prime, int precision, int valuation, Integer unit, bool zero);
  Integer modulus() const;

  long prime_ = 2;
  int precision_ = 1;
  int valuation_ = 0;
  Integer unit_ = 0;
  bool zero_ = true;
};

enum class ArithOp { add, sub, mul, invert };

// Single entry point used by the CLI and bindings; invert ignores y.
PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op);

// v(x - y), capped at the digits both operands actually carry.
int difference_valuation(const PadicNumber& x, const PadicNumber& y);

// True iff y lies in the open disc B^-(x, |x|), i.e. 0 is outside the
// smallest disc containing x and y.
bool same_side_of_zero(const PadicNumber& x, const PadicNumber& y);

// Disc of radius p^{-log_radius} around center.
struct PadicBall {
  PadicNumber center;
  int log_radius = 0;
  bool closed = true;

  bool contains(const PadicNumber& x) const;
};

}  // namespace padyn
