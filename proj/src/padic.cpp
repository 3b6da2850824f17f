#include "padyn/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "padyn/error.hpp"

namespace padyn {

namespace {

void check_prime(long p, int precision) {
  if (p < 2 || !is_prime(Integer(p))) fail(ErrorCode::DomainError, "p-adic prime must be prime, got " + std::to_string(p));
  if (precision < 1) fail(ErrorCode::DomainError, "p-adic precision must be positive");
}

void check_compatible(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime())
    fail(ErrorCode::DomainError, "p-adic operands over different primes");
}

}  // namespace

PadicNumber::PadicNumber(long prime, int precision, int valuation, Integer unit, bool zero)
    : prime_(prime), precision_(precision), valuation_(valuation), unit_(std::move(unit)), zero_(zero) {}

Integer PadicNumber::modulus() const { return ipow(Integer(prime_), static_cast<unsigned long>(precision_)); }

PadicNumber PadicNumber::zero(long prime, int precision) {
  check_prime(prime, precision);
  return PadicNumber(prime, precision, 0, 0, true);
}

PadicNumber PadicNumber::from_integer(const Integer& n, long prime, int precision) {
  return from_rational(Rational(n), prime, precision);
}

PadicNumber PadicNumber::from_rational(const Rational& q, long prime, int precision) {
  check_prime(prime, precision);
  if (q == 0) return PadicNumber(prime, precision, 0, 0, true);
  const Integer p(prime);
  int v = padyn::valuation(q, p);
  Integer num = q.get_num(), den = q.get_den();
  if (v > 0) num /= ipow(p, v);
  if (v < 0) den /= ipow(p, -v);
  Integer mod = ipow(p, precision);
  Integer u = rational_mod(Rational(num, den), mod);
  return PadicNumber(prime, precision, v, u, false);
}

PadicNumber PadicNumber::from_digits(long prime, int valuation, const std::vector<int>& digits) {
  if (digits.empty()) fail(ErrorCode::DomainError, "digit sequence must be nonempty");
  check_prime(prime, static_cast<int>(digits.size()));
  if (digits.front() == 0) fail(ErrorCode::DomainError, "leading unit digit must be nonzero");
  Integer u = 0, scale = 1;
  for (int d : digits) {
    if (d < 0 || d >= prime) fail(ErrorCode::DomainError, "digit out of range");
    u += scale * d;
    scale *= prime;
  }
  return PadicNumber(prime, static_cast<int>(digits.size()), valuation, u, false);
}

std::vector<int> PadicNumber::digits() const {
  std::vector<int> out;
  if (zero_) return out;
  Integer u = unit_;
  for (int k = 0; k < precision_; ++k) {
    out.push_back(static_cast<int>(mod_floor(u, prime_)));
    u /= prime_;
  }
  return out;
}

int PadicNumber::digit_at(int k) const {
  if (zero_ || k < valuation_) return 0;
  if (k >= valuation_ + precision_)
    fail(ErrorCode::PrecisionExhausted, "digit " + std::to_string(k) + " beyond retained precision");
  Integer u = unit_ / ipow(Integer(prime_), static_cast<unsigned long>(k - valuation_));
  return static_cast<int>(mod_floor(u, prime_));
}

double PadicNumber::norm() const {
  if (zero_) return 0.0;
  return std::pow(static_cast<double>(prime_), -valuation_);
}

PadicNumber PadicNumber::unit_part() const {
  if (zero_) fail(ErrorCode::ZeroArgument, "zero has no unit part");
  return PadicNumber(prime_, precision_, 0, unit_, false);
}

PadicNumber PadicNumber::with_precision(int precision) const {
  if (precision < 1) fail(ErrorCode::DomainError, "precision must be positive");
  if (zero_) return PadicNumber(prime_, precision, 0, 0, true);
  int keep = std::min(precision, precision_);
  Integer mod = ipow(Integer(prime_), static_cast<unsigned long>(keep));
  Integer u;
  mpz_fdiv_r(u.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(prime_, keep, valuation_, u, false);
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  Integer mod = modulus();
  Integer u = (mod - unit_) % mod;
  return PadicNumber(prime_, precision_, valuation_, u, false);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  check_compatible(x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Integer p(x.prime());
  const int vmin = std::min(x.valuation_, y.valuation_);
  // Absolute precision of the sum is the weaker of the two operands.
  const int abs_prec = std::min(x.absolute_precision(), y.absolute_precision());
  const int rel = abs_prec - vmin;
  Integer mod = ipow(p, static_cast<unsigned long>(rel));
  Integer s = x.unit_ * ipow(p, x.valuation_ - vmin) + y.unit_ * ipow(p, y.valuation_ - vmin);
  mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  if (s == 0)
    fail(ErrorCode::PrecisionExhausted, "cancellation consumed all " + std::to_string(rel) + " digits");
  int gain = padyn::valuation(s, p);
  s /= ipow(p, gain);
  return PadicNumber(x.prime(), rel - gain, vmin + gain, s, false);
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  check_compatible(x, y);
  const int prec = std::min(x.precision(), y.precision());
  if (x.is_zero() || y.is_zero()) return PadicNumber(x.prime(), prec, 0, 0, true);
  Integer mod = ipow(Integer(x.prime()), static_cast<unsigned long>(prec));
  Integer u = x.unit_ * y.unit_;
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber(x.prime(), prec, x.valuation_ + y.valuation_, u, false);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_ || valuation_ != 0)
    fail(ErrorCode::NonUnitInverse, "only units of Z_p are inverted");
  Integer inv = inverse_mod(unit_, modulus());
  return PadicNumber(prime_, precision_, 0, inv, false);
}

bool PadicNumber::operator==(const PadicNumber& other) const {
  if (prime_ != other.prime_) return false;
  if (zero_ || other.zero_) return zero_ == other.zero_;
  if (valuation_ != other.valuation_) return false;
  int keep = std::min(precision_, other.precision_);
  Integer mod = ipow(Integer(prime_), static_cast<unsigned long>(keep));
  Integer a, b;
  mpz_fdiv_r(a.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  mpz_fdiv_r(b.get_mpz_t(), other.unit_.get_mpz_t(), mod.get_mpz_t());
  return a == b;
}

std::string PadicNumber::to_string() const {
  std::ostringstream out;
  if (zero_) {
    out << "0";
    return out.str();
  }
  out << prime_ << "^" << valuation_ << " * (";
  auto ds = digits();
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (k == 0) out << ds[k];
    else if (k == 1) out << " + " << ds[k] << "*" << prime_;
    else out << " + " << ds[k] << "*" << prime_ << "^" << k;
  }
  out << " + O(" << prime_ << "^" << precision_ << "))";
  return out.str();
}

PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::invert: return x.inverse();
  }
  fail(ErrorCode::DomainError, "unknown arithmetic operation");
}

int difference_valuation(const PadicNumber& x, const PadicNumber& y) {
  check_compatible(x, y);
  try {
    return (x - y).valuation();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrecisionExhausted) throw;
    return std::min(x.absolute_precision(), y.absolute_precision());
  }
}

bool same_side_of_zero(const PadicNumber& x, const PadicNumber& y) {
  if (x.is_zero() || y.is_zero()) fail(ErrorCode::ZeroArgument, "sides of zero are defined for nonzero points");
  return difference_valuation(x, y) > x.valuation();
}

bool PadicBall::contains(const PadicNumber& x) const {
  int v = difference_valuation(x, center);
  return closed ? v >= log_radius : v >= log_radius + 1;
}

}  // namespace padyn
