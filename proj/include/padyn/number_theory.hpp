#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace padyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Sentinel valuation for zero.
inline constexpr int kInfiniteValuation = 1 << 30;

int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);  // smallest prime > n

// Prime factorization of |n| (n != 0), ascending primes.
std::map<Integer, int> factorize_integer(const Integer& n);

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

std::int64_t mod_floor(const Integer& a, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
// Legendre symbol (a | p) for odd prime p.
int legendre(std::int64_t a, std::int64_t p);

// a^{-1} mod m, or nullopt-like 0 when not invertible (callers check gcd).
Integer inverse_mod(const Integer& a, const Integer& m);

// Reduction of a p-integral rational modulo m = p^k.
Integer rational_mod(const Rational& q, const Integer& m);

bool is_integral(const Rational& q);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);

}  // namespace padyn
