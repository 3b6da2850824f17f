#include "padyn/number_theory.hpp"

#include <algorithm>
#include <cctype>

#include "padyn/error.hpp"

namespace padyn {

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  Integer m = abs(n);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Integer& p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer next_prime(const Integer& n) {
  Integer out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, r = 1, q = 1, x, ys;
  const unsigned long m = 128;
  auto f = [&](const Integer& v) {
    Integer w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer d = abs(x - y);
        q = (q * d) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = n;
  for (unsigned long seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::map<Integer, int> factorize_integer(const Integer& n) {
  if (n == 0) fail(ErrorCode::ZeroArgument, "cannot factor zero");
  std::map<Integer, int> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[Integer(p)];
    }
  }
  split(m, out);
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::int64_t mod_floor(const Integer& a, std::int64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1 % mod, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

int legendre(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return 0;
  return out;
}

Integer rational_mod(const Rational& q, const Integer& m) {
  Integer inv = inverse_mod(q.get_den(), m);
  if (inv == 0 && m != 1)
    fail(ErrorCode::NonIntegralCoefficient, "denominator not invertible modulo " + m.get_str());
  Integer r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && v.front() == '-') v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    fail(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace padyn
