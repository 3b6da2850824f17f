#include <algorithm>
#include <climits>
#include <optional>

#include "padyn/elliptic.hpp"
#include "padyn/error.hpp"

namespace padyn {

std::string_view reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::good: return "good";
    case ReductionKind::multiplicative: return "multiplicative";
    case ReductionKind::additive: return "additive";
  }
  return "unknown";
}

namespace {

struct IntCurve {
  Integer a1, a2, a3, a4, a6;
};

struct BInv {
  Integer b2, b4, b6, b8, c4, c6, delta;
};

BInv binv(const IntCurve& e) {
  BInv b;
  b.b2 = e.a1 * e.a1 + 4 * e.a2;
  b.b4 = 2 * e.a4 + e.a1 * e.a3;
  b.b6 = e.a3 * e.a3 + 4 * e.a6;
  b.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  b.c4 = b.b2 * b.b2 - 24 * b.b4;
  b.c6 = -b.b2 * b.b2 * b.b2 + 36 * b.b2 * b.b4 - 216 * b.b6;
  b.delta = -b.b2 * b.b2 * b.b8 - 8 * b.b4 * b.b4 * b.b4 - 27 * b.b6 * b.b6 + 9 * b.b2 * b.b4 * b.b6;
  return b;
}

IntCurve shift(const IntCurve& e, const Integer& r, const Integer& s, const Integer& t) {
  IntCurve o;
  o.a1 = e.a1 + 2 * s;
  o.a2 = e.a2 - s * e.a1 + 3 * r - s * s;
  o.a3 = e.a3 + r * e.a1 + 2 * t;
  o.a4 = e.a4 - s * e.a3 + 2 * r * e.a2 - (t + r * s) * e.a1 + 3 * r * r - 2 * s * t;
  o.a6 = e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1;
  return o;
}

Integer md(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer exact(const Integer& x, const Integer& d) {
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    fail(ErrorCode::DomainError, "Tate's algorithm lost a divisibility invariant");
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

IntCurve scale_down(const IntCurve& e, const Integer& p) {
  Integer p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p3 * p3;
  return {exact(e.a1, p), exact(e.a2, p2), exact(e.a3, p3), exact(e.a4, p4), exact(e.a6, p6)};
}

IntCurve to_int(const WeierstrassCurve& e) {
  return {e.a1.get_num(), e.a2.get_num(), e.a3.get_num(), e.a4.get_num(), e.a6.get_num()};
}

WeierstrassCurve to_curve(const IntCurve& e) {
  return {Rational(e.a1), Rational(e.a2), Rational(e.a3), Rational(e.a4), Rational(e.a6)};
}

// Coordinates of the singular point of the reduction mod p (p | delta).
std::pair<Integer, Integer> singular_point(const IntCurve& e, const BInv& b, const Integer& p) {
  if (p <= 3) {
    long q = p.get_si();
    for (long x = 0; x < q; ++x) {
      for (long y = 0; y < q; ++y) {
        Integer X(x), Y(y);
        Integer f = Y * Y + e.a1 * X * Y + e.a3 * Y - X * X * X - e.a2 * X * X - e.a4 * X - e.a6;
        Integer fx = e.a1 * Y - 3 * X * X - 2 * e.a2 * X - e.a4;
        Integer fy = 2 * Y + e.a1 * X + e.a3;
        if (md(f, p) == 0 && md(fx, p) == 0 && md(fy, p) == 0) return {X, Y};
      }
    }
    fail(ErrorCode::DomainError, "no singular point found modulo " + p.get_str());
  }
  Integer x0;
  if (md(b.c4, p) == 0) {
    x0 = md(-b.b2 * inverse_mod(Integer(12), p), p);
  } else {
    x0 = md(-(b.c6 + b.b2 * b.c4) * inverse_mod(md(12 * b.c4, p), p), p);
  }
  Integer y0 = md(-(e.a1 * x0 + e.a3) * inverse_mod(Integer(2), p), p);
  return {x0, y0};
}

// Does a X^2 + b X + c have distinct roots over the algebraic closure of F_p?
bool quadratic_distinct(const Integer& a, const Integer& b, const Integer& c, const Integer& p) {
  if (p == 2) return md(b, 2) != 0;
  return md(b * b - 4 * a * c, p) != 0;
}

enum class CubicRoots { distinct, double_root, triple_root };

// T^3 + b T^2 + c T + d mod p; for a repeated root, also returns it.
std::pair<CubicRoots, Integer> classify_cubic(const Integer& b, const Integer& c, const Integer& d, const Integer& p) {
  if (p <= 3) {
    long q = p.get_si();
    for (long r = 0; r < q; ++r) {
      // Synthetic division counts the multiplicity of r.
      std::vector<Integer> coeffs = {1, b, c, d};
      int mult = 0;
      while (coeffs.size() > 1) {
        std::vector<Integer> quot;
        Integer acc = 0;
        for (const auto& co : coeffs) {
          acc = acc * r + co;
          quot.push_back(acc);
        }
        if (md(quot.back(), p) != 0) break;
        quot.pop_back();
        coeffs = quot;
        ++mult;
      }
      if (mult == 3) return {CubicRoots::triple_root, Integer(r)};
      if (mult == 2) return {CubicRoots::double_root, Integer(r)};
    }
    return {CubicRoots::distinct, 0};
  }
  Integer disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
  if (md(disc, p) != 0) return {CubicRoots::distinct, 0};
  Integer e = md(b * b - 3 * c, p);
  if (e == 0) return {CubicRoots::triple_root, md(-b * inverse_mod(Integer(3), p), p)};
  return {CubicRoots::double_root, md((9 * d - b * c) * inverse_mod(md(2 * e, p), p), p)};
}

long count_ap(const IntCurve& e, long p) {
  const std::int64_t a1 = mod_floor(e.a1, p), a2 = mod_floor(e.a2, p), a3 = mod_floor(e.a3, p),
                     a4 = mod_floor(e.a4, p), a6 = mod_floor(e.a6, p);
  std::int64_t points = 1;  // point at infinity
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y)
        if ((y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6) % 2 == 0) ++points;
  } else {
    for (std::int64_t x = 0; x < p; ++x) {
      // y^2 + (a1 x + a3) y - f(x) = 0 has 1 + (D | p) roots, D = (a1 x + a3)^2 + 4 f(x).
      __int128 lin = (a1 * x + a3) % p;
      __int128 f = ((((x + a2) % p) * x % p + a4) % p * x % p + a6) % p;
      __int128 disc = (lin * lin + 4 * f) % p;
      points += 1 + legendre(static_cast<std::int64_t>(disc), p);
    }
  }
  return p + 1 - points;
}

long checked_prime(const Integer& p) {
  if (!p.fits_slong_p()) fail(ErrorCode::PrimeTooLarge, "prime " + p.get_str() + " exceeds machine range");
  return p.get_si();
}

}  // namespace

ReductionData tate_reduce(const WeierstrassCurve& curve, long prime, long ap_bound) {
  if (!is_prime(Integer(prime))) fail(ErrorCode::DomainError, std::to_string(prime) + " is not prime");
  invariants(curve);
  IntCurve c = to_int(integral_model(curve).curve);
  const Integer p(prime), p2 = p * p;
  const Integer half = (p + 1) / 2;
  ReductionData rd;
  rd.prime = prime;

  auto finish = [&](ReductionKind kind, std::string kodaira, int f, int n) {
    rd.kind = kind;
    rd.kodaira = std::move(kodaira);
    rd.conductor_exponent = f;
    rd.discriminant_valuation = n;
    rd.minimal_model = to_curve(c);
    return rd;
  };

  for (;;) {
    BInv b = binv(c);
    const int n = valuation(b.delta, p);
    if (n == 0) {
      rd.ap_or_flag = prime <= ap_bound ? static_cast<int>(count_ap(c, prime)) : 0;
      return finish(ReductionKind::good, "I0", 0, 0);
    }

    auto [xs, ys] = singular_point(c, b, p);
    c = shift(c, xs, 0, ys);
    b = binv(c);

    if (valuation(b.c4, p) == 0) {
      bool split;
      if (p == 2) {
        split = md(c.a2, 2) == 0 || md(1 + c.a1 - c.a2, 2) == 0;
      } else {
        split = legendre(mod_floor(b.b2, prime), prime) == 1;
      }
      rd.ap_or_flag = split ? 1 : -1;
      return finish(ReductionKind::multiplicative, "I" + std::to_string(n), 1, n);
    }
    rd.ap_or_flag = 0;
    if (valuation(c.a6, p) < 2) return finish(ReductionKind::additive, "II", n, n);
    if (valuation(b.b8, p) < 3) return finish(ReductionKind::additive, "III", n - 1, n);
    if (valuation(b.b6, p) < 3) return finish(ReductionKind::additive, "IV", n - 2, n);

    // Move to p | a1, a2; p^2 | a3, a4; p^3 | a6.
    Integer s, t;
    if (p == 2) {
      s = md(c.a2, 2);
      t = 2 * md(exact(c.a6, 4), 2);
    } else {
      s = md(-c.a1 * half, p);
      t = md(-c.a3 * half, p2);
    }
    c = shift(c, 0, s, t);
    const Integer p3 = p2 * p;
    if (md(c.a1, p) != 0 || md(c.a2, p) != 0 || md(c.a3, p2) != 0 || md(c.a4, p2) != 0 || md(c.a6, p3) != 0)
      fail(ErrorCode::DomainError, "Tate's algorithm lost a divisibility invariant");

    auto [roots, root] = classify_cubic(exact(c.a2, p), exact(c.a4, p2), exact(c.a6, p3), p);
    if (roots == CubicRoots::distinct) return finish(ReductionKind::additive, "I0*", n - 4, n);

    if (roots == CubicRoots::double_root) {
      c = shift(c, p * root, 0, 0);
      int m = 1;
      Integer mx = p2, my = p2;
      for (;;) {
        Integer xa2 = exact(c.a2, p), xa3 = exact(c.a3, my), xa4 = exact(c.a4, p * mx), xa6 = exact(c.a6, mx * my);
        if (quadratic_distinct(Integer(1), xa3, -xa6, p)) break;
        Integer t0 = p == 2 ? md(xa6, 2) : md(-xa3 * half, p);
        c = shift(c, 0, 0, my * t0);
        my *= p;
        ++m;
        xa2 = exact(c.a2, p);
        xa4 = exact(c.a4, p * mx);
        xa6 = exact(c.a6, mx * my);
        if (quadratic_distinct(xa2, xa4, xa6, p)) break;
        Integer r0 = p == 2 ? md(xa6 * xa2, 2) : md(-xa4 * inverse_mod(md(2 * xa2, p), p), p);
        c = shift(c, mx * r0, 0, 0);
        mx *= p;
        ++m;
      }
      return finish(ReductionKind::additive, "I" + std::to_string(m) + "*", n - 4 - m, n);
    }

    // Triple root.
    c = shift(c, p * root, 0, 0);
    const Integer p4 = p2 * p2;
    Integer x3 = exact(c.a3, p2), x6 = exact(c.a6, p4);
    if (quadratic_distinct(Integer(1), x3, -x6, p)) return finish(ReductionKind::additive, "IV*", n - 6, n);
    Integer t0 = p == 2 ? md(x6, 2) : md(-x3 * half, p);
    c = shift(c, 0, 0, p2 * t0);
    if (valuation(c.a4, p) < 4) return finish(ReductionKind::additive, "III*", n - 7, n);
    if (valuation(c.a6, p) < 6) return finish(ReductionKind::additive, "II*", n - 8, n);
    c = scale_down(c, p);
  }
}

long ap_count(const WeierstrassCurve& e, long p, long bound) {
  if (!is_prime(Integer(p))) fail(ErrorCode::DomainError, std::to_string(p) + " is not prime");
  if (p > bound)
    fail(ErrorCode::PrimeTooLarge, "point counting limited to p <= " + std::to_string(bound));
  invariants(e);
  WeierstrassCurve model = integral_model(e).curve;
  if (valuation(discriminant(model).get_num(), Integer(p)) > 0) model = tate_reduce(model, p, 0).minimal_model;
  return count_ap(to_int(model), p);
}

std::vector<long> GlobalReduction::multiplicative_primes() const {
  std::vector<long> out;
  for (const auto& rd : bad_primes)
    if (rd.kind == ReductionKind::multiplicative) out.push_back(rd.prime);
  return out;
}

GlobalReduction global_reduction(const WeierstrassCurve& e, long ap_bound) {
  invariants(e);
  GlobalReduction g{integral_model(e), {}, 1, true};
  Rational delta = discriminant(g.model.curve);
  for (const auto& [prime, exponent] : factorize_integer(delta.get_num())) {
    ReductionData rd = tate_reduce(g.model.curve, checked_prime(prime), ap_bound);
    if (rd.kind == ReductionKind::additive) g.semistable = false;
    g.conductor *= ipow(prime, static_cast<unsigned long>(rd.conductor_exponent));
    g.bad_primes.push_back(std::move(rd));
  }
  return g;
}

}  // namespace padyn
