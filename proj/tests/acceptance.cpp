// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "padyn/elliptic.hpp"
#include "padyn/error.hpp"
#include "padyn/field.hpp"
#include "padyn/formation.hpp"
#include "padyn/padic.hpp"
#include "padyn/planar.hpp"
#include "padyn/surface.hpp"
#include "padyn/tfilter.hpp"

using namespace padyn;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  long checks = 0;
  void need(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

WeierstrassCurve C(long a1, long a2, long a3, long a4, long a6) {
  return {Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};
}

std::vector<long> ints(const WeierstrassCurve& e) {
  std::vector<long> out;
  for (const auto& a : e.coefficients()) out.push_back(a.get_num().get_si());
  return out;
}

WeierstrassCurve random_curve(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  for (;;) {
    auto e = C(c(rng), c(rng), c(rng), c(rng), c(rng));
    if (discriminant(e) != 0) return e;
  }
}

// 1. formal group
Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    auto e = random_curve(rng, 20);
    o.need(series_to_curve(formal_expansion(e, 8)) == e, "round trip failed on " + e.to_string());
  }
  return o;
}

// 2. point counts and Hasse
Outcome point_counts() {
  Outcome o;
  o.need(oracle::ap_brute({0, 0, 1, -1, 0}, 2) == -2, "brute a_2");
  o.need(oracle::ap_brute({0, -1, 1, 0, 0}, 3) == -1, "brute a_3");
  o.need(l_coefficients(C(0, 0, 1, -1, 0), 3).coeffs[1] == -2, "l_coefficients a(2) of y^2+y=x^3-x");
  o.need(l_coefficients(C(0, -1, 1, 0, 0), 3).coeffs[2] == -1, "l_coefficients a(3) of y^2+y=x^3-x^2");

  std::vector<WeierstrassCurve> panel{C(0, -1, 1, -10, -20), C(0, -1, 1, 0, 0), C(1, 0, 1, 4, -6),
                                      C(1, 1, 1, -10, -10),  C(1, -1, 1, -1, -14), C(0, 1, 1, -9, -15),
                                      C(0, 1, 0, 4, 4),      C(0, -1, 0, -4, 4),  C(0, 0, 1, 0, -7),
                                      C(0, 0, 0, 4, 0),      C(0, 0, 0, 0, 1),    C(0, 0, 1, -1, 0),
                                      C(0, 1, 1, 0, 0),      C(0, 0, 0, 1, 0),    C(0, 1, 1, -2, 0),
                                      C(0, 0, 1, -7, 6)};
  std::mt19937_64 rng(202);
  while (panel.size() < 20) panel.push_back(random_curve(rng, 12));
  for (const auto& e : panel) {
    auto g = global_reduction(e);
    Integer delta = discriminant(e).get_num();
    for (long p : primes_up_to(500)) {
      if (g.conductor % p == 0) continue;
      // a non-minimal model needs the minimal one for counting
      auto model = delta % p == 0 ? tate_reduce(e, p).minimal_model : e;
      long ap = ap_count(model, p);
      o.need(ap == oracle::ap_brute(ints(model), p), "a_p mismatch at p=" + std::to_string(p) + " on " + e.to_string());
      o.need(static_cast<double>(ap * ap) <= 4.0 * p, "Hasse bound fails at p=" + std::to_string(p));
    }
  }
  return o;
}

// 3. invariants
Outcome invariant_identities() {
  Outcome o;
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<long> c(-50, 50), d(1, 6);
  for (int k = 0; k < 1000; ++k) {
    WeierstrassCurve e{Rational(c(rng), d(rng)), Rational(c(rng), d(rng)), Rational(c(rng)), Rational(c(rng), d(rng)),
                       Rational(c(rng))};
    for (auto* a : {&e.a1, &e.a2, &e.a4}) a->canonicalize();
    auto inv = invariants(e, false);
    o.need(1728 * inv.delta == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6, "1728 delta identity");
    o.need(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4, "b8 identity");
  }
  auto e = C(0, -1, 1, 0, 0);
  auto inv = invariants(e);
  o.need(inv.delta == -11, "delta of 11a3");
  o.need(inv.j == Rational(-4096, 11), "j of 11a3");
  auto r = tate_reduce(e, 11);
  o.need(r.kind == ReductionKind::multiplicative && r.conductor_exponent == 1, "reduction of 11a3 at 11");
  return o;
}

// 4. Tate parameter. Series in J = 1/j held as vectors of rationals.
std::vector<Rational> mulq(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t k = 0; k < b.size() && i + k < n; ++k) c[i + k] += a[i] * b[k];
  return c;
}

Outcome tate_parameter_suite() {
  Outcome o;
  const int terms = 10;
  auto h = tate_series(terms);
  o.need(h[0] == 1, "h_1 = 1");
  // 1/j(q) = q / (1 + 744 q + 196884 q^2 + ...) computed from the Eisenstein oracle
  const std::size_t n = terms + 1;
  auto c = oracle::j_via_eisenstein(static_cast<int>(n));  // c(-1), c(0), ...
  std::vector<Rational> g(n, 0);  // g = 1 / sum c(k-1) q^k
  g[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += Rational(c[k]) * g[m - k];
    g[m] = -acc;
  }
  std::vector<Rational> q(n, 0);  // q(J) = sum h_k J^k
  for (int k = 1; k <= terms && k < static_cast<int>(n); ++k) q[k] = Rational(h[k - 1]);
  // inverse j as a series in J: sum g_m q^{m+1}
  std::vector<Rational> result(n, 0), power = q;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) result[k] += g[m] * power[k];
    power = mulq(power, q, n);
  }
  for (std::size_t k = 0; k < n; ++k)
    o.need(result[k] == (k == 1 ? 1 : 0), "composition leaves a J^" + std::to_string(k) + " term");

  const std::vector<std::pair<Rational, long>> js{
      {Rational(-4096, 11), 11}, {Rational(1, 5), 5},        {Rational(7, 9), 3},     {Rational(1, 128), 2},
      {Rational(-3, 49), 7},     {Rational(12, 625), 5},     {Rational(-1, 8), 2},    {Rational(100, 13 * 13 * 13), 13},
      {Rational(5, 27), 3},      {Rational(-884736, 19), 19}};
  for (const auto& [j, p] : js) {
    auto tp = tate_parameter(j, terms, p);
    int vj = valuation(j, Integer(p));
    o.need(tp.valuation == -vj && valuation(tp.q, Integer(p)) == -vj, "v(q) != -v(j) for j=" + j.get_str());
  }
  return o;
}

// 5. formation
Outcome formation_suite() {
  Outcome o;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<long> coef(0, 60);
  std::set<long> p_stars;
  for (int n_star = 2; n_star <= 50; ++n_star) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Rational> a;
      for (int m = 2; m <= n_star; ++m) a.emplace_back(rep == 0 && m % 3 == 0 ? 0 : coef(rng));
      if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) a.back() = 1;
      auto tbl = character_table(a);
      p_stars.insert(tbl.p_star);
      o.need(recovered_coefficients(tbl) == a, "recovery not exact at n*=" + std::to_string(n_star));
    }
  }
  // independent class counts
  const std::int64_t xa = 100000, xp = 1000000;
  std::vector<bool> composite(xp + 1, false);
  for (std::int64_t i = 2; i * i <= xp; ++i)
    if (!composite[i])
      for (std::int64_t k = i * i; k <= xp; k += i) composite[k] = true;
  for (long ps : p_stars) {
    std::vector<std::int64_t> cnt(ps, 0);
    double worst = 0.0;
    for (std::int64_t x = 1; x <= xa; ++x) {
      if (x % ps) ++cnt[x % ps];
      for (long h = 1; h < ps; ++h) worst = std::max(worst, std::abs(cnt[h] - static_cast<double>(x) / ps));
    }
    double lib = axiom_a_max_error(ps, xa);
    o.need(std::abs(lib - worst) < 1e-9, "Axiom A error disagrees with enumeration for p*=" + std::to_string(ps));
    o.need(worst <= 1.0, "Axiom A error above 1 for p*=" + std::to_string(ps));

    std::vector<std::int64_t> pc(ps, 0);
    for (std::int64_t k = 2; k <= xp; ++k)
      if (!composite[k]) ++pc[k % ps];
    auto ratios = pnt_ratios(ps, xp);
    for (long h = 1; h < ps; ++h) {
      double r = pc[h] * (ps - 1) * std::log(static_cast<double>(xp)) / xp;
      o.need(std::abs(ratios[h - 1] - r) < 1e-12, "PNT ratio disagrees with sieve");
      o.need(r >= 0.7 && r <= 1.4, "PNT ratio " + std::to_string(r) + " outside [0.7, 1.4]");
    }
  }
  return o;
}

// 6. geodesic
double oracle_distance(const CoefficientVector& f, const CoefficientVector& g) {
  double sum = 0.0;
  for (int n = 1; n <= f.n_max(); ++n) {
    double d = Rational(f.a(n) - g.a(n)).get_d();
    sum += d * d / (static_cast<double>(n) * n);
  }
  return std::sqrt(sum);
}

Outcome geodesic_suite() {
  Outcome o;
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<long> coef(-9, 9);
  long compared = 0;
  for (int points = 2; points <= 12; ++points) {
    for (unsigned mask = 0; mask < (1u << points); ++mask) {
      if (mask & 1u || mask >> (points - 1) & 1u) continue;
      std::vector<FiberRecord> recs;
      for (int i = 0; i < points; ++i) {
        FiberRecord r;
        r.t = Rational(i, points - 1);
        r.status = mask >> i & 1u ? FiberStatus::gap : FiberStatus::appropriate;
        r.reason = mask >> i & 1u ? GapReason::singular : GapReason::none;
        if (r.status == FiberStatus::appropriate) {
          CoefficientVector v;
          v.coeffs.emplace_back(1);
          for (int n = 2; n <= 6; ++n) v.coeffs.emplace_back(coef(rng));
          r.coeff_vector = v;
        }
        recs.push_back(r);
      }
      const auto& f1 = *recs.front().coeff_vector;
      const auto& f2 = *recs.back().coeff_vector;
      for (int window : {1, 2, 3, points - 1}) {
        for (auto obj : {GeodesicObjective::max_variation, GeodesicObjective::min_variation}) {
          oracle::PathOracle po;
          for (const auto& r : recs) po.allowed.push_back(r.status == FiberStatus::appropriate);
          po.window = window;
          po.maximize = obj == GeodesicObjective::max_variation;
          po.score = [&](int a, int b) {
            const auto& x = *recs[a].coeff_vector;
            const auto& y = *recs[b].coeff_vector;
            return std::abs(oracle_distance(y, f1) - oracle_distance(x, f1)) +
                   std::abs(oracle_distance(y, f2) - oracle_distance(x, f2));
          };
          auto best = po.best_path();
          GeodesicConfig cfg{MetricConfig{6, 2.0}, window, obj};
          if (best.empty()) {
            bool threw = false;
            try {
              select_geodesic(recs, cfg);
            } catch (const Error&) {
              threw = true;
            }
            o.need(threw, "greedy found a path the oracle says does not exist");
          } else {
            auto got = select_geodesic(recs, cfg);
            o.need(std::vector<int>(got.steps.begin(), got.steps.end()) == best,
                   "greedy differs from exhaustive at " + std::to_string(points) + " points");
          }
          ++compared;
        }
      }
    }
  }
  FiberFamily fam{C(0, 0, 0, 0, 1), C(0, 0, 0, 0, -1), FiberFamily::uniform_grid(10), 5};
  auto recs = scan(fam, 10);
  for (const auto& r : recs)
    o.need((r.reason == GapReason::singular) == (r.t == Rational(1, 2)), "singular flag at t=" + r.t.get_str());
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(compared) + " configurations";
  return o;
}

// 7. p-adic laws against exact rationals
Outcome padic_laws() {
  Outcome o;
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 2000);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  while (o.checks < 10000) {
    long p = primes[rng() % 6];
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0 || a + b == 0 || a == b) continue;
    auto x = PadicNumber::from_rational(a, p, 16), y = PadicNumber::from_rational(b, p, 16);
    auto vr = [p](const Rational& q) { return valuation(q, Integer(p)); };
    // ultrametric
    int vs = (x + y).valuation();
    o.need(vs >= std::min(x.valuation(), y.valuation()), "ultrametric inequality");
    if (x.valuation() != y.valuation()) o.need(vs == std::min(x.valuation(), y.valuation()), "strict ultrametric");
    o.need(vs == vr(a + b), "sum valuation vs rationals");
    // multiplicativity
    o.need((x * y).valuation() == vr(a) + vr(b), "multiplicativity");
    o.need(x * y == PadicNumber::from_rational(a * b, p, 16), "product digits");
    // sides of zero: same side iff v(b/a - 1) > 0
    bool same = vr(Rational(b / a) - 1) > 0;
    o.need(same_side_of_zero(x, y) == same, "side of zero for " + a.get_str() + ", " + b.get_str());
    // a shifted copy is always on the same side
    auto shifted = PadicNumber::from_rational(a * (1 + Rational(p * (1 + static_cast<long>(rng() % 50)))), p, 16);
    o.need(same_side_of_zero(x, shifted), "shifted copy changes side");
  }
  o.note = std::to_string(o.checks) + " checks";
  return o;
}

// 8. embedding
int int_valuation(Integer n, long p) {
  if (n == 0) return 1000;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Outcome embedding_suite() {
  Outcome o;
  for (long p : {2L, 3L, 5L}) {
    EmbedConfig cfg{p, 8, 0.0};
    const long total = static_cast<long>(std::pow(p, 8));
    std::set<std::pair<double, double>> seen;
    for (long n = 0; n < total; ++n) {
      Vec2 q = n == 0 ? embed(PadicNumber::zero(p, 8), cfg) : embed(PadicNumber::from_integer(Integer(n), p, 8), cfg);
      seen.insert({q.x, q.y});
    }
    o.need(static_cast<long>(seen.size()) == total, "embedding not injective for p=" + std::to_string(p));
  }
  std::mt19937_64 rng(808);
  int triples = 0;
  while (triples < 1000) {
    long p = std::vector<long>{2, 3, 5}[rng() % 3];
    EmbedConfig cfg{p, 10, 0.0};
    Integer mod = ipow(Integer(p), 10);
    auto draw = [&] {
      Integer r = Integer(static_cast<unsigned long>(rng() % 4000000000ul)) % mod;
      return r;
    };
    Integer a = draw(), b = draw(), c = draw();
    int vab = int_valuation(b - a, p), vac = int_valuation(c - a, p);
    if (vab == vac || vab >= 10 || vac >= 10) continue;
    auto pt = [&](const Integer& n) {
      return embed(n == 0 ? PadicNumber::zero(p, 10) : PadicNumber::from_integer(n, p, 10), cfg);
    };
    double dab = dist(pt(a), pt(b)), dac = dist(pt(a), pt(c));
    o.need((vab > vac) == (dab < dac), "order not preserved");
    ++triples;
  }
  std::normal_distribution<double> noise(0.0, 1e-3);
  for (long p : {2L, 3L, 5L}) {
    auto u = TruncatedSeries::parse("x^3*(1 + x)", p);
    OrbitImage a{"a", {}};
    EmbedConfig cfg{p, 8, 0.0};
    for (long s = 1; s < 12; ++s) {
      auto img = orbit_image(iterate(u, PadicNumber::from_integer(Integer(p * s), p, 24), 1), cfg, true);
      a.points.insert(a.points.end(), img.points.begin(), img.points.end());
    }
    OrbitImage b{"b", {}};
    for (const auto& q : a.points) b.points.push_back(q * (1.0 / p) + Vec2{0.05 + noise(rng), -0.1 + noise(rng)});
    auto rep = homothety_check(a, b, 1.0 / p);
    o.need(std::abs(rep.scale - 1.0 / p) <= 1e-2 && rep.pass, "homothety scale off for p=" + std::to_string(p));
  }
  return o;
}

// 9. matching
Outcome matching_suite() {
  Outcome o;
  std::vector<TruncatedSeries> cands;
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      for (int a3 = 0; a3 < 3; ++a3) cands.push_back(TruncatedSeries{3, {Rational(a1), Rational(a2), Rational(a3)}});
  FitConfig cfg;
  for (int s : {1, 2, 4, 5, 7, 8}) cfg.seeds.push_back(Rational(3 * s));
  TraceConfig tc;
  tc.step = 1.0;
  tc.speed_floor = 0.0;
  tc.max_steps = 100;
  int clean = 0, noisy = 0, total = 0;
  for (std::size_t truth : {0u, 7u, 13u, 20u, 26u}) {
    auto g = orbit_field({series_image(cands[truth], cfg)}, {801, 0.0});
    auto lines = trace(g, critical_seeds(g, g.spacing), tc);
    if (fit_series(lines, cands, cfg)[0].candidate_id == truth) ++clean;
    if (fit_series(perturb(lines, 1e-3, 900 + truth), cands, cfg)[0].candidate_id == truth) ++noisy;
    ++total;
  }
  o.need(clean == total, "noiseless top-1 below 100%");
  o.need(noisy * 10 >= total * 9, "noisy top-1 below 90%");
  o.note = "noiseless " + std::to_string(clean) + "/" + std::to_string(total) + ", noisy " + std::to_string(noisy) +
           "/" + std::to_string(total);
  return o;
}

// 10. hole sequences and continuation
Outcome tfilter_suite() {
  Outcome o;
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<long> den(2, 200), cnt(1, 40);
  for (int k = 0; k < 50; ++k) {
    long d = den(rng);
    long a = 1 + static_cast<long>(rng() % (d - 1)), b = 1 + static_cast<long>(rng() % (d - 1));
    if (a == b) b = a + 1 < d ? a + 1 : a - 1;
    if (b == 0) {
      --k;
      continue;
    }
    Rational r(std::min(a, b), d), rs(std::max(a, b), d);
    r.canonicalize();
    rs.canonicalize();
    auto seq = generate_hole_sequence(r, rs, static_cast<int>(cnt(rng)));
    auto rep = verify_specs(seq, canonical_filter_base(seq));
    o.need(rep.all(), "hole sequence rejected for r=" + r.get_str() + ", r*=" + rs.get_str());
  }
  std::uniform_int_distribution<long> c(-20, 20);
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> yc{Rational(c(rng)), Rational(c(rng), 3), Rational(c(rng)), Rational(1 + k % 4)};
    yc[1].canonicalize();
    Evaluator y = [yc](const Rational& z) -> Rational { return yc[0] + z * (yc[1] + z * (yc[2] + z * yc[3])); };
    Evaluator yp = [yc](const Rational& z) -> Rational { return yc[1] + z * (2 * yc[2] + 3 * z * yc[3]); };
    std::vector<std::pair<Rational, Rational>> eta;
    std::set<Rational> used;
    while (eta.size() < 6) {
      Rational pt(c(rng), 1 + static_cast<long>(rng() % 5));
      pt.canonicalize();
      if (used.count(pt) || yp(pt) == 0) continue;
      used.insert(pt);
      Rational target(c(rng), 7);
      target.canonicalize();
      eta.push_back({pt, target});
    }
    auto y0 = continuation_adjust(y, yp, eta);
    for (const auto& [pt, target] : eta) o.need(y0(pt) == target, "target missed at " + pt.get_str());
    auto again = continuation_adjust(y0.as_evaluator(), yp, eta);
    for (const auto& f : again.factors()) o.need(f == 0, "second adjustment is not the identity");
    for (const auto& z : used) o.need(again(z) == y0(z), "second adjustment moved a value");
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "formal group round trip, 100 curves", 5, round_trip},
      {2, "point counts and Hasse bound, 20-curve panel", 30, point_counts},
      {3, "invariant identities on 1000 curves and 11a3", 0, invariant_identities},
      {4, "Tate parameter: h1, composition, v(q) = -v(j)", 5, tate_parameter_suite},
      {5, "formation: recovery, Axiom A, class PNT", 60, formation_suite},
      {6, "greedy geodesic equals exhaustive, t = 1/2 flagged", 0, geodesic_suite},
      {7, "p-adic laws and sides of zero", 0, padic_laws},
      {8, "planar embedding: injective, ordered, homothety", 0, embedding_suite},
      {9, "field matching top-1, 27 candidates x 5 fields", 120, matching_suite},
      {10, "hole sequences and continuation adjustment", 0, tfilter_suite},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::printf("%s  %2d  %-52s %7.2fs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
