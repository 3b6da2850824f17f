#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "padyn/error.hpp"
#include "padyn/formation.hpp"

using namespace padyn;

namespace {

std::vector<Rational> R(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("normalization and the minimal prime") {
  auto n = normalize(R({1, 2, 3, 4}));
  CHECK(n.n_star == 5);
  CHECK(n.n2 == 10);
  CHECK(n.values[3] == Rational(2, 5));
  CHECK_THROWS_AS(normalize(R({1, -1})), Error);
  auto tbl = character_table(R({1, 2, 3, 4}));
  CHECK(tbl.p_star == 7);
  CHECK(character_table(R({2, 0, 5, 0, 0, 0, 0, 0, 0, 1})).p_star == 13);
  CHECK(std::abs(tbl.value(7)) == 0.0);
  CHECK(tbl.value(1) == std::complex<double>(1.0, 0.0));
  CHECK(tbl.value(6) == std::complex<double>(1.0, 0.0));  // residue past n*
  CHECK(tbl.value(9).real() == doctest::Approx(tbl.value(2).real()));
  CHECK(std::abs(tbl.value(3)) == doctest::Approx(1.0));
}

TEST_CASE("angles reduce into (-1, 1]") {
  auto tbl = character_table(R({5, -2}));  // n2 = 3, angles 5/3 and -2/3
  CHECK(tbl.reduced_angle(2) == Rational(-1, 3));
  CHECK(tbl.reduced_angle(3) == Rational(-2, 3));
  auto one = character_table(R({0, 4}));
  CHECK(one.reduced_angle(3) == 1);
}

TEST_CASE("recovery on nonnegative vectors is exact") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(0, 40);
  for (int trial = 0; trial < 50; ++trial) {
    int n_star = 2 + trial % 49;
    std::vector<Rational> a;
    for (int n = 2; n <= n_star; ++n) a.emplace_back(coef(rng));
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) a[0] = 1;
    auto tbl = character_table(a);
    CHECK(recovered_coefficients(tbl) == a);
    CHECK(recovery_sum(tbl, 3.0) == doctest::Approx(truncated_dirichlet(a, 3.0)).epsilon(1e-12));
    CHECK(recovery_sum_numeric(tbl, 2.5) == doctest::Approx(truncated_dirichlet(a, 2.5)).epsilon(1e-9));
  }
}

TEST_CASE("signed coefficients") {
  auto a = R({3, -1, 2});  // n2 = 4
  auto tbl = character_table(a);
  CHECK(recovered_coefficients(tbl, SignMode::restored) == a);
  CHECK(recovered_coefficients(tbl, SignMode::magnitude) == R({3, 1, 2}));
  CHECK_THROWS_AS(recovery_sum(tbl, 2.0), Error);
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(10, 3.0, 2.0) == doctest::Approx(0.2));
  // bound dominates the partial tail of C n^{1 - sigma}
  double tail = 0;
  for (int n = 11; n < 200000; ++n) tail += 2.0 * std::pow(n, -2.0);
  CHECK(tail <= tail_bound(10, 3.0, 2.0));
  CHECK_THROWS_AS(tail_bound(10, 2.0, 1.0), Error);
}

TEST_CASE("class counts against enumeration") {
  Formation f{7, 5};
  for (long h = 1; h < 7; ++h)
    for (std::int64_t x : {1, 6, 7, 50, 1000}) {
      auto c = class_counts(f, h, x);
      CHECK(c.norm_count == oracle::count_class(x, 7, h));
      std::int64_t primes = 0;
      for (std::int64_t k = 2; k <= x; ++k)
        if (k % 7 == h && oracle::is_prime_slow(k)) ++primes;
      CHECK(c.prime_count == primes);
    }
  CHECK_THROWS_AS(class_counts(f, 14, 10), Error);
}

TEST_CASE("Axiom A and the prime number theorem in classes") {
  double worst = 0;
  for (std::int64_t x = 1; x <= 3000; ++x)
    for (long h = 1; h < 11; ++h)
      worst = std::max(worst, std::abs(static_cast<double>(oracle::count_class(x, 11, h)) - x / 11.0));
  CHECK(axiom_a_max_error(11, 3000) == doctest::Approx(worst));
  CHECK(axiom_a_max_error(11, 3000) <= 1.0);
  for (double r : pnt_ratios(11, 200000)) {
    CHECK(r > 0.7);
    CHECK(r < 1.4);
  }
}
