#include <cmath>

#include "doctest.h"
#include "hecke/ntheory.hpp"
#include "oracles.hpp"

using namespace hecke;
using namespace hecke::ntheory;

TEST_CASE("ext_gcd returns a Bezout triple") {
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {6, 35}, {12, 18}, {-12, 18},
                      {0, 7}, {7, 0}, {240, -46}}) {
    const auto [g, x, y] = ext_gcd(a, b);
    CHECK(g > 0);
    CHECK(a * x + b * y == g);
    CHECK(g == std::gcd(a, b));
  }
  CHECK(ext_gcd(6, 35).g == 1);
  CHECK(ext_gcd(12, 18).g == 6);
  CHECK_THROWS_AS(ext_gcd(0, 0), DomainError);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(1, 1) == 0);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(4, 6), DomainError);
  CHECK_THROWS_AS(mod_inverse(0, 6), DomainError);

  int checked = 0;
  for (std::int64_t c = 2; c <= 1000; ++c) {
    for (std::int64_t a = 1; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      const std::int64_t inv = mod_inverse(a, c);
      REQUIRE(inv >= 0);
      REQUIRE(inv < c);
      REQUIRE((a * inv) % c == 1);
      ++checked;
    }
  }
  CHECK(checked > 300000);
}

TEST_CASE("coprime factor pairs") {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(coprime_factor_pairs(1) == P{{1, 1}});
  CHECK(coprime_factor_pairs(6) == P{{1, 6}, {2, 3}, {3, 2}, {6, 1}});
  CHECK(coprime_factor_pairs(4) == P{{1, 4}, {4, 1}});
  CHECK_THROWS_AS(coprime_factor_pairs(0), DomainError);

  for (std::int64_t m = 1; m <= 10000; ++m) {
    const auto pairs = coprime_factor_pairs(m);
    REQUIRE(pairs.size() == (std::size_t{1} << oracle::distinct_primes(m)));
    if (m <= 600) REQUIRE(pairs == oracle::coprime_pairs(m));
  }
}

TEST_CASE("gamma sums on small arguments") {
  for (int n = 1; n <= 20; ++n) CHECK(gamma_sum(n, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(gamma_sum(1, 2)) < 1e-15);
  CHECK(gamma_sum(1, 3) == doctest::Approx(1.0).epsilon(1e-14));
  // (1,4) and (4,1) both give cos(pi/4)
  CHECK(gamma_sum(1, 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  const auto terms = gamma_sum_terms(1, 6);
  REQUIRE(terms.size() == 4);
  for (const auto& t : terms) {
    CHECK(t.a * t.c == 6);
    CHECK(std::gcd(t.a, t.c) == 1);
    if (t.c > 1) CHECK((t.a * t.a_inv) % t.c == 1);
    if (t.c == 1) CHECK(t.a_inv == 0);
    if (t.a > 1) CHECK((t.c * t.c_inv) % t.a == 1);
    if (t.a == 1) CHECK(t.c_inv == 0);
    CHECK(std::abs(t.contribution) <= 1.0);
    CHECK(t.contribution == doctest::Approx(std::cos(t.angle)).epsilon(1e-14));
  }
}

TEST_CASE("gamma sums are bounded by the divisor count") {
  for (std::int64_t m = 1; m <= 500; ++m) {
    const double d = static_cast<double>(divisor_count(m));
    for (std::int64_t n = 1; n <= 20; ++n) {
      REQUIRE(std::abs(gamma_sum(n, m)) <= d + 1e-12);
      REQUIRE(std::abs(gamma_sum(n, m, PhaseConvention::Unimodular)) <= d + 1e-12);
    }
  }
}

TEST_CASE("gamma sums are invariant under swapping a and c") {
  // Half-sum over a <= c, doubled, with the diagonal pair (1,1) counted once.
  for (std::int64_t m = 1; m <= 300; ++m) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      double half = 0.0;
      for (const auto& t : gamma_sum_terms(n, m)) {
        if (t.a < t.c) half += 2.0 * t.contribution;
        if (t.a == t.c) half += t.contribution;
      }
      REQUIRE(half == doctest::Approx(gamma_sum(n, m)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("unimodular phases differ by (-1)^n on (1,1) and on pairs with a, c > 1") {
  for (std::int64_t m = 1; m <= 200; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      const auto reduced = gamma_sum_terms(n, m);
      const auto unimodular = gamma_sum_terms(n, m, PhaseConvention::Unimodular);
      REQUIRE(reduced.size() == unimodular.size());
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        const auto& t = reduced[i];
        const bool flipped = (t.a == 1 && t.c == 1) || (t.a > 1 && t.c > 1);
        const double expected = (flipped && n % 2 == 1) ? -t.contribution : t.contribution;
        REQUIRE(unimodular[i].contribution == doctest::Approx(expected).scale(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("divisor counts") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(6) == 4);
  CHECK(divisor_count(12) == 6);
  for (std::int64_t m = 1; m <= 2000; ++m) REQUIRE(divisor_count(m) == oracle::divisor_count(m));
  CHECK(divisor_sigma(2, 3) == 9);
  CHECK(divisor_sigma(12, 1) == 28);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  CHECK_THROWS_AS(bernoulli(1), DomainError);
  CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("zeta values") {
  const auto z2 = zeta(2.0);
  CHECK(z2.contains(kPi * kPi / 6.0));
  CHECK(z2.value == doctest::Approx(1.6449340668).epsilon(1e-10));
  const auto z6 = zeta(6.0);
  CHECK(z6.contains(std::pow(kPi, 6) / 945.0));
  CHECK(z6.abs_err < 1e-14);

  const auto [lo, hi] = oracle::zeta_bracket(7.0, 2000);
  const auto z7 = zeta(7.0);
  CHECK(z7.upper() >= lo);
  CHECK(z7.lower() <= hi);
  CHECK(z7.value == doctest::Approx(1.0083492773819228268).epsilon(1e-15));

  // near the pole the value is large but still certified
  const auto z = zeta(1.01);
  const auto [lo1, hi1] = oracle::zeta_bracket(1.01, 200000);
  CHECK(z.upper() >= lo1);
  CHECK(z.lower() <= hi1);

  CHECK_THROWS_AS(zeta(1.0), DomainError);
  CHECK_THROWS_AS(zeta(0.5), DomainError);
}

TEST_CASE("zeta at even integers matches the Bernoulli closed form") {
  double factorial = 1.0;
  for (int t = 1; t <= 8; ++t) {
    factorial *= (2 * t - 1) * (2 * t);
    const double b = std::abs(static_cast<double>(bernoulli(2 * t)));
    const double closed = b * std::pow(2.0 * kPi, 2 * t) / (2.0 * factorial);
    const auto z = zeta(2.0 * t);
    CHECK(std::abs(z.value - closed) <= z.abs_err);
  }
}

TEST_CASE("tabulated Bernoulli ratios match the exact recurrence") {
  BigInt fact = 1;
  for (int j = 1; j <= 19; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    const double exact = static_cast<double>(bernoulli(2 * j) / Rational(fact));
    REQUIRE(bernoulli_over_factorial(j) == doctest::Approx(exact).epsilon(1e-16));
  }
  CHECK_THROWS_AS(bernoulli_over_factorial(0), DomainError);
  CHECK_THROWS_AS(bernoulli_over_factorial(20), DomainError);
}
