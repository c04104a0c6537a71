#include <cmath>
#include <map>

#include "doctest.h"
#include "hecke/lfunction.hpp"
#include "hecke/qexpansion.hpp"
#include "hecke/specfun.hpp"

using namespace hecke;
using namespace hecke::lfunction;

namespace {

// Lambda(f, s) with the Mellin integral split at t instead of 1; the two
// halves no longer swap under s <-> k - s, so agreement with completed_l
// tests the evaluation and not just its symmetry.
double completed_split(const Eigenform& f, double s, double t) {
  const int k = f.weight;
  const double eps_k = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  const auto a = f.coefficients_double();
  double sum = 0.0;
  for (int n = 1; n < static_cast<int>(a.size()); ++n) {
    const double x = 2.0 * kPi * n;
    sum += a[n] * (std::pow(x, -s) * specfun::upper_incomplete_gamma(s, x * t).value +
                   eps_k * std::pow(x, s - k) * specfun::upper_incomplete_gamma(k - s, x / t).value);
  }
  return sum;
}

Eigenform truncated(const Eigenform& f, int n) {
  Eigenform g = f;
  g.a.resize(n + 1);
  return g;
}

}  // namespace

TEST_CASE("L(Delta, s) against 30-digit references") {
  const auto delta = eigenforms(12, kDefaultCoefficients).at(0);
  const std::map<double, double> ref = {{5.0, 0.6667091884340036438261},
                                        {6.0, 0.792122838646030569},
                                        {6.5, 0.8393455120319420864881},
                                        {7.0, 0.8773541253886609164532},
                                        {8.0, 0.9307070302981260942029}};
  for (const auto& [s, v] : ref) {
    const auto l = completed_l(delta, s);
    INFO("s = " << s);
    REQUIRE(l.finite.contains(v));
    REQUIRE(l.finite.abs_err < 1e-10);
    REQUIRE(l.finite.value == doctest::Approx(v).epsilon(1e-12));
    REQUIRE(l.terms_used == kDefaultCoefficients);
    const double factor = std::pow(2.0 * kPi, s) / std::tgamma(s);
    REQUIRE(l.finite.value == doctest::Approx(l.completed.value * factor).epsilon(1e-13));
  }
}

TEST_CASE("evaluation does not depend on the split point") {
  for (int k : {12, 16, 24}) {
    for (const auto& f : eigenforms(k, kDefaultCoefficients)) {
      for (double s : {0.5 * k - 1.5, 0.5 * k, 0.5 * k + 1.0}) {
        const double sym = completed_l(f, s).completed.value;
        for (double t : {0.8, 1.25}) {
          REQUIRE(completed_split(f, s, t) == doctest::Approx(sym).epsilon(1e-11));
        }
      }
    }
  }
}

TEST_CASE("central values at weights 16 and 20") {
  const auto c16 = central_values(16);
  REQUIRE(c16.size() == 1);
  CHECK(c16[0].value.contains(1.5205616690847287));
  const auto c20 = central_values(20);
  REQUIRE(c20.size() == 1);
  CHECK(c20[0].value.contains(1.9817354054335267));
  const auto c24 = central_values(24);
  CHECK(c24.size() == 2);
}

TEST_CASE("forced vanishing when k = 2 mod 4") {
  CHECK(central_values(14).empty());
  for (int k : {18, 22, 26, 30, 34, 38}) {
    const auto values = central_values(k);
    REQUIRE(values.size() == static_cast<std::size_t>(dim_cusp(k)));
    for (const auto& v : values) {
      INFO("k = " << k);
      REQUIRE(std::abs(v.value.value) < 1e-9);
      REQUIRE(v.value.contains(0.0));
    }
  }
}

TEST_CASE("functional equation residual") {
  for (int k = 12; k <= 28; k += 2) {
    for (const auto& f : eigenforms(k, kDefaultCoefficients)) {
      for (double s : {0.5 * k - 1.0, 0.5 * k - 0.5, 0.5 * k + 0.7}) {
        INFO("k = " << k << " s = " << s);
        REQUIRE(functional_equation_residual(f, s) < 1e-9);
      }
      CHECK(functional_equation_residual(f, 0.5 * k) == 0.0);
    }
  }
}

TEST_CASE("doubling the coefficient count stays inside the error bar") {
  for (int k : {12, 24, 32, 40}) {
    const auto forms = eigenforms(k, 2 * kDefaultCoefficients);
    for (const auto& f : forms) {
      const auto full = completed_l(f, 0.5 * k);
      const auto half = completed_l(truncated(f, kDefaultCoefficients), 0.5 * k);
      INFO("k = " << k);
      REQUIRE(std::abs(full.completed.value - half.completed.value) <= half.completed.abs_err);
    }
  }
}

TEST_CASE("central value signs for k = 0 mod 4") {
  for (int k = 12; k <= 40; k += 4) {
    for (const auto& v : central_values(k)) {
      INFO("k = " << k);
      REQUIRE(v.value.excludes_zero());
    }
  }
}

TEST_CASE("preconditions") {
  const auto delta = eigenforms(12, kDefaultCoefficients).at(0);
  CHECK_THROWS_AS(completed_l(delta, 3.0), DomainError);
  CHECK_THROWS_AS(completed_l(delta, 8.5), DomainError);
  CHECK_THROWS_AS(completed_l(truncated(delta, 20), 6.0), PrecisionError);
  CHECK_THROWS_AS(completed_l(delta, 6.0, 1e-30), PrecisionError);
  CHECK_THROWS_AS(central_values(13), DomainError);
  CHECK(coefficient_bound_constant(delta.coefficients_double(), 12) <= 1.0);
  CHECK(coefficient_bound_constant(delta.coefficients_double(), 12) > 0.1);
}
