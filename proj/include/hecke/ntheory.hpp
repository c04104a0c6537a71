#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/types.hpp"

namespace hecke::ntheory {

struct GcdResult {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// Bezout data: g = gcd(a, b) > 0 and a*x + b*y = g.
GcdResult ext_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo c in [0, c). The inverse modulo 1 is 0.
std::int64_t mod_inverse(std::int64_t a, std::int64_t c);

/// Ordered pairs (a, c) with a*c = m and gcd(a, c) = 1, sorted by a.
std::vector<std::pair<std::int64_t, std::int64_t>> coprime_factor_pairs(std::int64_t m);

/// How the angle of a coprime pair (a, c) is formed.
enum class PhaseConvention {
  /// pi*n*(a'/c - c'/a) with a' = a^-1 mod c, c' = c^-1 mod a in [0, modulus).
  ReducedInverse,
  /// pi*n*(b/a + d/c) for any integral (b, d) with a*d - b*c = 1, i.e.
  /// pi*n*(2*a*a' - 1)/m. Independent of the representatives chosen.
  Unimodular,
};

struct GammaSumTerm {
  std::int64_t a;
  std::int64_t c;
  std::int64_t a_inv;
  std::int64_t c_inv;
  /// Angle reduced into (-pi, pi].
  double angle;
  double contribution;
};

std::vector<GammaSumTerm> gamma_sum_terms(std::int64_t n, std::int64_t m,
                                          PhaseConvention convention = PhaseConvention::ReducedInverse);

/// gamma_n(m): sum of cos(angle) over the coprime factor pairs of m.
double gamma_sum(std::int64_t n, std::int64_t m,
                 PhaseConvention convention = PhaseConvention::ReducedInverse);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m);

/// d(m), the number of positive divisors.
std::int64_t divisor_count(std::int64_t m);

/// sigma_r(m) exactly.
BigInt divisor_sigma(std::int64_t m, unsigned r);

/// B_n exactly for even n >= 0.
Rational bernoulli(int n);

/// B_2j/(2j)! in double precision for 1 <= j <= 19, from a fixed table.
double bernoulli_over_factorial(int j);

/// zeta(s) for real s > 1 with a certified error bound.
ValueWithError zeta(double s);

}  // namespace hecke::ntheory
