#include "hecke/ntheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/special_functions/cos_pi.hpp>

namespace hecke {

ValueWithError operator/(ValueWithError a, ValueWithError b) {
  if (!(std::abs(b.value) > b.abs_err)) {
    throw DomainError("division by an interval containing zero");
  }
  const double v = a.value / b.value;
  const double rel_b = b.abs_err / (std::abs(b.value) - b.abs_err);
  const double err = a.abs_err / (std::abs(b.value) - b.abs_err) + std::abs(v) * rel_b;
  return {v, err + kMachineEps * std::abs(v)};
}

}  // namespace hecke

namespace hecke::ntheory {

GcdResult ext_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw DomainError("ext_gcd: both arguments are zero");
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t c) {
  if (a <= 0 || c <= 0) throw DomainError("mod_inverse: arguments must be positive");
  const auto [g, x, y] = ext_gcd(a, c);
  if (g != 1) {
    throw DomainError("mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(c) +
                      ") != 1");
  }
  if (c == 1) return 0;
  std::int64_t r = x % c;
  if (r < 0) r += c;
  return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  if (m < 1) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_factor_pairs(std::int64_t m) {
  if (m < 1) throw DomainError("coprime_factor_pairs: m must be positive");
  // Each unitary divisor is a product of a subset of the prime-power factors.
  std::vector<std::int64_t> prime_powers;
  for (const auto& [p, e] : factorize(m)) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    prime_powers.push_back(q);
  }
  std::vector<std::int64_t> divisors{1};
  for (std::int64_t q : prime_powers) {
    const std::size_t n = divisors.size();
    for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * q);
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(divisors.size());
  for (std::int64_t a : divisors) pairs.emplace_back(a, m / a);
  return pairs;
}

namespace {

// Reduces num/den (den > 0) modulo 2 into (-1, 1].
std::int64_t reduce_half_turns(__int128 num, std::int64_t den) {
  const __int128 period = 2 * static_cast<__int128>(den);
  __int128 r = num % period;
  if (r < 0) r += period;
  if (r > den) r -= period;
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::vector<GammaSumTerm> gamma_sum_terms(std::int64_t n, std::int64_t m,
                                          PhaseConvention convention) {
  if (n < 1 || m < 1) throw DomainError("gamma_sum: n and m must be positive");
  std::vector<GammaSumTerm> terms;
  for (const auto& [a, c] : coprime_factor_pairs(m)) {
    GammaSumTerm t{};
    t.a = a;
    t.c = c;
    t.a_inv = mod_inverse(a, c);
    t.c_inv = mod_inverse(c, a);
    // angle = pi * n * numerator / m, numerator exact
    __int128 numerator = 0;
    if (convention == PhaseConvention::ReducedInverse) {
      numerator = static_cast<__int128>(a) * t.a_inv - static_cast<__int128>(c) * t.c_inv;
    } else {
      numerator = 2 * static_cast<__int128>(a) * t.a_inv - 1;
    }
    const std::int64_t r = reduce_half_turns(numerator * n, m);
    const double turns = static_cast<double>(r) / static_cast<double>(m);
    t.angle = kPi * turns;
    t.contribution = boost::math::cos_pi(turns);
    terms.push_back(t);
  }
  return terms;
}

double gamma_sum(std::int64_t n, std::int64_t m, PhaseConvention convention) {
  double sum = 0.0;
  for (const auto& t : gamma_sum_terms(n, m, convention)) sum += t.contribution;
  return sum;
}

std::int64_t divisor_count(std::int64_t m) {
  std::int64_t d = 1;
  for (const auto& [p, e] : factorize(m)) d *= (e + 1);
  return d;
}

BigInt divisor_sigma(std::int64_t m, unsigned r) {
  BigInt total = 1;
  for (const auto& [p, e] : factorize(m)) {
    const BigInt pr = boost::multiprecision::pow(BigInt(p), r);
    BigInt term = 1, power = 1;
    for (int i = 0; i < e; ++i) {
      power *= pr;
      term += power;
    }
    total *= term;
  }
  return total;
}

Rational bernoulli(int n) {
  if (n < 0 || n % 2 != 0) {
    throw DomainError("bernoulli: index must be even and non-negative, got " + std::to_string(n));
  }
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Rational acc = 0;
    BigInt binom = 1;  // C(i+1, j)
    for (int j = 0; j < i; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (i + 1 - j) / (j + 1);
    }
    b[i] = -acc / (i + 1);
  }
  return b[n];
}

namespace {

constexpr int kEulerMaclaurinTerms = 18;

// B_2j/(2j)! for j = 1..19, index 0 unused. Literal so that zeta() needs
// no rational arithmetic.
constexpr std::array<double, kEulerMaclaurinTerms + 2> kBernoulliOverFactorial = {
    0.0,
    8.3333333333333333e-2,
    -1.3888888888888889e-3,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
    2.2679524523376831e-24,
    -5.7447906688722024e-26,
    1.4551724756148649e-27,
    -3.6859949406653102e-29,
    9.3367342570950447e-31,
};

}  // namespace

double bernoulli_over_factorial(int j) {
  if (j < 1 || j > kEulerMaclaurinTerms + 1) {
    throw DomainError("bernoulli_over_factorial: j out of the tabulated range");
  }
  return kBernoulliOverFactorial[j];
}

ValueWithError zeta(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("zeta: requires finite s > 1");
  constexpr int kHead = 16;
  const double big_n = kHead;
  double sum = 0.0, abs_sum = 0.0;
  for (int i = kHead - 1; i >= 1; --i) sum += std::pow(static_cast<double>(i), -s);
  abs_sum = sum;

  const double integral = std::pow(big_n, 1.0 - s) / (s - 1.0);
  const double half = 0.5 * std::pow(big_n, -s);
  sum += integral + half;
  abs_sum += integral + half;

  // T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
  const auto& coef = kBernoulliOverFactorial;
  double rising = s;                    // s(s+1)...(s+2j-2)
  double power = std::pow(big_n, -s - 1.0);  // N^(-s-2j+1)
  double remainder = 0.0;
  for (int j = 1; j <= kEulerMaclaurinTerms + 1; ++j) {
    const double term = coef[j] * rising * power;
    if (j == kEulerMaclaurinTerms + 1 || std::abs(term) < 1e-20 * std::abs(sum)) {
      remainder = std::abs(term);
      break;
    }
    sum += term;
    abs_sum += std::abs(term);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= big_n * big_n;
  }
  const double rounding = (kHead + kEulerMaclaurinTerms + 4) * kMachineEps * abs_sum;
  return {sum, remainder + rounding};
}

}  // namespace hecke::ntheory
