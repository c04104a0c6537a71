#include "hecke/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hecke/specfun.hpp"

namespace hecke::kernel {

namespace {

constexpr double kMinEps = 1e-14;
constexpr int kMaxTerms = 2'000'000;

void require_kernel_weight(int k) {
  if (k % 4 != 0 || k < 12) {
    throw DomainError("weight must satisfy k = 0 mod 4 and k >= 12, got " + std::to_string(k));
  }
}

void require_series_weight(int k) {
  require_kernel_weight(k);
  if (k > 40) throw DomainError("weight above 40 is out of range, got " + std::to_string(k));
}

double log_factorial(int n) { return specfun::log_gamma(n + 1.0); }

// zeta(s) rounded upward
double zeta_upper(double s) {
  const ValueWithError z = ntheory::zeta(s);
  return z.value + z.abs_err;
}

KernelCoefficient evaluate(int k, int n, double eps, double log_prefactor,
                           ntheory::PhaseConvention convention) {
  require_series_weight(k);
  if (n < 1) throw DomainError("coefficient index n must be positive");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (eps < kMinEps) {
    throw PrecisionError("eps below 1e-14 cannot be certified in double precision");
  }

  // smallest M with tail(M) < eps/2
  const double nu = 0.5 * (k - 1);
  int terms = static_cast<int>(std::ceil(
      std::pow(2.0 * tail_bound(k, n, 1) / eps, 1.0 / (nu - 1.0))));
  terms = std::max(terms, 1);
  while (terms > 1 && tail_bound(k, n, terms - 1) < 0.5 * eps) --terms;
  while (tail_bound(k, n, terms) >= 0.5 * eps) ++terms;
  if (terms > kMaxTerms) throw PrecisionError("r_k: truncation point too large");

  const ValueWithError sum = partial_bracket_sum(k, n, terms, convention);
  if (sum.abs_err >= 0.5 * eps) {
    throw PrecisionError("r_k: accumulated Bessel and rounding error " +
                         std::to_string(sum.abs_err) + " exceeds eps/2");
  }
  const double tail = tail_bound(k, n, terms);
  const int sign = (k / 4) % 2 == 0 ? 1 : -1;

  KernelCoefficient out;
  out.k = k;
  out.n = n;
  out.terms_used = terms;
  out.tail_bound = tail;
  out.rho.value = 1.0 + sign * sum.value;
  out.rho.abs_err = sum.abs_err + tail + kMachineEps * std::abs(out.rho.value);
  out.log_prefactor = log_prefactor;
  const double prefactor = std::exp(log_prefactor);
  out.value.value = prefactor * out.rho.value;
  out.value.abs_err = prefactor * out.rho.abs_err +
                      4.0 * (std::abs(log_prefactor) + 1.0) * kMachineEps *
                          std::abs(out.value.value);
  return out;
}

}  // namespace

SignedLog c_k(int k) {
  require_kernel_weight(k);
  SignedLog c;
  c.sign = (k / 4) % 2 == 0 ? 1 : -1;
  c.log_abs = (0.5 * k - 1.0) * std::log(8.0 * kPi) + specfun::log_gamma(0.5 * k) -
              specfun::log_gamma(k - 1.0);
  return c;
}

double tail_bound(int k, int n, int truncation) {
  if (truncation < 1) throw DomainError("tail_bound: truncation must be positive");
  const specfun::HalfIntOrder order = specfun::HalfIntOrder::for_weight(k);
  const double nu = order.value();
  if (nu <= 1.0) throw DomainError("tail_bound: needs k > 3");
  const double x = n * kPi;
  const double a = 2.0 * std::sqrt(2.0 * kPi) * std::sqrt(x) * specfun::bessel_envelope(order, x);
  return (1.0 + 1e-12) * a * std::pow(static_cast<double>(truncation), 1.0 - nu) / (nu - 1.0);
}

ValueWithError partial_bracket_sum(int k, int n, int terms, ntheory::PhaseConvention convention) {
  const specfun::HalfIntOrder order = specfun::HalfIntOrder::for_weight(k);
  const double root_two_pi = std::sqrt(2.0 * kPi);
  double sum = 0.0, abs_sum = 0.0, err = 0.0;
  for (int m = 1; m <= terms; ++m) {
    const double x = n * kPi / m;
    const double gamma = ntheory::gamma_sum(n, m, convention);
    if (gamma == 0.0) continue;
    const ValueWithError j = specfun::bessel_j(order, x);
    const double weight = root_two_pi * std::sqrt(x);
    const double term = weight * gamma * j.value;
    sum += term;
    abs_sum += std::abs(term);
    // each cosine carries about one ulp; d(m) of them enter gamma
    const double gamma_err = 2.0 * kMachineEps * ntheory::divisor_count(m);
    err += weight * (std::abs(gamma) * j.abs_err + gamma_err * std::abs(j.value));
  }
  err += (terms + 4) * kMachineEps * abs_sum;
  return {sum, err};
}

KernelCoefficient r_k(int k, int n, double eps) {
  require_series_weight(k);
  if (n < 1) throw DomainError("coefficient index n must be positive");
  const double log_prefactor = (0.5 * k - 1.0) * std::log(8.0 * kPi) - std::log(4.0) -
                               log_factorial(k - 2) + (0.5 * k - 1.0) * std::log(n);
  return evaluate(k, n, eps, log_prefactor, ntheory::PhaseConvention::ReducedInverse);
}

KernelCoefficient r_k_unfolded(int k, int n, double eps) {
  require_series_weight(k);
  if (n < 1) throw DomainError("coefficient index n must be positive");
  const double log_prefactor = std::log(4.0) + 0.5 * k * std::log(2.0 * kPi) +
                               (0.5 * k - 1.0) * std::log(8.0 * kPi) - log_factorial(k - 2) +
                               (0.5 * k - 1.0) * std::log(n);
  return evaluate(k, n, eps, log_prefactor, ntheory::PhaseConvention::Unimodular);
}

double per_k_bound(int k) {
  require_kernel_weight(k);
  const double log_bound = std::log(2.0) + 0.5 * k * std::log(2.0 * kPi) +
                           log_factorial(k / 2) - log_factorial(k) +
                           2.0 * std::log(zeta_upper(0.5 * k));
  return std::exp(log_bound);
}

double global_bound() {
  const double z6 = zeta_upper(6.0);
  return 2.0 * (2.0 * kPi / 7.0) * std::pow(2.0 * kPi / 8.0, 5) * z6 * z6;
}

BoundChain bound_chain(int k) {
  require_kernel_weight(k);
  BoundChain c;
  c.k = k;
  const int h = k / 2;
  c.factorial_factor =
      std::exp(h * std::log(2.0 * kPi) + log_factorial(h) - log_factorial(k));
  c.factorial_majorant = (2.0 * kPi / (h + 1)) * std::pow(2.0 * kPi / (h + 2), h - 1);
  c.weight_free_majorant = (2.0 * kPi / 7.0) * std::pow(2.0 * kPi / 8.0, 5);
  const double zh = zeta_upper(h);
  const double z6 = zeta_upper(6.0);
  c.zeta_half_k_sq = zh * zh;
  c.zeta_6_sq = z6 * z6;
  c.per_k = per_k_bound(k);
  c.global = global_bound();
  return c;
}

Certificate certify(int k, double eps) {
  const KernelCoefficient coef = r_k(k, 1, eps);
  Certificate cert;
  cert.k = k;
  cert.rho = coef.rho;
  cert.per_k_bound = per_k_bound(k);
  cert.global_bound = global_bound();
  cert.nonvanishing = coef.rho.excludes_zero();
  if (cert.nonvanishing) {
    cert.sign = coef.rho.value > 0 ? Sign::Positive : Sign::Negative;
  }
  if (coef.rho.value < 1.0 - cert.per_k_bound - coef.rho.abs_err) {
    throw std::logic_error("certify: bracket below 1 - per_k_bound at k = " + std::to_string(k));
  }
  return cert;
}

}  // namespace hecke::kernel
