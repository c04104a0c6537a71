#include "hecke/lfunction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hecke/ntheory.hpp"
#include "hecke/specfun.hpp"

namespace hecke::lfunction {

namespace {

// Deligne's bound gives C <= 1; anything above signals corrupted coefficients.
constexpr double kDeligneSlack = 1.0 + 1e-6;

// sum_{n > N} C d(n) n^{(k-1)/2} [(2 pi n)^{-s} Gamma(s, 2 pi n) + (2 pi n)^{s-k} Gamma(k-s, 2 pi n)]
// with d(n) <= 2 sqrt(n) and x^{-a} Gamma(a, x) <= e^{-x} / (x - a + 1) for x > a - 1.
double dirichlet_tail(double c, int k, double s, int n_max) {
  auto bound = [&](int n) {
    const double x = 2.0 * kPi * n;
    const double brackets = 1.0 / (x - s + 1.0) + 1.0 / (x - (k - s) + 1.0);
    return std::exp(std::log(2.0 * c) + 0.5 * k * std::log(static_cast<double>(n)) - x) * brackets;
  };
  const int n = n_max + 1;
  const double x = 2.0 * kPi * n;
  if (x <= k + 1.0) throw PrecisionError("L-value tail: too few coefficients for this weight");
  const double ratio = std::pow(static_cast<double>(n + 1) / n, 0.5 * k) * std::exp(-2.0 * kPi);
  return bound(n) / (1.0 - ratio);
}

}  // namespace

double coefficient_bound_constant(const std::vector<double>& a, int k) {
  double c = 0.0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    const double scale = static_cast<double>(ntheory::divisor_count(static_cast<std::int64_t>(n))) *
                         std::pow(static_cast<double>(n), 0.5 * (k - 1));
    c = std::max(c, std::abs(a[n]) / scale);
  }
  return c;
}

LValue completed_l(const Eigenform& f, double s, double eps) {
  const int k = f.weight;
  const int n_max = f.size();
  if (n_max < kMinCoefficients) {
    throw PrecisionError("completed_l: need at least " + std::to_string(kMinCoefficients) +
                         " coefficients, got " + std::to_string(n_max));
  }
  if (s < 0.5 * k - 2.0 || s > 0.5 * k + 2.0) {
    throw DomainError("completed_l: s must lie within 2 of k/2");
  }
  const std::vector<double> a = f.coefficients_double();
  const double c = coefficient_bound_constant(a, k);
  if (c > kDeligneSlack) {
    throw std::logic_error("completed_l: coefficients exceed the Ramanujan-Petersson bound");
  }
  const double root_sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;

  double sum = 0.0, abs_sum = 0.0, err = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double x = 2.0 * kPi * n;
    const ValueWithError g1 = specfun::upper_incomplete_gamma(s, x);
    const ValueWithError g2 = specfun::upper_incomplete_gamma(k - s, x);
    const double w1 = std::pow(x, -s);
    const double w2 = std::pow(x, s - k);
    const double t1 = a[n] * w1 * g1.value;
    const double t2 = root_sign * a[n] * w2 * g2.value;
    sum += t1 + t2;
    abs_sum += std::abs(t1) + std::abs(t2);
    err += std::abs(a[n]) * (w1 * g1.abs_err + w2 * g2.abs_err) +
           8.0 * kMachineEps * (std::abs(t1) + std::abs(t2));
  }
  err += (n_max + 4) * kMachineEps * abs_sum;
  err += dirichlet_tail(2.0 * c, k, s, n_max);
  if (err > eps) {
    throw PrecisionError("completed_l: error " + std::to_string(err) + " exceeds target " +
                         std::to_string(eps));
  }

  LValue out;
  out.k = k;
  out.s = s;
  out.terms_used = n_max;
  out.completed = {sum, err};
  const double log_factor = s * std::log(2.0 * kPi) - specfun::log_gamma(s);
  const double factor = std::exp(log_factor);
  out.finite.value = factor * sum;
  out.finite.abs_err =
      factor * err + 4.0 * (std::abs(log_factor) + 1.0) * kMachineEps * std::abs(out.finite.value);
  return out;
}

double functional_equation_residual(const Eigenform& f, double s) {
  const int k = f.weight;
  const double root_sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  const LValue left = completed_l(f, s);
  const LValue right = completed_l(f, k - s);
  return std::abs(left.completed.value - root_sign * right.completed.value);
}

std::vector<CentralValue> central_values(int k, double eps) {
  if (k < 12 || k % 2 != 0) {
    throw DomainError("central_values: weight must be even and >= 12, got " + std::to_string(k));
  }
  std::vector<CentralValue> out;
  for (auto& f : eigenforms(k, kDefaultCoefficients)) {
    const LValue v = completed_l(f, 0.5 * k, eps);
    out.push_back({std::move(f), v.finite});
  }
  return out;
}

}  // namespace hecke::lfunction
