#include "hecke/specfun.hpp"

#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace hecke::specfun {

HalfIntOrder::HalfIntOrder(int twice_nu) : twice_nu_(twice_nu) {
  if (twice_nu < 1 || twice_nu % 2 == 0) {
    throw DomainError("half-integer order needs an odd positive 2*nu, got " +
                      std::to_string(twice_nu));
  }
}

ValueWithError bessel_j(HalfIntOrder nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j: argument must be positive");
  if (x > kMaxBesselArgument) throw DomainError("bessel_j: argument beyond the series domain");

  const double order = nu.value();
  const double q = 0.25 * x * x;
  const double log_lead = order * std::log(0.5 * x);
  const double log_norm = log_gamma(order + 1.0);
  double term = std::exp(log_lead - log_norm);
  // exp() turns the absolute error of its argument into a relative error
  // on every term
  const double lead_err = 2.0 * (std::abs(log_lead) + std::abs(log_norm) + 1.0) * kMachineEps;
  double sum = 0.0, abs_sum = 0.0;
  int j = 0;
  for (;; ++j) {
    const double ratio = q / ((j + 1) * (order + j + 1));
    const double next = -term * ratio;
    sum += term;
    abs_sum += std::abs(term);
    // The ratio decreases in j, so once it is below 1 the remaining terms
    // alternate with decreasing magnitude and the first omitted term bounds
    // the tail.
    if (ratio < 1.0 && std::abs(next) <= 0.25 * kMachineEps * abs_sum) {
      const double rounding = ((j + 4) * 4.0 * kMachineEps + lead_err) * abs_sum;
      return {sum, std::abs(next) + rounding};
    }
    term = next;
    if (j > 500) break;
  }
  throw PrecisionError("bessel_j: series did not settle");
}

double bessel_envelope(HalfIntOrder nu, double x) {
  if (x < 0.0) throw DomainError("bessel_envelope: argument must be non-negative");
  if (x == 0.0) return 0.0;
  const double order = nu.value();
  return std::exp(order * std::log(0.5 * x) - log_gamma(order + 1.0));
}

double bessel_envelope_factorial(HalfIntOrder nu, double x) {
  if (x < 0.0) throw DomainError("bessel_envelope: argument must be non-negative");
  if (x == 0.0) return 0.0;
  const int k = nu.twice_nu() + 1;
  const int half_k = k / 2;
  // (k/2)!/k! = 1 / ((k/2+1)(k/2+2)...k)
  double log_ratio = 0.0;
  for (int i = half_k + 1; i <= k; ++i) log_ratio -= std::log(static_cast<double>(i));
  return std::sqrt(2.0 / kPi) *
         std::exp(log_ratio + half_k * std::log(2.0) + 0.5 * (k - 1) * std::log(x));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  return boost::math::lgamma(x);
}

ValueWithError upper_incomplete_gamma(double s, double x) {
  if (!(s > 0.0) || !(x > 0.0)) {
    throw DomainError("upper_incomplete_gamma: arguments must be positive");
  }
  if (s > 60.0) throw DomainError("upper_incomplete_gamma: s above 60 is out of range");
  const double v = boost::math::tgamma(s, x);
  return {v, 32.0 * kMachineEps * v};
}

}  // namespace hecke::specfun
