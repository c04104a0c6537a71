#pragma once

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "hecke/types.hpp"

namespace hecke::specfun {

/// A half-integer Bessel order nu = twice_nu / 2 with twice_nu odd.
class HalfIntOrder {
 public:
  explicit HalfIntOrder(int twice_nu);

  /// The order (k - 1)/2 attached to an even weight k.
  static HalfIntOrder for_weight(int k) { return HalfIntOrder(k - 1); }

  int twice_nu() const { return twice_nu_; }
  double value() const { return 0.5 * twice_nu_; }

 private:
  int twice_nu_;
};

/// Largest argument accepted by bessel_j.
inline constexpr double kMaxBesselArgument = 8.0 * kPi;

/// J_nu(x) from the ascending series with a certified error bound.
ValueWithError bessel_j(HalfIntOrder nu, double x);

/// Ascending series of J_nu(x) truncated after `terms` terms, in any scalar
/// type with the usual math overloads. No error control.
template <class T>
T bessel_j_series(HalfIntOrder nu, const T& x, int terms) {
  using std::pow;
  using std::sqrt;
  const T half_x = x / 2;
  const T order = T(nu.twice_nu()) / 2;
  // Gamma(nu + 1) = sqrt(pi) * prod_{i=1}^{nu+1/2} (i - 1/2)
  T gamma = sqrt(boost::math::constants::pi<T>());
  for (int i = 1; 2 * i <= nu.twice_nu() + 1; ++i) gamma *= T(2 * i - 1) / 2;
  T term = pow(half_x, order) / gamma;
  T sum = 0;
  const T q = half_x * half_x;
  for (int j = 0; j < terms; ++j) {
    sum += term;
    term *= -q / (T(j + 1) * (order + T(j + 1)));
  }
  return sum;
}

/// The majorant (x/2)^nu / Gamma(nu + 1) of |J_nu(x)| for x >= 0.
double bessel_envelope(HalfIntOrder nu, double x);

/// Same majorant rewritten with factorials for nu = (k-1)/2:
/// sqrt(2/pi) (k/2)!/k! 2^(k/2) x^((k-1)/2).
double bessel_envelope_factorial(HalfIntOrder nu, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt for 0 < s <= 60, x > 0.
ValueWithError upper_incomplete_gamma(double s, double x);

}  // namespace hecke::specfun
