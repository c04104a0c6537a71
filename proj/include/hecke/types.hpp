#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace hecke {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// 50 decimal digits; used wherever exact data crosses into floating point.
using Real = boost::multiprecision::cpp_bin_float_50;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

/// Precondition on the mathematical input was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested accuracy cannot be delivered with the available data.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is valid but outside what the algorithms handle (e.g. a repeated
/// Hecke eigenvalue).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A real number together with a rigorous bound on its absolute error: the
/// true quantity lies in [value - abs_err, value + abs_err].
struct ValueWithError {
  double value = 0.0;
  double abs_err = 0.0;

  double lower() const { return value - abs_err; }
  double upper() const { return value + abs_err; }
  bool contains(double x) const { return std::abs(x - value) <= abs_err; }
  bool excludes_zero() const { return std::abs(value) > abs_err; }
};

inline ValueWithError operator+(ValueWithError a, ValueWithError b) {
  const double v = a.value + b.value;
  return {v, a.abs_err + b.abs_err + kMachineEps * std::abs(v)};
}

inline ValueWithError operator-(ValueWithError a, ValueWithError b) {
  const double v = a.value - b.value;
  return {v, a.abs_err + b.abs_err + kMachineEps * std::abs(v)};
}

inline ValueWithError operator*(double s, ValueWithError a) {
  const double v = s * a.value;
  return {v, std::abs(s) * a.abs_err + kMachineEps * std::abs(v)};
}

/// First-order quotient bound; requires |b| > b.abs_err.
ValueWithError operator/(ValueWithError a, ValueWithError b);

}  // namespace hecke
