#pragma once

#include <vector>

#include "hecke/qexpansion.hpp"
#include "hecke/types.hpp"

namespace hecke::lfunction {

/// Lambda(f, s) = (2 pi)^{-s} Gamma(s) L(f, s) and L(f, s) at a real point.
struct LValue {
  int k = 0;
  double s = 0.0;
  ValueWithError completed;
  ValueWithError finite;
  int terms_used = 0;
};

/// Coefficients used for L-values unless a caller asks for more.
inline constexpr int kDefaultCoefficients = 48;

/// Smallest coefficient count accepted by completed_l.
inline constexpr int kMinCoefficients = 30;

/// Largest |a_n| / (d(n) n^{(k-1)/2}) over the carried coefficients.
double coefficient_bound_constant(const std::vector<double>& a, int k);

/// Lambda(f, s) for k/2 - 2 <= s <= k/2 + 2 from the Mellin integral split
/// at t = 1:
///   sum_n a_n [(2 pi n)^{-s} Gamma(s, 2 pi n) + (-1)^{k/2} (2 pi n)^{s-k} Gamma(k-s, 2 pi n)].
LValue completed_l(const Eigenform& f, double s, double eps = 1e-10);

/// |Lambda(f, s) - (-1)^{k/2} Lambda(f, k - s)|.
double functional_equation_residual(const Eigenform& f, double s);

struct CentralValue {
  Eigenform form;
  ValueWithError value;  // L(f, k/2)
};

/// L(f, k/2) for every normalized eigenform of weight k.
std::vector<CentralValue> central_values(int k, double eps = 1e-10);

}  // namespace hecke::lfunction
