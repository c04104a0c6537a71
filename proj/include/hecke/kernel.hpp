#pragma once

#include "hecke/ntheory.hpp"
#include "hecke/types.hpp"

namespace hecke::kernel {

/// A real number stored as sign * exp(log_abs).
struct SignedLog {
  int sign = 1;
  double log_abs = 0.0;

  double value() const { return sign * std::exp(log_abs); }
};

/// The normalizing constant (-1)^{k/4} (8 pi)^{k/2-1} (k/2-1)! / (k-2)! of
/// the kernel R_k.
SignedLog c_k(int k);

/// One Fourier coefficient r_k(n) of the kernel, written as
/// exp(log_prefactor) * rho with rho the normalized bracket
///   1 + (-1)^{k/4} sqrt(2 pi) sum_m gamma_n(m) sqrt(n pi/m) J_{(k-1)/2}(n pi/m).
struct KernelCoefficient {
  int k = 0;
  int n = 0;
  ValueWithError rho;
  double log_prefactor = 0.0;
  ValueWithError value;
  int terms_used = 0;
  /// Certified bound on the omitted terms m > terms_used.
  double tail_bound = 0.0;
};

/// Bound on sum_{m > truncation} of the bracket terms, from |gamma_n(m)| <=
/// d(m) <= 2 sqrt(m) and |J_nu(x)| <= (x/2)^nu / Gamma(nu + 1):
///   A * M^{(3-k)/2} / ((k-3)/2),  A = 2 sqrt(2 pi) sqrt(n pi) (n pi/2)^nu / Gamma(nu+1).
double tail_bound(int k, int n, int truncation);

/// sum_{m=1}^{terms} sqrt(2 pi) gamma_n(m) sqrt(n pi/m) J_{(k-1)/2}(n pi/m),
/// with abs_err covering Bessel and rounding errors (not the tail).
ValueWithError partial_bracket_sum(int k, int n, int terms,
                                   ntheory::PhaseConvention convention =
                                       ntheory::PhaseConvention::ReducedInverse);

/// r_k(n) with |rho - true rho| <= rho.abs_err < eps, for k = 0 mod 4,
/// 12 <= k <= 40.
KernelCoefficient r_k(int k, int n, double eps);

/// The coefficient obtained by unfolding the sum over SL_2(Z) term by term:
/// prefactor 4 (2 pi)^{k/2} (8 pi)^{k/2-1} n^{k/2-1} / (k-2)! and phases
/// from unimodular representatives. Reported next to r_k for diagnostics.
KernelCoefficient r_k_unfolded(int k, int n, double eps);

/// 2 (2 pi)^{k/2} ((k/2)!/k!) zeta(k/2)^2.
double per_k_bound(int k);

/// 2 (2 pi/7) (2 pi/8)^5 zeta(6)^2.
double global_bound();

/// The chain of estimates leading from a given weight to the global bound.
struct BoundChain {
  int k = 0;
  /// (2 pi)^{k/2} (k/2)!/k!
  double factorial_factor = 0.0;
  /// (2 pi/(k/2+1)) (2 pi/(k/2+2))^{k/2-1}
  double factorial_majorant = 0.0;
  /// (2 pi/7) (2 pi/8)^5
  double weight_free_majorant = 0.0;
  double zeta_half_k_sq = 0.0;
  double zeta_6_sq = 0.0;
  double per_k = 0.0;
  double global = 0.0;
};

BoundChain bound_chain(int k);

enum class Sign { Negative = -1, Undetermined = 0, Positive = 1 };

struct Certificate {
  int k = 0;
  ValueWithError rho;
  double per_k_bound = 0.0;
  double global_bound = 0.0;
  bool nonvanishing = false;
  Sign sign = Sign::Undetermined;
};

/// Certifies r_k(1) != 0 (equivalently L(f_k, k/2) != 0).
Certificate certify(int k, double eps);

}  // namespace hecke::kernel
