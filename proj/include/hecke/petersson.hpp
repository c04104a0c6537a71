#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hecke/qexpansion.hpp"
#include "hecke/types.hpp"

namespace hecke::petersson {

/// Tensor Gauss-Legendre resolution over the fundamental domain, truncated
/// at height y_cutoff.
struct QuadratureSpec {
  int x_nodes = 48;
  int y_nodes = 48;
  double y_cutoff = 8.0;

  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

/// (f, g) = int_F f(tau) conj(g(tau)) y^k dx dy / y^2 for real coefficient
/// vectors a, b (index-aligned, entry 0 ignored), unnormalized measure.
ValueWithError inner_product(std::span<const double> a, std::span<const double> b, int k,
                             const QuadratureSpec& spec = {});

ValueWithError inner_product(const Eigenform& f, const Eigenform& g,
                             const QuadratureSpec& spec = {});

/// ||f||^2 = (f, f).
ValueWithError petersson_norm_sq(const Eigenform& f, int k, const QuadratureSpec& spec = {});

struct TriangleResult {
  int k = 0;
  /// r_k(1) from the kernel series.
  ValueWithError lhs;
  /// sum over eigenforms of L(f, k/2) / ||f||^2.
  ValueWithError rhs;
  double ratio = 0.0;
  /// Unfolded kernel coefficient and its ratio to rhs.
  ValueWithError unfolded_lhs;
  double unfolded_ratio = 0.0;
  int forms = 0;
};

/// Compares the kernel coefficient r_k(1) with sum_f L(f, k/2)/||f||^2.
TriangleResult triangle_check(int k, double eps, const QuadratureSpec& spec = {});

}  // namespace hecke::petersson
