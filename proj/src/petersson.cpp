#include "hecke/petersson.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "hecke/kernel.hpp"
#include "hecke/lfunction.hpp"
#include "hecke/ntheory.hpp"
#include "hecke/specfun.hpp"

namespace hecke::petersson {

namespace {

const double kLowestHeight = std::sqrt(3.0) / 2.0;

// Bound on sum_{n > N} |a_n| e^{-2 pi n y} at y = sqrt(3)/2 using
// |a_n| <= 2C d(n) n^{(k-1)/2} <= 4C n^{k/2}.
double truncation_tail(std::span<const double> a, int k) {
  std::vector<double> coeffs(a.begin(), a.end());
  const double c = 2.0 * lfunction::coefficient_bound_constant(coeffs, k);
  if (c == 0.0) return 0.0;
  const int n = static_cast<int>(a.size());  // first omitted index
  const double decay = 2.0 * kPi * kLowestHeight;
  auto term = [&](int m) {
    return std::exp(std::log(2.0 * c) + 0.5 * k * std::log(static_cast<double>(m)) - decay * m);
  };
  const double ratio = std::pow(static_cast<double>(n + 1) / n, 0.5 * k) * std::exp(-decay);
  if (ratio >= 1.0) throw PrecisionError("petersson: too few coefficients for the q-decay check");
  return term(n) / (1.0 - ratio);
}

// sup of |f| over the domain, attained in bound at the lowest height
double sup_bound(std::span<const double> a, double tail) {
  double s = tail;
  for (std::size_t n = 1; n < a.size(); ++n) {
    s += std::abs(a[n]) * std::exp(-2.0 * kPi * n * kLowestHeight);
  }
  return s;
}

struct Integrand {
  std::span<const double> a;
  std::span<const double> b;
  int k;

  double operator()(double x, double y) const {
    const std::complex<double> q = std::polar(std::exp(-2.0 * kPi * y), 2.0 * kPi * x);
    std::complex<double> fa = 0.0, fb = 0.0, qn = 1.0;
    const std::size_t n_max = std::max(a.size(), b.size());
    for (std::size_t n = 1; n < n_max; ++n) {
      qn *= q;
      if (n < a.size()) fa += a[n] * qn;
      if (n < b.size()) fb += b[n] * qn;
    }
    return std::real(fa * std::conj(fb)) * std::pow(y, k - 2);
  }
};

struct Estimate {
  double value;
  double abs_value;
};

Estimate integrate(const Integrand& h, int nx, int ny, double y_cutoff) {
  const auto [xt, xw] = gauss_legendre(nx);
  const auto [yt, yw] = gauss_legendre(ny);
  double total = 0.0, abs_total = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = 0.5 * xt(i);
    const double wx = 0.5 * xw(i);
    const double floor_y = std::sqrt(1.0 - x * x);
    double column = 0.0, abs_column = 0.0;
    // arc piece: floor_y <= y <= 1
    const double arc_half = 0.5 * (1.0 - floor_y);
    for (int j = 0; j < ny; ++j) {
      const double y = floor_y + arc_half * (yt(j) + 1.0);
      const double v = yw(j) * arc_half * h(x, y);
      column += v;
      abs_column += std::abs(v);
    }
    // box piece: 1 <= y <= y_cutoff
    const double box_half = 0.5 * (y_cutoff - 1.0);
    for (int j = 0; j < ny; ++j) {
      const double y = 1.0 + box_half * (yt(j) + 1.0);
      const double v = yw(j) * box_half * h(x, y);
      column += v;
      abs_column += std::abs(v);
    }
    total += wx * column;
    abs_total += wx * abs_column;
  }
  return {total, abs_total};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (x_nodes < 8 || y_nodes < 8) throw DomainError("quadrature needs at least 8 nodes per axis");
  if (!(y_cutoff >= 3.0)) throw DomainError("quadrature y_cutoff must be at least 3");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double beta = i / std::sqrt(4.0 * i * i - 1.0);
    jacobi(i, i - 1) = beta;
    jacobi(i - 1, i) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Eigen::VectorXd nodes = solver.eigenvalues();
  Eigen::VectorXd weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  return {nodes, weights};
}

ValueWithError inner_product(std::span<const double> a, std::span<const double> b, int k,
                             const QuadratureSpec& spec) {
  spec.validate();
  if (k < 2 || k % 2 != 0) throw DomainError("inner_product: weight must be even");
  if (a.size() < 2 || b.size() < 2) throw DomainError("inner_product: empty coefficient vector");

  const double tail_a = truncation_tail(a, k);
  const double tail_b = truncation_tail(b, k);
  if (tail_a >= 1e-12 || tail_b >= 1e-12) {
    throw PrecisionError("petersson: q-expansion truncation error at y = sqrt(3)/2 exceeds 1e-12");
  }

  const Integrand h{a, b, k};
  const Estimate fine = integrate(h, spec.x_nodes, spec.y_nodes, spec.y_cutoff);
  const Estimate coarse = integrate(h, spec.x_nodes / 2, spec.y_nodes / 2, spec.y_cutoff);
  const double quadrature_err = std::abs(fine.value - coarse.value);

  // Above y_cutoff only the diagonal survives the x-integration:
  //   sum_n a_n b_n (4 pi n)^{1-k} Gamma(k-1, 4 pi n Y).
  double cusp_tail = 0.0;
  const std::size_t n_common = std::min(a.size(), b.size());
  for (std::size_t n = 1; n < n_common; ++n) {
    const double x = 4.0 * kPi * n * spec.y_cutoff;
    const ValueWithError g = specfun::upper_incomplete_gamma(k - 1.0, x);
    cusp_tail += std::abs(a[n] * b[n]) * std::pow(4.0 * kPi * n, 1.0 - k) * (g.value + g.abs_err);
  }

  // Truncated q-series: |f g - f_N g_N| <= tail_a |g| + tail_b |f| + tail_a tail_b,
  // each tail decaying like e^{-2 pi (N+1)(y - y0)} above y0 = sqrt(3)/2.
  const double sup_a = sup_bound(a, tail_a);
  const double sup_b = sup_bound(b, tail_b);
  const double decay = 2.0 * kPi * static_cast<double>(std::min(a.size(), b.size())) -
                       (k - 2) / kLowestHeight;
  if (decay <= 0.0) throw PrecisionError("petersson: too few coefficients for this weight");
  const double truncation_err = (tail_a * sup_b + tail_b * sup_a + tail_a * tail_b) *
                                std::pow(kLowestHeight, k - 2) / decay;

  const double rounding = 64.0 * kMachineEps * fine.abs_value;
  return {fine.value, quadrature_err + cusp_tail + truncation_err + rounding};
}

ValueWithError inner_product(const Eigenform& f, const Eigenform& g, const QuadratureSpec& spec) {
  if (f.weight != g.weight) throw DomainError("inner_product: forms of different weight");
  const std::vector<double> a = f.coefficients_double();
  const std::vector<double> b = g.coefficients_double();
  return inner_product(a, b, f.weight, spec);
}

ValueWithError petersson_norm_sq(const Eigenform& f, int k, const QuadratureSpec& spec) {
  if (k != f.weight) {
    throw DomainError("petersson_norm_sq: weight " + std::to_string(k) +
                      " does not match the form's weight " + std::to_string(f.weight));
  }
  return inner_product(f, f, spec);
}

TriangleResult triangle_check(int k, double eps, const QuadratureSpec& spec) {
  if (k % 4 != 0 || k < 12 || k > 28) {
    throw DomainError("triangle_check: weight must satisfy k = 0 mod 4, 12 <= k <= 28, got " +
                      std::to_string(k));
  }
  TriangleResult out;
  out.k = k;
  out.lhs = kernel::r_k(k, 1, eps).value;
  out.unfolded_lhs = kernel::r_k_unfolded(k, 1, eps).value;

  ValueWithError rhs{0.0, 0.0};
  for (const auto& cv : lfunction::central_values(k, eps)) {
    const ValueWithError norm = petersson_norm_sq(cv.form, k, spec);
    rhs = rhs + cv.value / norm;
    ++out.forms;
  }
  out.rhs = rhs;
  out.ratio = out.lhs.value / rhs.value;
  out.unfolded_ratio = out.unfolded_lhs.value / rhs.value;
  return out;
}

}  // namespace hecke::petersson
