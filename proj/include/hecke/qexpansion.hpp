#pragma once

#include <vector>

#include "hecke/types.hpp"

namespace hecke {

/// Truncated q-series c_0 + c_1 q + ... + c_{prec-1} q^{prec-1} with exact
/// rational coefficients, tagged with its modular weight.
class QExpansion {
 public:
  QExpansion(int weight, std::vector<Rational> coeffs);

  /// The constant series 1 of weight 0.
  static QExpansion one(int prec);

  int weight() const { return weight_; }
  int prec() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_cusp() const { return coeffs_.empty() || coeffs_[0] == 0; }

 private:
  int weight_;
  std::vector<Rational> coeffs_;
};

QExpansion operator*(const QExpansion& f, const QExpansion& g);
QExpansion operator*(const Rational& s, const QExpansion& f);
QExpansion operator+(const QExpansion& f, const QExpansion& g);
QExpansion operator-(const QExpansion& f, const QExpansion& g);
QExpansion pow(const QExpansion& f, int e);
QExpansion truncate(const QExpansion& f, int prec);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QExpansion eisenstein(int k, int prec);

/// Delta = (E_4^3 - E_6^2)/1728.
QExpansion delta(int prec);

/// dim S_k(SL_2(Z)) for even k >= 0.
int dim_cusp(int k);

/// Echelon basis g_i = q^i + O(q^{d+1}), i = 1..d, of S_k.
std::vector<QExpansion> miller_basis(int k, int prec);

/// T_n f for a level-one form of weight k; the result keeps the
/// coefficients fully determined by f, i.e. prec (f.prec - 1)/n + 1.
QExpansion hecke_operator(const QExpansion& f, int n);

/// Matrix of T_n on the Miller basis: column j holds the first d
/// coefficients (q^1..q^d) of T_n g_j. Needs prec >= n*d + 1.
Matrix<Rational> hecke_matrix(int k, int n, int prec);

/// Coefficients (constant term first) of det(x I - A), monic.
std::vector<Rational> char_poly(const Matrix<Rational>& a);

/// A normalized Hecke eigenform carried to N coefficients.
struct Eigenform {
  int weight = 0;
  /// a[n] for n = 0..N, a[0] = 0, a[1] = 1.
  std::vector<Real> a;
  /// Degree over Q of the field generated by the T_2 eigenvalue.
  int coefficient_field_degree = 1;

  int size() const { return static_cast<int>(a.size()) - 1; }
  const Real& coefficient(int n) const { return a.at(n); }
  /// Index-aligned double copy (entry 0 is 0).
  std::vector<double> coefficients_double() const;
};

/// All normalized eigenforms of S_k with coefficients a_1..a_N, ordered by
/// increasing a_2.
std::vector<Eigenform> eigenforms(int k, int n_coeffs);

}  // namespace hecke
