#include "hecke/qexpansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hecke/ntheory.hpp"

namespace hecke {

QExpansion::QExpansion(int weight, std::vector<Rational> coeffs)
    : weight_(weight), coeffs_(std::move(coeffs)) {
  if (weight < 0 || weight % 2 != 0) {
    throw DomainError("q-expansion weight must be even and non-negative");
  }
}

QExpansion QExpansion::one(int prec) {
  std::vector<Rational> c(std::max(prec, 0));
  if (prec > 0) c[0] = 1;
  return QExpansion(0, std::move(c));
}

QExpansion operator*(const QExpansion& f, const QExpansion& g) {
  const int prec = std::min(f.prec(), g.prec());
  std::vector<Rational> c(prec);
  for (int i = 0; i < prec; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j < prec; ++j) {
      if (g[j] != 0) c[i + j] += f[i] * g[j];
    }
  }
  return QExpansion(f.weight() + g.weight(), std::move(c));
}

QExpansion operator*(const Rational& s, const QExpansion& f) {
  std::vector<Rational> c(f.coeffs());
  for (auto& x : c) x *= s;
  return QExpansion(f.weight(), std::move(c));
}

namespace {

QExpansion combine(const QExpansion& f, const QExpansion& g, int sign) {
  if (f.weight() != g.weight()) throw DomainError("adding q-expansions of different weight");
  const int prec = std::min(f.prec(), g.prec());
  std::vector<Rational> c(prec);
  for (int i = 0; i < prec; ++i) c[i] = sign > 0 ? Rational(f[i] + g[i]) : Rational(f[i] - g[i]);
  return QExpansion(f.weight(), std::move(c));
}

}  // namespace

QExpansion operator+(const QExpansion& f, const QExpansion& g) { return combine(f, g, +1); }
QExpansion operator-(const QExpansion& f, const QExpansion& g) { return combine(f, g, -1); }

QExpansion pow(const QExpansion& f, int e) {
  if (e < 0) throw DomainError("negative power of a q-expansion");
  QExpansion result = QExpansion::one(f.prec());
  for (int i = 0; i < e; ++i) result = result * f;
  return result;
}

QExpansion truncate(const QExpansion& f, int prec) {
  std::vector<Rational> c(f.coeffs().begin(),
                          f.coeffs().begin() + std::clamp(prec, 0, f.prec()));
  return QExpansion(f.weight(), std::move(c));
}

QExpansion eisenstein(int k, int prec) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("eisenstein: weight must be even and >= 4, got " + std::to_string(k));
  }
  if (prec < 1) throw DomainError("eisenstein: prec must be positive");
  const Rational scale = -Rational(2 * k) / ntheory::bernoulli(k);
  std::vector<Rational> c(prec);
  c[0] = 1;
  for (int n = 1; n < prec; ++n) c[n] = scale * Rational(ntheory::divisor_sigma(n, k - 1));
  return QExpansion(k, std::move(c));
}

QExpansion delta(int prec) {
  if (prec < 1) throw DomainError("delta: prec must be positive");
  const QExpansion e4 = eisenstein(4, prec);
  const QExpansion e6 = eisenstein(6, prec);
  return Rational(1, 1728) * (pow(e4, 3) - e6 * e6);
}

int dim_cusp(int k) {
  if (k < 0 || k % 2 != 0) {
    throw DomainError("dim_cusp: weight must be even and non-negative, got " + std::to_string(k));
  }
  if (k % 12 == 2) return std::max(k / 12 - 1, 0);
  return k / 12;
}

std::vector<QExpansion> miller_basis(int k, int prec) {
  const int d = dim_cusp(k);
  if (d == 0) return {};
  if (prec <= d) {
    throw PrecisionError("miller_basis: prec " + std::to_string(prec) + " must exceed dim S_" +
                         std::to_string(k) + " = " + std::to_string(d));
  }
  const QExpansion e4 = eisenstein(4, prec);
  const QExpansion e6 = eisenstein(6, prec);
  const QExpansion dl = delta(prec);

  // Delta^j E4^a E6^b = q^j + O(q^{j+1}) for j = 1..d
  std::vector<QExpansion> basis;
  for (int j = 1; j <= d; ++j) {
    const int rest = k - 12 * j;
    const int b = (rest % 4 == 0) ? 0 : 1;
    const int a = (rest - 6 * b) / 4;
    basis.push_back(pow(dl, j) * pow(e4, a) * pow(e6, b));
  }
  for (int i = d - 1; i >= 0; --i) {
    for (int j = i + 1; j < d; ++j) {
      const Rational c = basis[i][j + 1];
      if (c != 0) basis[i] = basis[i] - c * basis[j];
    }
  }
  return basis;
}

QExpansion hecke_operator(const QExpansion& f, int n) {
  if (n < 1) throw DomainError("hecke_operator: n must be positive");
  const int k = f.weight();
  const int prec = (f.prec() - 1) / n + 1;
  std::vector<Rational> c(prec);
  for (int m = 0; m < prec; ++m) {
    if (m == 0) {
      // sum over d | n of d^{k-1} a(0)
      Rational s = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d == 0) s += Rational(boost::multiprecision::pow(BigInt(d), k - 1));
      }
      c[0] = s * f[0];
      continue;
    }
    const int g = std::gcd(m, n);
    Rational s = 0;
    for (int d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      s += Rational(boost::multiprecision::pow(BigInt(d), k - 1)) * f[m * n / (d * d)];
    }
    c[m] = s;
  }
  return QExpansion(k, std::move(c));
}

namespace {

Matrix<Rational> hecke_matrix_on(const std::vector<QExpansion>& basis, int n) {
  const int d = static_cast<int>(basis.size());
  Matrix<Rational> t(d, d);
  for (int j = 0; j < d; ++j) {
    const QExpansion image = hecke_operator(basis[j], n);
    for (int i = 0; i < d; ++i) t(i, j) = image[i + 1];
  }
  return t;
}

}  // namespace

Matrix<Rational> hecke_matrix(int k, int n, int prec) {
  if (n < 1) throw DomainError("hecke_matrix: n must be positive");
  const int d = dim_cusp(k);
  if (prec < n * d + 1) {
    throw PrecisionError("hecke_matrix: T_" + std::to_string(n) + " on S_" + std::to_string(k) +
                         " needs prec >= " + std::to_string(n * d + 1) + ", got " +
                         std::to_string(prec));
  }
  return hecke_matrix_on(miller_basis(k, prec), n);
}

std::vector<Rational> char_poly(const Matrix<Rational>& a) {
  // Faddeev-LeVerrier
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix<Rational> m = Matrix<Rational>::Zero(n, n);
  const Matrix<Rational> id = Matrix<Rational>::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    const Matrix<Rational> am = a * m;
    c[n - k] = -am.trace() / Rational(k);
  }
  return c;
}

std::vector<double> Eigenform::coefficients_double() const {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<double>(a[i]);
  return out;
}

namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d(std::max<std::size_t>(p.size(), 2) - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
  trim(d);
  return d;
}

bool is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly remainder(Poly num, const Poly& den) {
  trim(num);
  while (!is_zero(num) && num.size() >= den.size()) {
    const Rational q = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    num.pop_back();
    if (num.empty()) num.push_back(0);
    trim(num);
  }
  return num;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!is_zero(seq.back()) && seq.back().size() > 1) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& x : r) x = -x;
    seq.push_back(r);
  }
  if (is_zero(seq.back())) seq.pop_back();
  return seq;
}

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

Real eval(const std::vector<Real>& p, const Real& x) {
  Real v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

int sign_changes(const std::vector<std::vector<Real>>& seq, const Real& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const Real v = eval(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate(const std::vector<std::vector<Real>>& seq, Real lo, Real hi, std::vector<Real>& roots) {
  const int count = sign_changes(seq, lo) - sign_changes(seq, hi);
  if (count <= 0) return;
  if (count == 1) {
    const auto& p = seq.front();
    int s_lo = eval(p, lo) > 0 ? 1 : -1;
    for (int it = 0; it < 400 && hi - lo > abs(hi) * Real(1e-48) + Real(1e-60); ++it) {
      const Real mid = (lo + hi) / 2;
      const Real v = eval(p, mid);
      if (v == 0) {
        lo = hi = mid;
        break;
      }
      if ((v > 0 ? 1 : -1) == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back((lo + hi) / 2);
    return;
  }
  const Real mid = (lo + hi) / 2;
  isolate(seq, lo, mid, roots);
  isolate(seq, mid, hi, roots);
}

}  // namespace

std::vector<Eigenform> eigenforms(int k, int n_coeffs) {
  if (k < 12 || k % 2 != 0) {
    throw DomainError("eigenforms: weight must be even and >= 12, got " + std::to_string(k));
  }
  if (n_coeffs < 1) throw DomainError("eigenforms: need at least one coefficient");
  const int d = dim_cusp(k);
  if (d == 0) return {};
  const int prec = std::max(n_coeffs + 1, 2 * d + 1);
  const std::vector<QExpansion> basis = miller_basis(k, prec);
  const Matrix<Rational> t2 = hecke_matrix_on(basis, 2);
  const Poly poly = char_poly(t2);

  const std::vector<Poly> sturm = sturm_sequence(poly);
  std::vector<std::vector<Real>> sturm_real;
  for (const auto& p : sturm) {
    std::vector<Real> pr;
    for (const auto& c : p) pr.push_back(to_real(c));
    sturm_real.push_back(std::move(pr));
  }
  // Cauchy bound on the roots of the monic char poly
  Real bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, Real(abs(to_real(poly[i]))));
  bound += 1;
  std::vector<Real> roots;
  isolate(sturm_real, -bound, bound, roots);
  if (static_cast<int>(roots.size()) != d) {
    throw UnsupportedError("eigenforms: T_2 on S_" + std::to_string(k) +
                           " has repeated or non-real eigenvalues");
  }
  std::sort(roots.begin(), roots.end());

  // Integer eigenvalues span one-dimensional fields; the remaining factor has
  // no rational root and is irreducible when its degree is at most 3.
  int integer_roots = 0;
  std::vector<bool> root_is_integer(d, false);
  for (int r = 0; r < d; ++r) {
    const Rational candidate(static_cast<long long>(boost::multiprecision::round(roots[r])));
    Rational v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * candidate + *it;
    if (v == 0) {
      root_is_integer[r] = true;
      ++integer_roots;
    }
  }

  Matrix<Real> t2_real(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) t2_real(i, j) = to_real(t2(i, j));
  }

  std::vector<Eigenform> forms;
  for (int r = 0; r < d; ++r) {
    // (T - lambda) x = 0 with x_1 = 1, as an overdetermined consistent system
    Matrix<Real> sys = Matrix<Real>::Zero(d + 1, d);
    sys.topRows(d) = t2_real - roots[r] * Matrix<Real>::Identity(d, d);
    sys(d, 0) = 1;
    Vector<Real> rhs = Vector<Real>::Zero(d + 1);
    rhs(d) = 1;
    const Vector<Real> x = sys.colPivHouseholderQr().solve(rhs);

    Eigenform f;
    f.weight = k;
    f.coefficient_field_degree = root_is_integer[r] ? 1 : d - integer_roots;
    f.a.assign(n_coeffs + 1, Real(0));
    for (int n = 1; n <= n_coeffs; ++n) {
      Real s = 0;
      for (int j = 0; j < d; ++j) s += x(j) * to_real(basis[j][n]);
      f.a[n] = s;
    }
    f.a[1] = 1;
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace hecke
