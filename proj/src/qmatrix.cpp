#include "qpd/qmatrix.hpp"

#include <cfloat>
#include <cmath>
#include <string>
#include <utility>

#include "qpd/kernels.hpp"

namespace qpd {

QMatrix::QMatrix(int n, std::vector<Quaternion> entries)
    : n_(check_dim(n)), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(n_) * n_)
    throw DimensionError("entry count does not match dimension");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

QMatrix QMatrix::diag(const std::vector<Quaternion>& d) {
  QMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::real_diag(const std::vector<double>& d) {
  QMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = d[i];
  return m;
}

bool QMatrix::all_finite() const {
  for (const Quaternion& q : e_)
    if (!is_finite(q)) return false;
  return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (n_ != o.n_) throw DimensionError("matrix dimensions differ");
  for (std::size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (n_ != o.n_) throw DimensionError("matrix dimensions differ");
  for (std::size_t t = 0; t < e_.size(); ++t) e_[t] -= o.e_[t];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (Quaternion& q : e_) q *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix dimensions differ");
  const int n = a.n_;
  QMatrix c(n);
  const kernels::Table& k = kernels::active();
  for (int i = 0; i < n; ++i) {
    Quaternion* ci = c.row(i);
    for (int l = 0; l < n; ++l) k.axpy_row(ci, a(i, l), b.row(l), n);
  }
  return c;
}

QMatrix dagger(const QMatrix& a) {
  const int n = a.n();
  QMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = conj(a(j, i));
  return c;
}

double re_trace(const QMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a(i, i).w;
  return s;
}

double frob_inner(const QMatrix& x, const QMatrix& y) {
  if (x.n() != y.n()) throw DimensionError("matrix dimensions differ");
  return kernels::active().dot(x.raw(), y.raw(), x.raw_size());
}

double frob_norm(const QMatrix& x) { return std::sqrt(frob_inner(x, x)); }

QMatrix mat_inv(const QMatrix& a) {
  const int n = a.n();
  QMatrix m = a;
  QMatrix inv = QMatrix::identity(n);

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, abs(m(i, j)));
  const double pivot_tol = n * DBL_EPSILON * scale;

  const kernels::Table& k = kernels::active();
  for (int col = 0; col < n; ++col) {
    int p = col;
    double best = abs(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = abs(m(r, col));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best <= pivot_tol)
      throw SingularError("singular matrix: pivot magnitude " + std::to_string(best),
                          best);
    if (p != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    const Quaternion pinv = ::qpd::inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) = pinv * m(col, j);
      inv(col, j) = pinv * inv(col, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Quaternion f = -m(r, col);
      if (f == Quaternion{}) continue;
      k.axpy_row(m.row(r), f, m.row(col), n);
      k.axpy_row(inv.row(r), f, inv.row(col), n);
      m(r, col) = 0.0;  // eliminated exactly
    }
  }
  return inv;
}

QMatrix exp_series(const QMatrix& x) {
  const int n = x.n();
  int squarings = 0;
  double nrm = frob_norm(x);
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++squarings;
  }
  QMatrix y = x * std::ldexp(1.0, -squarings);

  QMatrix acc = QMatrix::identity(n);
  QMatrix term = QMatrix::identity(n);
  for (int m = 1; m < 20; ++m) {
    term = term * y * (1.0 / m);
    acc += term;
  }
  for (int s = 0; s < squarings; ++s) acc = acc * acc;
  return acc;
}

QMatrix symmetrize(const QMatrix& m) {
  const int n = m.n();
  QMatrix r(n);
  for (int i = 0; i < n; ++i) {
    r(i, i) = Quaternion(m(i, i).w, 0.0, 0.0, 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Quaternion avg = (m(i, j) + conj(m(j, i))) * 0.5;
      r(i, j) = avg;
      r(j, i) = conj(avg);
    }
  }
  return r;
}

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kSympTol = 1e-10;

}  // namespace

HermMatrix::HermMatrix(QMatrix m) : m_(std::move(m)) {
  if (!m_.all_finite()) throw DomainError("matrix has non-finite entries");
  const int n = m_.n();
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, abs(m_(i, j)));
  const double tol = kHermTol * scale;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (abs(m_(i, j) - conj(m_(j, i))) > tol)
        throw DomainError("matrix is not Hermitian");
}

SympMatrix::SympMatrix(QMatrix k) : k_(std::move(k)) {
  if (!k_.all_finite()) throw DomainError("matrix has non-finite entries");
  const QMatrix d = k_ * dagger(k_) - QMatrix::identity(k_.n());
  if (frob_norm(d) > kSympTol)
    throw DomainError("matrix is not symplectic: ||K K† - I|| = " +
                      std::to_string(frob_norm(d)));
}

}  // namespace qpd
