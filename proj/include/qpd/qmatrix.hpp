#pragma once

#include <cstddef>
#include <vector>

#include "qpd/errors.hpp"
#include "qpd/quaternion.hpp"

namespace qpd {

// Square matrix over the quaternions, row-major storage.
class QMatrix {
public:
  QMatrix() = default;
  explicit QMatrix(int n) : n_(check_dim(n)), e_(static_cast<std::size_t>(n) * n) {}
  QMatrix(int n, std::vector<Quaternion> entries);

  static QMatrix identity(int n);
  static QMatrix diag(const std::vector<Quaternion>& d);
  static QMatrix real_diag(const std::vector<double>& d);

  int n() const { return n_; }

  Quaternion& operator()(int i, int j) { return e_[idx(i, j)]; }
  const Quaternion& operator()(int i, int j) const { return e_[idx(i, j)]; }

  Quaternion* row(int i) { return e_.data() + static_cast<std::size_t>(i) * n_; }
  const Quaternion* row(int i) const {
    return e_.data() + static_cast<std::size_t>(i) * n_;
  }

  const Quaternion* data() const { return e_.data(); }
  // The entries viewed as 4*n*n packed doubles.
  const double* raw() const { return &e_.data()->w; }
  std::size_t raw_size() const { return e_.size() * 4; }

  bool all_finite() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, double s) { return a *= s; }
  friend QMatrix operator*(double s, QMatrix a) { return a *= s; }

  // C_ij = sum_l A_il B_lj with quaternion products taken left-to-right.
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

private:
  static int check_dim(int n) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
    return n;
  }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<Quaternion> e_;
};

static_assert(sizeof(Quaternion) == 4 * sizeof(double));

// Conjugate-transpose.
QMatrix dagger(const QMatrix& a);

// Gauss-Jordan elimination with partial pivoting directly over the
// quaternions (a division ring, so row reduction is legitimate).
// Throws SingularError when a pivot falls below n*eps*max|entry|.
QMatrix mat_inv(const QMatrix& a);

double re_trace(const QMatrix& a);

// <X|Y> = Re tr(X Y†), the Sp(n)-invariant scalar product. Reduces to the
// plain dot product of the packed components.
double frob_inner(const QMatrix& x, const QMatrix& y);

double frob_norm(const QMatrix& x);

// exp(X) by scaling-and-squaring on the power series (20 terms after
// scaling to norm <= 1/2). Test-grade; for Hermitian input prefer the
// spectral route in spectral.hpp.
QMatrix exp_series(const QMatrix& x);

// (M + M†)/2 written so conjugate pairs match exactly.
QMatrix symmetrize(const QMatrix& m);

// Hermitian matrix: M = M† within 1e-12 of the largest entry norm.
class HermMatrix {
public:
  explicit HermMatrix(QMatrix m);
  const QMatrix& matrix() const { return m_; }
  int n() const { return m_.n(); }

private:
  QMatrix m_;
};

// Element of Sp(n): K K† = I within 1e-10 (Frobenius).
class SympMatrix {
public:
  explicit SympMatrix(QMatrix k);
  const QMatrix& matrix() const { return k_; }
  int n() const { return k_.n(); }

private:
  QMatrix k_;
};

}  // namespace qpd
