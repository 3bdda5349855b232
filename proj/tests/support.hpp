#pragma once

// Shared generators and oracles for the test suites. The matrix product
// here is an independent triple loop over quaternion scalars, never the
// kernel path it is used to check.

#include <cmath>
#include <vector>

#include "qpd/gaussian.hpp"
#include "qpd/manifold.hpp"
#include "qpd/qmatrix.hpp"
#include "qpd/rng.hpp"
#include "qpd/spectral.hpp"

namespace qpd::test {

inline Quaternion random_quaternion(Rng& rng) {
  return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

inline QMatrix random_qmatrix(int n, Rng& rng) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_quaternion(rng);
  return m;
}

inline HermMatrix random_hermitian(int n, Rng& rng) {
  return HermMatrix(symmetrize(random_qmatrix(n, rng)));
}

// Entries of X with X + X† = 0: imaginary diagonal, conjugate-negated
// off-diagonal pairs.
inline QMatrix random_skew(int n, Rng& rng) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = Quaternion(0.0, rng.normal(), rng.normal(), rng.normal());
    for (int j = i + 1; j < n; ++j) {
      const Quaternion q = random_quaternion(rng);
      m(i, j) = q;
      m(j, i) = -conj(q);
    }
  }
  return m;
}

// exp of a scaled random Hermitian: positive-definite with moderate
// condition number.
inline SpdMatrix random_spd(int n, Rng& rng, double spread = 0.7) {
  return SpdMatrix(herm_exp(HermMatrix(symmetrize(random_qmatrix(n, rng)) * spread)));
}

// K1 diag(e^u) K2 with u in [-0.6, 0.6]: invertible with condition
// number at most ~e^1.2.
inline QMatrix random_well_conditioned(int n, Rng& rng) {
  const SympMatrix k1 = sample_uniform_sp(n, rng);
  const SympMatrix k2 = sample_uniform_sp(n, rng);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::exp(1.2 * (rng.uniform() - 0.5));
  return k1.matrix() * QMatrix::real_diag(d) * k2.matrix();
}

// Reference product: plain triple loop over quaternion scalars.
inline QMatrix naive_mat_mul(const QMatrix& a, const QMatrix& b) {
  const int n = a.n();
  QMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Quaternion s;
      for (int l = 0; l < n; ++l) s += a(i, l) * b(l, j);
      c(i, j) = s;
    }
  return c;
}

inline double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m = std::max(m, abs(a(i, j) - b(i, j)));
  return m;
}

inline double rel_frob_err(const QMatrix& got, const QMatrix& want) {
  return frob_norm(got - want) / std::max(frob_norm(want), 1e-300);
}

struct MeanStderr {
  double mean;
  double stderr_;
};

inline MeanStderr mean_stderr(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= xs.size();
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  v /= (xs.size() - 1);
  return {m, std::sqrt(v / xs.size())};
}

}  // namespace qpd::test
