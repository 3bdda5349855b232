#pragma once

#include <vector>

#include "qpd/spectral.hpp"

namespace qpd {

// Positive-definite Hermitian quaternion matrix, the points of the
// manifold. Eigendecomposed once at construction; admission requires the
// smallest eigenvalue to exceed 1e-12 times the largest (inputs below
// that are rejected, never regularized).
class SpdMatrix {
public:
  explicit SpdMatrix(const HermMatrix& s);
  explicit SpdMatrix(const QMatrix& s) : SpdMatrix(HermMatrix(s)) {}

  const QMatrix& matrix() const { return m_; }
  const EigDecomp& eig() const { return eig_; }
  int n() const { return m_.n(); }

  QMatrix sqrt() const;
  QMatrix inv_sqrt() const;
  QMatrix inverse() const;
  QMatrix log() const;

private:
  QMatrix m_;
  EigDecomp eig_;
};

// Tangent vector at a base point; the tangent space is identified with
// the Hermitian matrices.
struct Tangent {
  SpdMatrix base;
  HermMatrix vec;
};

struct PolarCoords {
  std::vector<double> r;  // ascending when produced by to_polar
  SympMatrix k;
};

// Group action A.S = A S A†. Singular A surfaces as a positive-definiteness
// rejection of the result.
SpdMatrix act(const QMatrix& a, const SpdMatrix& s);

// (u, v)_S = Re tr(S^-1 u S^-1 v)
double metric_at(const SpdMatrix& s, const HermMatrix& u, const HermMatrix& v);
// Checked variant: both tangents must be based at s (entrywise equality).
double metric_at(const SpdMatrix& s, const Tangent& u, const Tangent& v);

PolarCoords to_polar(const SpdMatrix& s);
SpdMatrix from_polar(const PolarCoords& p);

// gamma(t) = S^{1/2} (S^{-1/2} Q S^{-1/2})^t S^{1/2}; gamma(0) = S,
// gamma(1) = Q. t outside [0,1] extends the geodesic (the manifold is
// complete).
SpdMatrix geodesic(const SpdMatrix& s, const SpdMatrix& q, double t);

// d(S,Q) = || log(S^{-1/2} Q S^{-1/2}) || in the Frobenius norm.
double distance(const SpdMatrix& s, const SpdMatrix& q);

// Exp_S(u) = S^{1/2} exp(S^{-1/2} u S^{-1/2}) S^{1/2} and its inverse.
SpdMatrix exp_map(const SpdMatrix& s, const HermMatrix& u);
Tangent log_map(const SpdMatrix& s, const SpdMatrix& q);

// Squared length of the velocity of t -> exp(tX) diag(e^{r_i + t dr_i})
// exp(tX)† at t = 0, in closed form:
//   sum_i dr_i^2 + 8 sum_{i<j} sinh^2(|r_i - r_j|/2) |X_ij|^2.
// X must be skew (X + X† = 0).
double polar_length_element(const std::vector<double>& r,
                            const std::vector<double>& dr, const QMatrix& x);

}  // namespace qpd
