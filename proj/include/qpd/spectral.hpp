#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qpd/qmatrix.hpp"

namespace qpd {

// Writing each entry as q = a + b j with a, b complex, A = A1 + A2 j maps
// to the 2n x 2n complex block matrix [[A1, A2], [-conj(A2), conj(A1)]].
// The map is an algebra homomorphism and sends A† to the conjugate
// transpose, so Hermitian quaternion matrices embed as Hermitian complex
// ones; every quaternion eigenvalue shows up twice in the image.
Eigen::MatrixXcd complex_adjoint(const QMatrix& a);

struct EigDecomp {
  std::vector<double> lambda;  // ascending
  SympMatrix k;
};

// Spectral decomposition S = K diag(lambda) K† of a Hermitian quaternion
// matrix. Solves the complex-adjoint image with a standard Hermitian
// eigensolver, pairs the doubled eigenvalues, and maps one complex
// eigenvector w = (w1; w2) per pair back to x = w1 - conj(w2) j; the
// selected quaternion vectors are re-orthonormalized by quaternion
// Gram-Schmidt, falling back to the J-conjugate partner when a candidate
// projects to nothing new. A reconstruction check guards the pairing.
EigDecomp hermitian_eig(const HermMatrix& s);

struct PolarDecomp {
  SympMatrix k;
  HermMatrix p;
};

// Z = K P with P = (Z†Z)^{1/2} positive-definite and K in Sp(n).
PolarDecomp polar_decomp(const QMatrix& z);

// K diag(d) K†, symmetrized.
QMatrix spectral_rebuild(const SympMatrix& k, const std::vector<double>& d);

// Spectral functions f(S) = K f(diag(lambda)) K†. log/sqrt/pow require a
// positive-definite argument.
HermMatrix herm_exp(const HermMatrix& s);
HermMatrix herm_log(const HermMatrix& s);
HermMatrix herm_sqrt(const HermMatrix& s);
HermMatrix herm_pow(const HermMatrix& s, double t);

}  // namespace qpd
