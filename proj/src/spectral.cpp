#include "qpd/spectral.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <string>

namespace qpd {

namespace {

using Cplx = std::complex<double>;

constexpr double kPairRelTol = 1e-8;      // eigenvalue grouping
constexpr double kResidualTol = 1e-10;    // Gram-Schmidt rejection
constexpr double kReconRelTol = 1e-8;     // self-check
constexpr double kSingularRelTol = 1e-12;

// Quaternion column vectors as rows of Quaternion; right-module
// conventions (coefficients multiply from the right).
using QVec = std::vector<Quaternion>;

Quaternion qdot(const QVec& a, const QVec& b) {
  Quaternion s;
  for (std::size_t l = 0; l < a.size(); ++l) s += conj(a[l]) * b[l];
  return s;
}

double vec_norm(const QVec& a) {
  double s = 0.0;
  for (const Quaternion& q : a) s += norm_sq(q);
  return std::sqrt(s);
}

// Complex eigenvector w = (u; v) of the adjoint image maps back to the
// quaternion eigenvector x_l = u_l - conj(v_l) j.
QVec to_quaternion_vec(const Eigen::VectorXcd& w) {
  const int n = static_cast<int>(w.size()) / 2;
  QVec x(n);
  for (int l = 0; l < n; ++l) {
    const Cplx u = w(l);
    const Cplx v = w(n + l);
    x[l] = Quaternion(u.real(), u.imag(), -v.real(), v.imag());
  }
  return x;
}

// Right multiplication by j maps w = (u; v) to (-conj(v); conj(u)); it
// commutes with the adjoint image, so this is another eigenvector of the
// same eigenvalue.
Eigen::VectorXcd j_partner(const Eigen::VectorXcd& w) {
  const int n = static_cast<int>(w.size()) / 2;
  Eigen::VectorXcd p(2 * n);
  for (int l = 0; l < n; ++l) {
    p(l) = -std::conj(w(n + l));
    p(n + l) = std::conj(w(l));
  }
  return p;
}

HermMatrix apply_spectral(const HermMatrix& s, const char* opname, bool need_pd,
                          const std::function<double(double)>& f) {
  const EigDecomp eig = hermitian_eig(s);
  if (need_pd && eig.lambda.front() <= 0.0)
    throw DomainError(std::string(opname) +
                      " requires a positive-definite matrix; offending eigenvalue " +
                      std::to_string(eig.lambda.front()));
  std::vector<double> fv(eig.lambda.size());
  for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = f(eig.lambda[i]);
  return HermMatrix(spectral_rebuild(eig.k, fv));
}

}  // namespace

Eigen::MatrixXcd complex_adjoint(const QMatrix& a) {
  const int n = a.n();
  Eigen::MatrixXcd m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      const Cplx a1(q.w, q.x);
      const Cplx a2(q.y, q.z);
      m(i, j) = a1;
      m(i, n + j) = a2;
      m(n + i, j) = -std::conj(a2);
      m(n + i, n + j) = std::conj(a1);
    }
  }
  return m;
}

QMatrix spectral_rebuild(const SympMatrix& k, const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != k.n())
    throw DimensionError("diagonal length does not match matrix dimension");
  return symmetrize(k.matrix() * QMatrix::real_diag(d) * dagger(k.matrix()));
}

EigDecomp hermitian_eig(const HermMatrix& s) {
  const int n = s.n();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(complex_adjoint(s.matrix()));
  if (solver.info() != Eigen::Success)
    throw InternalError("complex Hermitian eigensolver failed");
  const Eigen::VectorXd vals = solver.eigenvalues();
  const Eigen::MatrixXcd vecs = solver.eigenvectors();

  const double scale = std::max(std::abs(vals(0)), std::abs(vals(2 * n - 1)));
  const double group_tol = kPairRelTol * scale;

  std::vector<double> lambda;
  lambda.reserve(n);
  std::vector<QVec> accepted;
  accepted.reserve(n);

  int begin = 0;
  while (begin < 2 * n) {
    int end = begin + 1;
    while (end < 2 * n && vals(end) - vals(end - 1) <= group_tol) ++end;
    const int size = end - begin;
    if (size % 2 != 0)
      throw InternalError("eigenvalue pairing failure: odd cluster of size " +
                          std::to_string(size));
    const int want = size / 2;

    double mean = 0.0;
    for (int i = begin; i < end; ++i) mean += vals(i);
    mean /= size;

    int got = 0;
    for (int i = begin; i < end && got < want; ++i) {
      for (int variant = 0; variant < 2 && got < want; ++variant) {
        const Eigen::VectorXcd w =
            variant == 0 ? Eigen::VectorXcd(vecs.col(i)) : j_partner(vecs.col(i));
        QVec x = to_quaternion_vec(w);
        for (const QVec& a : accepted) {
          const Quaternion c = qdot(a, x);
          for (std::size_t l = 0; l < x.size(); ++l) x[l] -= a[l] * c;
        }
        const double resid = vec_norm(x);
        if (resid < kResidualTol) continue;
        const double s_inv = 1.0 / resid;
        for (Quaternion& q : x) q *= s_inv;
        accepted.push_back(std::move(x));
        lambda.push_back(mean);
        ++got;
      }
    }
    if (got < want)
      throw InternalError("eigenvalue pairing failure: no symplectic partner");
    begin = end;
  }

  QMatrix k(n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) k(row, col) = accepted[col][row];

  EigDecomp out{std::move(lambda), [&]() -> SympMatrix {
                  try {
                    return SympMatrix(std::move(k));
                  } catch (const DomainError& e) {
                    throw InternalError(std::string("eigenvector basis not symplectic: ") +
                                        e.what());
                  }
                }()};

  const QMatrix recon = spectral_rebuild(out.k, out.lambda);
  const double denom = std::max(frob_norm(s.matrix()), 1e-300);
  if (frob_norm(recon - s.matrix()) / denom > kReconRelTol)
    throw InternalError("eigendecomposition reconstruction check failed");
  return out;
}

PolarDecomp polar_decomp(const QMatrix& z) {
  const QMatrix h = symmetrize(dagger(z) * z);
  const EigDecomp eig = hermitian_eig(HermMatrix(h));
  const double lmax = eig.lambda.back();
  const double lmin = eig.lambda.front();
  if (lmin <= kSingularRelTol * lmax || lmax <= 0.0)
    throw SingularError("singular matrix in polar decomposition",
                        std::sqrt(std::max(lmin, 0.0)));
  std::vector<double> sqrt_l(eig.lambda.size()), inv_sqrt_l(eig.lambda.size());
  for (std::size_t i = 0; i < eig.lambda.size(); ++i) {
    sqrt_l[i] = std::sqrt(eig.lambda[i]);
    inv_sqrt_l[i] = 1.0 / sqrt_l[i];
  }
  const QMatrix p = spectral_rebuild(eig.k, sqrt_l);
  const QMatrix p_inv = spectral_rebuild(eig.k, inv_sqrt_l);
  return {SympMatrix(z * p_inv), HermMatrix(p)};
}

HermMatrix herm_exp(const HermMatrix& s) {
  return apply_spectral(s, "exp", false, [](double x) { return std::exp(x); });
}

HermMatrix herm_log(const HermMatrix& s) {
  return apply_spectral(s, "log", true, [](double x) { return std::log(x); });
}

HermMatrix herm_sqrt(const HermMatrix& s) {
  return apply_spectral(s, "sqrt", true, [](double x) { return std::sqrt(x); });
}

HermMatrix herm_pow(const HermMatrix& s, double t) {
  return apply_spectral(s, "pow", true, [t](double x) { return std::pow(x, t); });
}

}  // namespace qpd
