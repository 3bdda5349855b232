#include "qpd/manifold.hpp"

#include <cmath>
#include <string>

namespace qpd {

namespace {

constexpr double kPdRelTol = 1e-12;
constexpr double kSkewTol = 1e-12;

std::vector<double> mapped(const std::vector<double>& v, double (*f)(double)) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f(v[i]);
  return out;
}

}  // namespace

SpdMatrix::SpdMatrix(const HermMatrix& s) : m_(s.matrix()), eig_(hermitian_eig(s)) {
  const double lmin = eig_.lambda.front();
  const double lmax = eig_.lambda.back();
  if (!(lmin > kPdRelTol * lmax) || lmax <= 0.0)
    throw DomainError("matrix is not positive-definite: smallest eigenvalue " +
                      std::to_string(lmin) + ", largest " + std::to_string(lmax));
}

QMatrix SpdMatrix::sqrt() const {
  return spectral_rebuild(eig_.k, mapped(eig_.lambda, [](double x) { return std::sqrt(x); }));
}

QMatrix SpdMatrix::inv_sqrt() const {
  return spectral_rebuild(eig_.k,
                          mapped(eig_.lambda, [](double x) { return 1.0 / std::sqrt(x); }));
}

QMatrix SpdMatrix::inverse() const {
  return spectral_rebuild(eig_.k, mapped(eig_.lambda, [](double x) { return 1.0 / x; }));
}

QMatrix SpdMatrix::log() const {
  return spectral_rebuild(eig_.k, mapped(eig_.lambda, [](double x) { return std::log(x); }));
}

SpdMatrix act(const QMatrix& a, const SpdMatrix& s) {
  return SpdMatrix(HermMatrix(symmetrize(a * s.matrix() * dagger(a))));
}

double metric_at(const SpdMatrix& s, const HermMatrix& u, const HermMatrix& v) {
  const QMatrix inv = s.inverse();
  return re_trace(inv * u.matrix() * inv * v.matrix());
}

double metric_at(const SpdMatrix& s, const Tangent& u, const Tangent& v) {
  if (!(u.base.matrix() == s.matrix()) || !(v.base.matrix() == s.matrix()))
    throw DomainError("tangent vectors are not based at the given point");
  return metric_at(s, u.vec, v.vec);
}

PolarCoords to_polar(const SpdMatrix& s) {
  return {mapped(s.eig().lambda, [](double x) { return std::log(x); }), s.eig().k};
}

SpdMatrix from_polar(const PolarCoords& p) {
  return SpdMatrix(
      HermMatrix(spectral_rebuild(p.k, mapped(p.r, [](double x) { return std::exp(x); }))));
}

namespace {

// S^{-1/2} Q S^{-1/2}, the whitened middle factor of geodesic formulas.
EigDecomp whitened_eig(const SpdMatrix& s, const SpdMatrix& q) {
  const QMatrix w = s.inv_sqrt();
  return hermitian_eig(HermMatrix(symmetrize(w * q.matrix() * w)));
}

}  // namespace

SpdMatrix geodesic(const SpdMatrix& s, const SpdMatrix& q, double t) {
  const EigDecomp mid = whitened_eig(s, q);
  std::vector<double> powed(mid.lambda.size());
  for (std::size_t i = 0; i < powed.size(); ++i) powed[i] = std::pow(mid.lambda[i], t);
  const QMatrix root = s.sqrt();
  return SpdMatrix(HermMatrix(symmetrize(root * spectral_rebuild(mid.k, powed) * root)));
}

double distance(const SpdMatrix& s, const SpdMatrix& q) {
  const EigDecomp mid = whitened_eig(s, q);
  double sum = 0.0;
  for (double l : mid.lambda) {
    if (l <= 0.0)
      throw DomainError("whitened matrix is not positive-definite");
    const double lg = std::log(l);
    sum += lg * lg;
  }
  return std::sqrt(sum);
}

SpdMatrix exp_map(const SpdMatrix& s, const HermMatrix& u) {
  const QMatrix w = s.inv_sqrt();
  const EigDecomp mid = hermitian_eig(HermMatrix(symmetrize(w * u.matrix() * w)));
  std::vector<double> ex(mid.lambda.size());
  for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = std::exp(mid.lambda[i]);
  const QMatrix root = s.sqrt();
  return SpdMatrix(HermMatrix(symmetrize(root * spectral_rebuild(mid.k, ex) * root)));
}

Tangent log_map(const SpdMatrix& s, const SpdMatrix& q) {
  const EigDecomp mid = whitened_eig(s, q);
  std::vector<double> lg(mid.lambda.size());
  for (std::size_t i = 0; i < lg.size(); ++i) {
    if (mid.lambda[i] <= 0.0)
      throw DomainError("whitened matrix is not positive-definite");
    lg[i] = std::log(mid.lambda[i]);
  }
  const QMatrix root = s.sqrt();
  return {s, HermMatrix(symmetrize(root * spectral_rebuild(mid.k, lg) * root))};
}

double polar_length_element(const std::vector<double>& r,
                            const std::vector<double>& dr, const QMatrix& x) {
  const int n = x.n();
  if (static_cast<int>(r.size()) != n || static_cast<int>(dr.size()) != n)
    throw DimensionError("coordinate vectors do not match matrix dimension");

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, abs(x(i, j)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (abs(x(i, j) + conj(x(j, i))) > kSkewTol * scale)
        throw DomainError("X is not skew-Hermitian");

  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += dr[i] * dr[i];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double sh = std::sinh(std::abs(r[i] - r[j]) / 2.0);
      sum += 8.0 * sh * sh * norm_sq(x(i, j));
    }
  }
  return sum;
}

}  // namespace qpd
