#pragma once

#include <cstdint>
#include <vector>

#include "qpd/manifold.hpp"
#include "qpd/rng.hpp"

namespace qpd {

// Gaussian on the manifold: density proportional to
// exp(-d^2(S, barycentre) / 2 sigma^2) against the Riemannian volume.
struct GaussianParams {
  GaussianParams(SpdMatrix barycentre, double sigma);
  SpdMatrix barycentre;
  double sigma;
};

// Random-walk Metropolis controls for the radial density. step == 0 means
// "auto": sigma/sqrt(n), rescaled toward a 30% acceptance rate during
// burn-in (doubled/halved every 500 steps), then frozen.
struct MhConfig {
  double step = 0.0;
  int burn_in = 5000;
  int thinning = 10;
  std::uint64_t seed = 0;
};

// Monte-Carlo tabulation of psi'(eta) = E[sum r_i^2], the derivative of
// the cumulant generating function at eta = -1/(2 sigma^2). Monotone
// (psi is strictly convex), enforced by isotonic correction.
struct PsiTable {
  int n = 0;
  std::vector<double> etas;       // ascending, all < 0
  std::vector<double> psi_prime;  // strictly increasing, all > 0
  std::vector<double> stderrs;    // Monte-Carlo standard errors

  // Exact n = 1 table: psi'(eta) = -1/(2 eta); the inverse is evaluated
  // in closed form instead of interpolated.
  bool analytic = false;
  static PsiTable analytic_scalar(std::vector<double> etas);
};

// -d^2(S, barycentre) / (2 sigma^2); the normalizing constant is
// deliberately never materialized.
double unnormalized_log_density(const SpdMatrix& s, const GaussianParams& p);

// Log of the radial density on R^n, up to its normalizing constant:
//   -sum r_i^2 / (2 sigma^2) + 4 sum_{i<j} log sinh(|r_i - r_j|/2).
// Returns -inf when two coordinates coincide exactly.
double radial_log_density(const std::vector<double>& r, double sigma);

// log P(accept) for a symmetric proposal: min(0, lp_to - lp_from).
double mh_log_accept(double lp_from, double lp_to);

// Haar-uniform element of Sp(n): the polar factor of a matrix with
// independent normal quaternion entries.
SympMatrix sample_uniform_sp(int n, Rng& rng);

// `count` post-burn-in, thinned states of the random-walk Metropolis
// chain targeting radial_log_density. Deterministic given the rng stream.
std::vector<std::vector<double>> sample_radial(int n, double sigma,
                                               const MhConfig& cfg, int count,
                                               Rng& rng);

// Full sampler: K uniform on Sp(n) and r radial, independently (streams
// (seed,0) and (seed,1)); S = K diag(e^r) K†, returned as A.S with
// A = barycentre^{1/2}.
std::vector<SpdMatrix> sample_gaussian(const GaussianParams& p, int count,
                                       const MhConfig& cfg);

// One sample_radial run per eta on stream (seed, index); mean of sum r_i^2
// with a batch-means standard error. Grid points may be fanned out to
// workers; the result does not depend on the worker count.
PsiTable estimate_psi_table(int n, const std::vector<double>& etas,
                            int samples_per_eta, const MhConfig& cfg,
                            int workers = 1);

// Monotone piecewise-linear inversion of the table; refuses to
// extrapolate.
double psi_prime_inverse(const PsiTable& table, double c);

}  // namespace qpd
