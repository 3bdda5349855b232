#pragma once

#include <vector>

#include "qpd/gaussian.hpp"
#include "qpd/manifold.hpp"

namespace qpd {

struct BarycenterConfig {
  int max_iters = 200;
  double grad_tol = 1e-9;  // on the metric norm of the mean log vector
  double step = 1.0;       // halved on objective increase, at most 30 times
};

struct BarycenterResult {
  SpdMatrix mean;
  int iterations;
};

struct FitResult {
  SpdMatrix barycentre;
  double eta_hat;       // < 0
  double sigma_hat;     // sqrt(-1/(2 eta_hat))
  double mean_sq_dist;  // (1/N) sum d^2(S_i, barycentre)
  int iterations;
};

// Riemannian barycentre argmin_S sum d^2(S_i, S) by gradient descent
// S <- Exp_S((step/N) sum Log_S(S_i)), starting from the first sample.
// Existence and uniqueness hold (non-positive curvature). Throws
// ConvergenceError when max_iters is exhausted.
BarycenterResult barycenter(const std::vector<SpdMatrix>& samples,
                            const BarycenterConfig& cfg = {});

// Maximum likelihood: barycentre, then eta from the psi' table at the
// observed mean squared distance. A mean squared distance outside the
// table is an error, never clamped. sigma_hat is always derived from
// eta_hat.
FitResult fit_mle(const std::vector<SpdMatrix>& samples, const PsiTable& table,
                  const BarycenterConfig& cfg = {});

}  // namespace qpd
