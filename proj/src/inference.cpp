#include "qpd/inference.hpp"

#include <cmath>
#include <string>

namespace qpd {

namespace {

// Mean log vector and the objective sum d^2(S_i, S); d^2 is the squared
// metric norm of the per-sample log, so both come from the same
// decompositions.
struct Gradient {
  QMatrix mean_log;
  double objective;
};

Gradient eval_logs(const std::vector<SpdMatrix>& samples, const SpdMatrix& s) {
  const int n = s.n();
  QMatrix sum(n);
  double obj = 0.0;
  for (const SpdMatrix& sample : samples) {
    const Tangent l = log_map(s, sample);
    sum += l.vec.matrix();
    obj += metric_at(s, l.vec, l.vec);
  }
  return {sum * (1.0 / static_cast<double>(samples.size())), obj};
}

}  // namespace

BarycenterResult barycenter(const std::vector<SpdMatrix>& samples,
                            const BarycenterConfig& cfg) {
  if (samples.empty()) throw DomainError("barycenter of an empty sample set");
  const int n = samples.front().n();
  for (const SpdMatrix& s : samples)
    if (s.n() != n) throw DimensionError("samples have mixed dimensions");
  if (!(cfg.grad_tol > 0.0)) throw DomainError("grad_tol must be positive");
  if (!(cfg.step > 0.0 && cfg.step <= 1.0)) throw DomainError("step must be in (0, 1]");

  SpdMatrix s = samples.front();
  double gnorm = 0.0;
  for (int iter = 0; iter <= cfg.max_iters; ++iter) {
    const Gradient g = eval_logs(samples, s);
    gnorm = std::sqrt(std::max(0.0, metric_at(s, HermMatrix(g.mean_log),
                                              HermMatrix(g.mean_log))));
    if (gnorm < cfg.grad_tol) return {s, iter};
    if (iter == cfg.max_iters) break;

    double step = cfg.step;
    bool moved = false;
    for (int halving = 0; halving <= 30; ++halving) {
      const SpdMatrix cand = exp_map(s, HermMatrix(g.mean_log * step));
      const double cand_obj = eval_logs(samples, cand).objective;
      if (cand_obj <= g.objective + 1e-12 * (1.0 + std::abs(g.objective))) {
        s = cand;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved)
      throw ConvergenceError("barycenter line search failed; gradient norm " +
                                 std::to_string(gnorm),
                             gnorm, iter);
  }
  throw ConvergenceError("barycenter did not converge in " +
                             std::to_string(cfg.max_iters) +
                             " iterations; gradient norm " + std::to_string(gnorm),
                         gnorm, cfg.max_iters);
}

FitResult fit_mle(const std::vector<SpdMatrix>& samples, const PsiTable& table,
                  const BarycenterConfig& cfg) {
  if (samples.empty()) throw DomainError("fit of an empty sample set");
  if (table.n != samples.front().n())
    throw DomainError("psi table dimension " + std::to_string(table.n) +
                      " does not match sample dimension " +
                      std::to_string(samples.front().n()));

  const BarycenterResult bc = barycenter(samples, cfg);
  double msd = 0.0;
  for (const SpdMatrix& s : samples) {
    const double d = distance(s, bc.mean);
    msd += d * d;
  }
  msd /= static_cast<double>(samples.size());

  const double eta = psi_prime_inverse(table, msd);
  return {bc.mean, eta, std::sqrt(-1.0 / (2.0 * eta)), msd, bc.iterations};
}

}  // namespace qpd
