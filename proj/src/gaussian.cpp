#include "qpd/gaussian.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

namespace qpd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sinh(double x) {
  // for large x, sinh overflows long before its log does
  if (x > 20.0) return x - 0.6931471805599453 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

}  // namespace

GaussianParams::GaussianParams(SpdMatrix barycentre_, double sigma_)
    : barycentre(std::move(barycentre_)), sigma(sigma_) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
}

double unnormalized_log_density(const SpdMatrix& s, const GaussianParams& p) {
  const double d = distance(s, p.barycentre);
  return -d * d / (2.0 * p.sigma * p.sigma);
}

double radial_log_density(const std::vector<double>& r, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const int n = static_cast<int>(r.size());
  double sq = 0.0;
  for (double v : r) sq += v * v;
  double pairs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::abs(r[i] - r[j]);
      if (gap == 0.0) return -kInf;
      pairs += log_sinh(gap / 2.0);
    }
  }
  return -sq / (2.0 * sigma * sigma) + 4.0 * pairs;
}

double mh_log_accept(double lp_from, double lp_to) {
  if (lp_to == -kInf) return -kInf;
  return std::min(0.0, lp_to - lp_from);
}

SympMatrix sample_uniform_sp(int n, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    QMatrix z(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        z(i, j) = Quaternion(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    try {
      return polar_decomp(z).k;
    } catch (const SingularError&) {
      continue;  // probability-zero event; redraw
    }
  }
  throw InternalError("could not draw an invertible Gaussian matrix in 8 attempts");
}

std::vector<std::vector<double>> sample_radial(int n, double sigma,
                                               const MhConfig& cfg, int count,
                                               Rng& rng) {
  if (n < 1) throw DimensionError("dimension must be at least 1");
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  if (count < 1) throw DomainError("sample count must be at least 1");
  if (cfg.thinning < 1) throw DomainError("thinning must be at least 1");
  if (cfg.burn_in < 0) throw DomainError("burn-in must be non-negative");
  if (cfg.step < 0.0) throw DomainError("step must be positive (or 0 for auto)");

  double step = cfg.step > 0.0 ? cfg.step : sigma / std::sqrt(double(n));

  // r = 0 has zero density for n > 1 (coincident coordinates), so start
  // with the coordinates spread out.
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) r[i] = sigma * ((i + 1) - (n + 1) / 2.0);
  double lp = radial_log_density(r, sigma);

  std::vector<std::vector<double>> out;
  out.reserve(count);
  std::vector<double> proposal(n);

  const long total = static_cast<long>(cfg.burn_in) +
                     static_cast<long>(count) * cfg.thinning;
  int window_accepts = 0;
  for (long t = 1; t <= total; ++t) {
    for (int i = 0; i < n; ++i) proposal[i] = r[i] + step * rng.normal();
    const double lp_new = radial_log_density(proposal, sigma);
    const double log_u = std::log(rng.uniform());
    if (log_u < mh_log_accept(lp, lp_new)) {
      r = proposal;
      lp = lp_new;
      ++window_accepts;
    }
    if (t <= cfg.burn_in) {
      if (t % 500 == 0) {
        step *= (window_accepts > 150) ? 2.0 : 0.5;  // aim near 30%
        window_accepts = 0;
      }
      if (t == cfg.burn_in) window_accepts = 0;
    } else if ((t - cfg.burn_in) % cfg.thinning == 0) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<SpdMatrix> sample_gaussian(const GaussianParams& p, int count,
                                       const MhConfig& cfg) {
  const int n = p.barycentre.n();
  Rng radial_rng(cfg.seed, 0);
  Rng sp_rng(cfg.seed, 1);

  const std::vector<std::vector<double>> rs =
      sample_radial(n, p.sigma, cfg, count, radial_rng);
  const QMatrix a = p.barycentre.sqrt();

  std::vector<SpdMatrix> out;
  out.reserve(count);
  for (const std::vector<double>& r : rs) {
    const SympMatrix k = sample_uniform_sp(n, sp_rng);
    std::vector<double> ev(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) ev[i] = std::exp(r[i]);
    const SpdMatrix s{HermMatrix(spectral_rebuild(k, ev))};
    out.push_back(act(a, s));
  }
  return out;
}

namespace {

struct PsiRow {
  double mean = 0.0;
  double stderr_ = 0.0;
};

PsiRow psi_row(int n, double eta, int samples, const MhConfig& cfg, Rng rng) {
  const double sigma = std::sqrt(-1.0 / (2.0 * eta));
  const std::vector<std::vector<double>> draws =
      sample_radial(n, sigma, cfg, samples, rng);

  std::vector<double> t(draws.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    double sq = 0.0;
    for (double v : draws[i]) sq += v * v;
    t[i] = sq;
    mean += sq;
  }
  mean /= t.size();

  // batch means absorb the residual autocorrelation of the thinned chain
  const int b = std::max(2, static_cast<int>(std::sqrt(double(t.size()))));
  const int len = static_cast<int>(t.size()) / b;
  double var_bm = 0.0;
  for (int i = 0; i < b; ++i) {
    double bm = 0.0;
    for (int j = 0; j < len; ++j) bm += t[i * len + j];
    bm /= len;
    var_bm += (bm - mean) * (bm - mean);
  }
  var_bm /= (b - 1);
  return {mean, std::sqrt(var_bm / b)};
}

// pool-adjacent-violators, weighted by inverse variance
void isotonic_increasing(std::vector<double>& y, const std::vector<double>& se) {
  struct Block {
    double wsum, wysum;
    int count;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double w = 1.0 / std::max(se[i] * se[i], 1e-300);
    blocks.push_back({w, w * y[i], 1});
    while (blocks.size() >= 2) {
      const Block& a = blocks[blocks.size() - 2];
      const Block& b = blocks[blocks.size() - 1];
      if (a.wysum / a.wsum <= b.wysum / b.wsum) break;
      Block merged{a.wsum + b.wsum, a.wysum + b.wysum, a.count + b.count};
      blocks.pop_back();
      blocks.back() = merged;
    }
  }
  std::size_t i = 0;
  for (const Block& blk : blocks) {
    const double v = blk.wysum / blk.wsum;
    for (int c = 0; c < blk.count; ++c) y[i++] = v;
  }
}

}  // namespace

PsiTable PsiTable::analytic_scalar(std::vector<double> etas) {
  PsiTable t;
  t.n = 1;
  t.analytic = true;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] < 0.0)) throw DomainError("eta grid must be negative");
    if (i > 0 && etas[i] <= etas[i - 1]) throw DomainError("eta grid must be ascending");
    t.psi_prime.push_back(-1.0 / (2.0 * etas[i]));
    t.stderrs.push_back(0.0);
  }
  t.etas = std::move(etas);
  return t;
}

PsiTable estimate_psi_table(int n, const std::vector<double>& etas,
                            int samples_per_eta, const MhConfig& cfg,
                            int workers) {
  if (etas.empty()) throw DomainError("eta grid is empty");
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] < 0.0)) throw DomainError("eta grid must be negative");
    if (i > 0 && etas[i] <= etas[i - 1]) throw DomainError("eta grid must be ascending");
  }
  if (samples_per_eta < 4) throw DomainError("need at least 4 samples per eta");

  std::vector<PsiRow> rows(etas.size());
  const auto work = [&](std::size_t i) {
    rows[i] = psi_row(n, etas[i], samples_per_eta, cfg,
                      Rng(cfg.seed, static_cast<std::uint64_t>(i)));
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < etas.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int w = std::min<std::size_t>(workers, etas.size());
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
      pool.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < etas.size(); i = next.fetch_add(1))
          work(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  PsiTable table;
  table.n = n;
  table.etas = etas;
  for (const PsiRow& r : rows) {
    table.psi_prime.push_back(r.mean);
    table.stderrs.push_back(r.stderr_);
  }
  isotonic_increasing(table.psi_prime, table.stderrs);
  for (std::size_t i = 1; i < table.psi_prime.size(); ++i) {
    if (table.psi_prime[i] <= table.psi_prime[i - 1])
      table.psi_prime[i] =
          table.psi_prime[i - 1] +
          std::max(1e-12, 1e-9 * std::abs(table.psi_prime[i - 1]));
  }
  return table;
}

double psi_prime_inverse(const PsiTable& table, double c) {
  if (table.analytic) {
    if (!(c > 0.0))
      throw RangeError("psi' inverse needs a positive mean squared distance");
    return -1.0 / (2.0 * c);
  }
  if (table.etas.empty()) throw DomainError("psi table is empty");
  const std::vector<double>& psi = table.psi_prime;
  if (c < psi.front() || c > psi.back())
    throw RangeError("value " + std::to_string(c) + " outside tabulated psi' range [" +
                     std::to_string(psi.front()) + ", " + std::to_string(psi.back()) +
                     "]; tabulate a wider eta grid");
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (c == psi[i]) return table.etas[i];
  std::size_t hi = 1;
  while (psi[hi] < c) ++hi;
  const double t = (c - psi[hi - 1]) / (psi[hi] - psi[hi - 1]);
  return table.etas[hi - 1] + t * (table.etas[hi] - table.etas[hi - 1]);
}

}  // namespace qpd
