#include "equilex/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "equilex/error.hpp"
#include "equilex/threads.hpp"

namespace equilex {

namespace {

constexpr double kMinStep = 1e-20;
constexpr double kMaxStep = 1e6;

struct RestartOutcome {
  std::vector<double> coords;
  double energy = 0.0;
  std::size_t iterations = 0;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double t : a) m = std::max(m, std::fabs(t));
  return m;
}

struct PowSlope {
  double value = 0.0;  // |t|^p
  double slope = 0.0;  // p |t|^(p-1) sign(t)
};

// Shared by the energy and its gradient so both see identical D_ij.
PowSlope pow_with_slope(double t, double p) {
  if (t == 0.0) return {};
  const double a = std::fabs(t);
  const double pm1 = std::exp((p - 1.0) * std::log(a));
  return {pm1 * a, p * pm1 * (t > 0.0 ? 1.0 : -1.0)};
}

void require_points(std::size_t n) {
  if (n < 2) throw ValidationError("energy needs at least two points");
}

std::vector<double> flatten(const PointSet& set) {
  std::vector<double> x;
  x.reserve(set.size() * set.dim());
  for (const auto& pt : set.points()) x.insert(x.end(), pt.begin(), pt.end());
  return x;
}

RestartOutcome descend(const SearchConfig& cfg, std::size_t restart) {
  const std::size_t len = cfg.n * cfg.dim;
  std::mt19937_64 rng(restart_seed(cfg.seed, restart));
  std::vector<double> x(len);
  for (auto& t : x) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    t = 2.0 * unit - 1.0;
  }

  std::vector<double> g(len), x_new(len), g_new(len);
  double e = energy_and_gradient(x, cfg.dim, cfg.p, g);
  double step = 0.1 / std::max(1.0, max_abs(g));
  std::size_t it = 0;
  while (it < cfg.max_iters && e >= cfg.energy_threshold) {
    if (max_abs(g) < cfg.gradient_tolerance) break;
    const double gg = dot(g, g);
    double alpha = step;
    double e_new = 0.0;
    bool accepted = false;
    while (alpha >= kMinStep) {
      for (std::size_t i = 0; i < len; ++i) x_new[i] = x[i] - alpha * g[i];
      e_new = energy(x_new, cfg.dim, cfg.p);
      if (e_new <= e - cfg.armijo * alpha * gg) {
        accepted = true;
        break;
      }
      alpha *= cfg.backtrack;
    }
    if (!accepted) break;
    e_new = energy_and_gradient(x_new, cfg.dim, cfg.p, g_new);
    ++it;

    // Barzilai-Borwein: s = x_new - x, y = g_new - g, next trial s.s / s.y.
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double s = x_new[i] - x[i];
      ss += s * s;
      sy += s * (g_new[i] - g[i]);
    }
    step = sy > 0.0 ? std::clamp(ss / sy, kMinStep, kMaxStep) : std::min(2.0 * alpha, kMaxStep);

    x.swap(x_new);
    g.swap(g_new);
    e = e_new;
  }
  return RestartOutcome{std::move(x), e, it};
}

}  // namespace

double energy(std::span<const double> coords, std::size_t dim, double p) {
  const std::size_t n = coords.size() / dim;
  require_points(n);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = coords.data() + i * dim;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* xj = coords.data() + j * dim;
      double dij = 0.0;
      for (std::size_t c = 0; c < dim; ++c) dij += pow_with_slope(xi[c] - xj[c], p).value;
      e += (dij - 1.0) * (dij - 1.0);
    }
  }
  return e;
}

double energy_and_gradient(std::span<const double> coords, std::size_t dim, double p,
                           std::span<double> grad) {
  const std::size_t n = coords.size() / dim;
  require_points(n);
  if (grad.size() != coords.size()) throw DimensionError("gradient buffer has wrong length");
  std::fill(grad.begin(), grad.end(), 0.0);
  std::vector<double> slope(dim);  // p |delta|^(p-1) sign(delta)
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = coords.data() + i * dim;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* xj = coords.data() + j * dim;
      double dij = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const PowSlope ps = pow_with_slope(xi[c] - xj[c], p);
        dij += ps.value;
        slope[c] = ps.slope;
      }
      const double r = dij - 1.0;
      e += r * r;
      for (std::size_t c = 0; c < dim; ++c) {
        const double gc = 2.0 * r * slope[c];
        grad[i * dim + c] += gc;
        grad[j * dim + c] -= gc;
      }
    }
  }
  return e;
}

double energy(const PointSet& set) {
  require_points(set.size());
  return energy(flatten(set), set.dim(), set.space().p());
}

std::vector<double> energy_gradient(const PointSet& set) {
  const auto x = flatten(set);
  std::vector<double> g(x.size());
  energy_and_gradient(x, set.dim(), set.space().p(), g);
  return g;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
  std::uint64_t z = seed + (static_cast<std::uint64_t>(restart) + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SearchResult run_search(const SearchConfig& cfg) {
  const LpSpace space(cfg.p, cfg.dim);
  if (cfg.n < 2) throw DomainError("search needs n >= 2");
  if (cfg.restarts < 1) throw DomainError("search needs at least one restart");
  if (!(cfg.backtrack > 0.0 && cfg.backtrack < 1.0) || !(cfg.armijo > 0.0 && cfg.armijo < 1.0)) {
    throw DomainError("line search constants must lie in (0, 1)");
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const std::size_t threads =
      std::min(cfg.restarts, cfg.threads ? cfg.threads : worker_threads());
  if (threads <= 1) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) outcomes[r] = descend(cfg, r);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < cfg.restarts; r += threads) outcomes[r] = descend(cfg, r);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  std::vector<RestartLog> log;
  log.reserve(cfg.restarts);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    log.push_back(RestartLog{r, outcomes[r].energy, outcomes[r].iterations});
    if (outcomes[r].energy < outcomes[best].energy) best = r;
  }

  std::vector<Point> pts;
  const auto& coords = outcomes[best].coords;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    pts.emplace_back(coords.begin() + static_cast<std::ptrdiff_t>(i * cfg.dim),
                     coords.begin() + static_cast<std::ptrdiff_t>((i + 1) * cfg.dim));
  }
  PointSet best_set(space, std::move(pts), 1.0);
  SearchResult res{best_set, energy(best_set), best, outcomes[best].iterations, std::nullopt,
                   false, std::move(log)};
  try {
    res.verifier_report = check_equilateral(res.best_points, kDiscoveryTolerance);
  } catch (const DegenerateSetError&) {
    res.verifier_report.reset();
  }
  res.discovery = res.best_energy < kDiscoveryEnergy && res.verifier_report &&
                  res.verifier_report->pass;
  return res;
}

}  // namespace equilex
