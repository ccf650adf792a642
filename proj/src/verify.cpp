#include "equilex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "equilex/error.hpp"
#include "equilex/threads.hpp"

namespace equilex {

namespace {

void fill_rows(const PointSet& set, DistanceMatrix& dm, std::size_t begin, std::size_t end) {
  const auto& pts = set.points();
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = 0; j < dm.n; ++j) {
      // Compute (i, j) with the lower index first so both triangles agree.
      const std::size_t a = std::min(i, j);
      const std::size_t b = std::max(i, j);
      dm.values[i * dm.n + j] = (i == j) ? 0.0 : lp_dist(pts[a], pts[b], set.space());
    }
  }
}

}  // namespace

DistanceMatrix distance_matrix(const PointSet& set) {
  return distance_matrix(set, worker_threads());
}

DistanceMatrix distance_matrix(const PointSet& set, std::size_t threads) {
  const std::size_t n = set.size();
  if (n < 2) throw ValidationError("distance matrix needs at least two points");
  DistanceMatrix dm{n, std::vector<double>(n * n, 0.0)};

  // Small sets are not worth the thread start-up cost.
  if (threads <= 1 || n * n * set.dim() < (1u << 16)) {
    fill_rows(set, dm, 0, n);
    return dm;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&set, &dm, begin, end] { fill_rows(set, dm, begin, end); });
  }
  for (auto& t : pool) t.join();
  return dm;
}

double unit_sphere_deviation(const PointSet& set) {
  double dev = 0.0;
  for (const auto& x : set.points()) {
    dev = std::max(dev, std::fabs(lp_norm(x, set.space()) - 1.0));
  }
  return dev;
}

EquilateralReport check_equilateral(const PointSet& set, double tol, bool check_sphere) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const DistanceMatrix dm = distance_matrix(set);
  const std::size_t n = dm.n;

  EquilateralReport rep;
  rep.n = n;
  rep.tolerance = tol;
  rep.min_dist = std::numeric_limits<double>::infinity();
  rep.max_dist = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dm(i, j);
      if (d < kDuplicateThreshold) {
        throw DegenerateSetError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
      }
      rep.min_dist = std::min(rep.min_dist, d);
      rep.max_dist = std::max(rep.max_dist, d);
      sum += d;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  rep.scale_estimate = std::clamp(sum / pairs, rep.min_dist, rep.max_dist);
  rep.max_rel_dev = (rep.max_dist - rep.min_dist) / rep.min_dist;
  if (auto c = set.claimed_scale()) {
    rep.claimed_scale_rel_dev = std::fabs(rep.scale_estimate - *c) / *c;
  }
  rep.pass = rep.max_rel_dev <= tol;
  if (check_sphere) {
    rep.sphere_max_dev = unit_sphere_deviation(set);
    rep.pass = rep.pass && *rep.sphere_max_dev <= tol;
  }
  return rep;
}

}  // namespace equilex
