#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equilex/lp_core.hpp"
#include "equilex/verify.hpp"

namespace equilex {

// E(X) = sum_{i<j} (D_ij - 1)^2 with D_ij = ||x_i - x_j||_p^p.
// Throws ValidationError for fewer than two points.
double energy(const PointSet& set);

// dE/dx_{i,c} = sum_{j != i} 2 (D_ij - 1) p |x_ic - x_jc|^(p-1) sign(x_ic - x_jc),
// flattened point-major (index i * dim + c).
std::vector<double> energy_gradient(const PointSet& set);

// Flat-buffer forms used by the optimizer; coords holds n * dim values.
double energy(std::span<const double> coords, std::size_t dim, double p);
double energy_and_gradient(std::span<const double> coords, std::size_t dim, double p,
                           std::span<double> grad);

struct SearchConfig {
  double p = 1.5;
  std::size_t dim = 3;
  std::size_t n = 4;
  std::size_t restarts = 50;
  std::size_t max_iters = 20000;
  std::uint64_t seed = 1;
  // A restart stops as soon as its energy drops below this.
  double energy_threshold = 1e-16;
  // Armijo sufficient-decrease constant and backtracking factor.
  double armijo = 1e-4;
  double backtrack = 0.5;
  // A restart also stops when the largest gradient component falls below this.
  double gradient_tolerance = 1e-15;
  // 0 means worker_threads().
  std::size_t threads = 0;
};

struct RestartLog {
  std::size_t restart = 0;
  double energy = 0.0;
  std::size_t iterations = 0;
};

inline constexpr double kDiscoveryEnergy = 1e-12;
inline constexpr double kDiscoveryTolerance = 1e-6;

struct SearchResult {
  PointSet best_points;
  double best_energy = 0.0;
  std::size_t restart_index = 0;
  std::size_t iterations_used = 0;
  // Absent when the best configuration has coinciding points.
  std::optional<EquilateralReport> verifier_report;
  // Energy below 1e-12 and the verifier passes at 1e-6 on l_p distances.
  bool discovery = false;
  std::vector<RestartLog> log;
};

// Seed of restart r: the splitmix64 finalizer applied to
// seed + (r + 1) * 0x9E3779B97F4A7C15. Each restart draws its initial
// points, coordinate by coordinate, uniformly from [-1, 1] using the top 53
// bits of successive mt19937_64 outputs.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart);

// Per-restart gradient descent with Armijo backtracking. The trial step is
// the Barzilai-Borwein step of the previous iteration. Restarts run in
// parallel; the result is the lowest energy, ties going to the lowest
// restart index, and is identical for any thread count.
SearchResult run_search(const SearchConfig& cfg);

}  // namespace equilex
