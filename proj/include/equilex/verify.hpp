#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equilex/lp_core.hpp"

namespace equilex {

// Dense symmetric n x n matrix of pairwise l_p distances, row-major.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct EquilateralReport {
  std::size_t n = 0;
  double min_dist = 0.0;
  double max_dist = 0.0;
  double max_rel_dev = 0.0;  // (max - min) / min
  double scale_estimate = 0.0;  // mean pairwise distance
  std::optional<double> claimed_scale_rel_dev;
  std::optional<double> sphere_max_dev;  // max | ||x||_p - 1 |
  double tolerance = 0.0;
  bool pass = false;
};

// Rows are split across worker_threads(); each entry is computed the same
// way regardless of the split, so the result is bit-identical to a serial
// run. Throws ValidationError for fewer than two points.
DistanceMatrix distance_matrix(const PointSet& set);
DistanceMatrix distance_matrix(const PointSet& set, std::size_t threads);

inline constexpr double kDuplicateThreshold = 1e-14;

// Pass iff max_rel_dev <= tol and, when requested, every norm is within tol
// of 1. Throws DegenerateSetError when two points are closer than 1e-14 and
// DomainError for tol <= 0.
EquilateralReport check_equilateral(const PointSet& set, double tol, bool check_sphere = false);

// max | ||x||_p - 1 | over the set.
double unit_sphere_deviation(const PointSet& set);

}  // namespace equilex
