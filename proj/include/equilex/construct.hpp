#pragma once

#include <cstddef>

#include "equilex/hadamard.hpp"
#include "equilex/lp_core.hpp"

namespace equilex {

// Root t <= 0 of |1 - t|^p + (d - 1)|t|^p = 2, so that the standard basis
// together with t (1, ..., 1) is 2^(1/p)-equilateral.
double simplex_multiplier(double p, std::size_t d);

// d + 1 points at pairwise distance 2^(1/p).
PointSet standard_simplex(double p, std::size_t d);

// Side length and first-coordinate magnitude of the Hadamard lift.
struct LiftParams {
  std::size_t k = 0;
  double p = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
};

// Exponent interval [2 + log2(1 - 1/k), 2 + log2(1 - 1/(2k))] served by a
// Hadamard matrix of order k.
double lift_p_min(std::size_t k);
double lift_p_max(std::size_t k);

// lambda = 2 (((3 - 2^(p-1)) k - 2) / (2 (k - 1)))^(1/p),
// mu = ((2^(p-2) - 1) k + 1)^(1/p).
// Throws DomainError for k odd or k < 2, RangeError (with the interval) when
// p is outside it.
LiftParams lift_params(double p, std::size_t k);

// The 2k points (mu, w_i (x) u), (-mu, w_i (x) v) before rescaling; their
// pairwise distances are all (2^(p-1) k)^(1/p).
PointSet hadamard_lift_raw(double p, const HadamardMatrix& h);

// 2k unit vectors of l_p^(2k-1) at pairwise distance 2^(1/p).
PointSet hadamard_lift(double p, const HadamardMatrix& h);

struct CompositionPlan {
  std::size_t k = 0;  // base dimension
  std::size_t d = 0;  // target dimension
  std::size_t m = 0;  // number of base copies, floor(d / k)
  std::size_t r = 0;  // trailing unit vectors, d - k m

  std::size_t cardinality() const noexcept { return m * (k + 1) + r; }
};

CompositionPlan composition_plan(std::size_t k, std::size_t d);

// Places floor(d/k) copies of a (k+1)-point 2^(1/p)-equilateral set of unit
// vectors of l_p^k in consecutive coordinate blocks [i k, (i+1) k) and fills
// the remaining coordinates with standard unit vectors. The base is checked
// numerically at 1e-9; a failing base raises ValidationError.
PointSet compose(const PointSet& base, std::size_t d);

// Hadamard lift of order 2^k_of_p(p) composed up to dimension d.
// Throws RangeError when d cannot hold one block.
PointSet theorem2_set(double p, std::size_t d);

// The six points (mu, +-u, 0), (-mu, +-v, 0), (0, 0, 0, +-1) of l_p^4 at
// pairwise distance 2, for 1 < p <= log(5/2)/log 2.
PointSet theorem3_set(double p);

// Rescales a set with a claimed scale to pairwise distance 1.
PointSet normalize_scale(const PointSet& set);

}  // namespace equilex
