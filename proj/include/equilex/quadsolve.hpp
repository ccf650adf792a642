#pragma once

#include <array>

namespace equilex {

// Two unit vectors u, v of the l_p plane with ||u + v||_p = ||u - v||_p = lambda.
// u = (s, (1 - s^p)^(1/p)) and v is u turned by a quarter: v = (-u_2, u_1).
struct QuadSolution {
  double p = 0.0;
  double lambda = 0.0;
  std::array<double, 2> u{};
  std::array<double, 2> v{};
  double s = 0.0;
};

// Admissible side lengths [2^(1-1/p), 2^(1/p)] for 1 < p < 2.
double quad_lambda_min(double p);
double quad_lambda_max(double p);

// ||u(s) + v(s)||_p for s in [2^(-1/p), 1].
double lambda_of(double s, double p);

// Bisection for lambda_of(s) = lambda on [2^(-1/p), 1]. Targets within 1e-14
// of either end of the admissible interval get the closed-form pair.
// Throws DomainError for p outside (1, 2), RangeError (carrying the interval)
// for lambda outside it.
QuadSolution solve_quad(double p, double lambda);

}  // namespace equilex
