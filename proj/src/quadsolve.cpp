#include "equilex/quadsolve.hpp"

#include <cmath>
#include <string>

#include "equilex/error.hpp"
#include "equilex/lp_core.hpp"

namespace equilex {

namespace {

constexpr double kEndpointTie = 1e-14;
constexpr double kResidualStop = 1e-13;
constexpr int kMaxBisections = 200;

void require_sub_euclidean(double p) {
  if (!(p > 1.0 && p < 2.0)) {
    throw DomainError("planar quadrilateral solver needs 1 < p < 2, got p = " +
                      std::to_string(p));
  }
}

double s_min(double p) { return std::pow(2.0, -1.0 / p); }

// Second coordinate of the unit vector with first coordinate s >= 0.
double complement(double s, double p) {
  const double rest = 1.0 - abs_pow(s, p);
  if (rest <= 0.0) return 0.0;
  return std::exp(std::log(rest) / p);
}

QuadSolution from_parameter(double s, double p, double lambda) {
  const double y = complement(s, p);
  return QuadSolution{p, lambda, {s, y}, {-y, s}, s};
}

}  // namespace

double quad_lambda_min(double p) { return std::pow(2.0, 1.0 - 1.0 / p); }
double quad_lambda_max(double p) { return std::pow(2.0, 1.0 / p); }

double lambda_of(double s, double p) {
  require_sub_euclidean(p);
  const double lo = s_min(p);
  if (!(s >= lo - kEndpointTie && s <= 1.0)) {
    throw RangeError("parameter s = " + std::to_string(s) + " outside [2^(-1/p), 1]", lo, 1.0);
  }
  const double y = complement(s, p);
  return std::exp(std::log(abs_pow(s - y, p) + abs_pow(s + y, p)) / p);
}

QuadSolution solve_quad(double p, double lambda) {
  require_sub_euclidean(p);
  const double lam_lo = quad_lambda_min(p);
  const double lam_hi = quad_lambda_max(p);
  if (std::fabs(lambda - lam_hi) <= kEndpointTie) {
    return QuadSolution{p, lambda, {1.0, 0.0}, {0.0, 1.0}, 1.0};
  }
  if (std::fabs(lambda - lam_lo) <= kEndpointTie) {
    const double c = std::pow(0.5, 1.0 / p);
    return QuadSolution{p, lambda, {c, c}, {-c, c}, c};
  }
  if (!(lambda > lam_lo && lambda < lam_hi)) {
    throw RangeError("side length " + std::to_string(lambda) + " outside [" +
                         std::to_string(lam_lo) + ", " + std::to_string(lam_hi) +
                         "] for p = " + std::to_string(p),
                     lam_lo, lam_hi);
  }

  // g(a) < 0 < g(b) by the endpoint values; no monotonicity is assumed.
  double a = s_min(p);
  double b = 1.0;
  double best = a;
  double best_err = std::fabs(lambda_of(a, p) - lambda);
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;
    const double g = lambda_of(mid, p) - lambda;
    if (std::fabs(g) < best_err) {
      best = mid;
      best_err = std::fabs(g);
    }
    if (std::fabs(g) < kResidualStop) break;
    if (g < 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return from_parameter(best, p, lambda);
}

}  // namespace equilex
