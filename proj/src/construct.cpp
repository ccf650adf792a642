#include "equilex/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "equilex/bounds.hpp"
#include "equilex/error.hpp"
#include "equilex/quadsolve.hpp"
#include "equilex/verify.hpp"

namespace equilex {

namespace {

constexpr double kBaseTolerance = 1e-9;

double root_p(double x, double p) { return x <= 0.0 ? 0.0 : std::exp(std::log(x) / p); }

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
}

// Pulls lambda into the solver's interval when p sits within slack of an end.
double clamp_side(double lambda, double p) {
  return std::clamp(lambda, quad_lambda_min(p), quad_lambda_max(p));
}

}  // namespace

double simplex_multiplier(double p, std::size_t d) {
  require_exponent(p);
  if (d == 0) throw DomainError("dimension must be at least 1");
  if (d == 1) return 1.0 - std::pow(2.0, 1.0 / p);

  const double rest = static_cast<double>(d - 1);
  auto f = [&](double t) { return abs_pow(1.0 - t, p) + rest * abs_pow(t, p) - 2.0; };
  // f(0) = -1 and f(-1) = 2^p + d - 1 - 2 > 0; f decreases on t <= 0.
  double a = -1.0;
  double b = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;
    if (f(mid) > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return std::fabs(f(a)) < std::fabs(f(b)) ? a : b;
}

PointSet standard_simplex(double p, std::size_t d) {
  const double t = simplex_multiplier(p, d);
  std::vector<Point> pts;
  pts.reserve(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    Point e(d, 0.0);
    e[i] = 1.0;
    pts.push_back(std::move(e));
  }
  pts.emplace_back(d, t);
  return PointSet(LpSpace(p, d), std::move(pts), std::pow(2.0, 1.0 / p));
}

double lift_p_min(std::size_t k) {
  return 2.0 + std::log2(1.0 - 1.0 / static_cast<double>(k));
}

double lift_p_max(std::size_t k) {
  return 2.0 + std::log2(1.0 - 1.0 / (2.0 * static_cast<double>(k)));
}

LiftParams lift_params(double p, std::size_t k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("Hadamard lift needs an even order k >= 2, got " + std::to_string(k));
  }
  const double lo = std::max(1.0, lift_p_min(k));
  const double hi = lift_p_max(k);
  if (!(p > 1.0) || p < lo - kExponentSlack || p > hi + kExponentSlack) {
    throw RangeError("p = " + std::to_string(p) + " outside the interval [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "] (p > 1) for Hadamard order " +
                         std::to_string(k),
                     lo, hi);
  }
  const double kd = static_cast<double>(k);
  const double side = ((3.0 - std::pow(2.0, p - 1.0)) * kd - 2.0) / (2.0 * (kd - 1.0));
  const double head = (std::pow(2.0, p - 2.0) - 1.0) * kd + 1.0;
  return LiftParams{k, p, clamp_side(2.0 * root_p(side, p), p), root_p(head, p)};
}

PointSet hadamard_lift_raw(double p, const HadamardMatrix& h) {
  const LiftParams params = lift_params(p, h.order());
  const QuadSolution q = solve_quad(p, params.lambda);
  const ReducedRows w = reduced_rows(normalize_first_column(h));
  const std::size_t k = w.order;
  const std::size_t dim = 2 * k - 1;

  std::vector<Point> pts;
  pts.reserve(2 * k);
  auto lifted = [&](double head, const std::array<double, 2>& planar,
                    const std::vector<std::int8_t>& row) {
    const std::vector<double> signs(row.begin(), row.end());
    Point x{head};
    const auto tail = kronecker(signs, planar);
    x.insert(x.end(), tail.begin(), tail.end());
    return x;
  };
  for (const auto& row : w.rows) pts.push_back(lifted(params.mu, q.u, row));
  for (const auto& row : w.rows) pts.push_back(lifted(-params.mu, q.v, row));
  const double side = root_p(std::pow(2.0, p - 1.0) * static_cast<double>(k), p);
  return PointSet(LpSpace(p, dim), std::move(pts), side);
}

PointSet hadamard_lift(double p, const HadamardMatrix& h) {
  const double k = static_cast<double>(h.order());
  PointSet raw = hadamard_lift_raw(p, h);
  PointSet unit = scale_set(raw, 1.0 / root_p(std::pow(2.0, p - 2.0) * k, p));
  return PointSet(unit.space(), unit.points(), std::pow(2.0, 1.0 / p));
}

CompositionPlan composition_plan(std::size_t k, std::size_t d) {
  if (k == 0) throw DomainError("base dimension must be at least 1");
  if (d < k) {
    throw RangeError("target dimension " + std::to_string(d) + " smaller than base dimension " +
                         std::to_string(k),
                     static_cast<double>(k), std::numeric_limits<double>::infinity());
  }
  return CompositionPlan{k, d, d / k, d % k};
}

PointSet compose(const PointSet& base, std::size_t d) {
  const std::size_t k = base.dim();
  const double p = base.space().p();
  if (base.size() != k + 1) {
    throw ValidationError("base must have " + std::to_string(k + 1) + " points in dimension " +
                          std::to_string(k) + ", got " + std::to_string(base.size()));
  }
  const CompositionPlan plan = composition_plan(k, d);

  const EquilateralReport rep = check_equilateral(base, kBaseTolerance, true);
  const double side = std::pow(2.0, 1.0 / p);
  if (!rep.pass || std::fabs(rep.scale_estimate - side) > kBaseTolerance * side) {
    throw ValidationError("base is not a 2^(1/p)-equilateral set of unit vectors (max rel dev " +
                          std::to_string(rep.max_rel_dev) + ", sphere dev " +
                          std::to_string(rep.sphere_max_dev.value_or(0.0)) + ")");
  }

  std::vector<Point> pts;
  pts.reserve(plan.cardinality());
  for (std::size_t block = 0; block < plan.m; ++block) {
    for (const auto& x : base.points()) {
      Point y(d, 0.0);
      std::copy(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(block * k));
      pts.push_back(std::move(y));
    }
  }
  for (std::size_t i = 0; i < plan.r; ++i) {
    Point e(d, 0.0);
    e[plan.m * k + i] = 1.0;
    pts.push_back(std::move(e));
  }
  return PointSet(LpSpace(p, d), std::move(pts), side);
}

PointSet theorem2_set(double p, std::size_t d) {
  const unsigned k = k_of_p(p);
  const std::size_t order = std::size_t{1} << k;
  const std::size_t base_dim = 2 * order - 1;
  if (d < base_dim) {
    throw RangeError("dimension " + std::to_string(d) + " too small for p = " +
                         std::to_string(p) + "; need d >= " + std::to_string(base_dim),
                     static_cast<double>(base_dim), std::numeric_limits<double>::infinity());
  }
  return compose(hadamard_lift(p, sylvester(k)), d);
}

PointSet theorem3_set(double p) {
  const double p_max = theorem3_max_p();
  if (!(p > 1.0) || p > p_max + kExponentSlack) {
    throw RangeError("six-point set in l_p^4 needs 1 < p <= log(5/2)/log 2 = " +
                         std::to_string(p_max) + ", got p = " + std::to_string(p),
                     1.0, p_max);
  }
  const double two_p = std::pow(2.0, p);
  const double lambda = clamp_side(2.0 * root_p(3.0 - two_p, p), p);
  const double mu = root_p(two_p - 2.0, p);
  const QuadSolution q = solve_quad(p, lambda);
  const auto& u = q.u;
  const auto& v = q.v;
  std::vector<Point> pts{
      {mu, u[0], u[1], 0.0},   {mu, -u[0], -u[1], 0.0}, {-mu, v[0], v[1], 0.0},
      {-mu, -v[0], -v[1], 0.0}, {0.0, 0.0, 0.0, 1.0},    {0.0, 0.0, 0.0, -1.0},
  };
  return PointSet(LpSpace(p, 4), std::move(pts), 2.0);
}

PointSet normalize_scale(const PointSet& set) {
  if (!set.claimed_scale()) throw ValidationError("set carries no claimed scale to normalize");
  return scale_set(set, 1.0 / *set.claimed_scale());
}

}  // namespace equilex
