#include "equilex/lp_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "equilex/error.hpp"

namespace equilex {

namespace {

constexpr double kRescaleThreshold = 1e100;

void require_dim(std::size_t got, std::size_t want) {
  if (got != want) {
    throw DimensionError("dimension mismatch: got " + std::to_string(got) +
                         ", expected " + std::to_string(want));
  }
}

}  // namespace

LpSpace::LpSpace(double p, std::size_t dim) : p_(p), dim_(dim) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
  if (dim == 0) throw DomainError("dimension must be at least 1");
}

PointSet::PointSet(LpSpace space, std::vector<Point> points,
                   std::optional<double> claimed_scale)
    : space_(space), points_(std::move(points)), claimed_scale_(claimed_scale) {
  for (const auto& x : points_) require_dim(x.size(), space_.dim());
  if (claimed_scale_ && !(*claimed_scale_ > 0.0 && std::isfinite(*claimed_scale_))) {
    throw DomainError("claimed scale must be positive and finite");
  }
}

PointSet PointSet::with_exponent(double p) const {
  return PointSet(LpSpace(p, space_.dim()), points_, claimed_scale_);
}

double abs_pow(double t, double p) noexcept {
  if (t == 0.0) return 0.0;
  return std::exp(p * std::log(std::fabs(t)));
}

double lp_norm_pow(std::span<const double> x, double p) noexcept {
  double sum = 0.0;
  for (double t : x) sum += abs_pow(t, p);
  return sum;
}

double lp_norm(std::span<const double> x, const LpSpace& space) {
  require_dim(x.size(), space.dim());
  const double p = space.p();
  double big = 0.0;
  for (double t : x) big = std::max(big, std::fabs(t));
  if (big == 0.0) return 0.0;
  if (big > kRescaleThreshold) {
    double sum = 0.0;
    for (double t : x) sum += abs_pow(t / big, p);
    return big * std::exp(std::log(sum) / p);
  }
  return std::exp(std::log(lp_norm_pow(x, p)) / p);
}

double lp_dist(std::span<const double> x, std::span<const double> y,
               const LpSpace& space) {
  require_dim(x.size(), space.dim());
  require_dim(y.size(), space.dim());
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return lp_norm(diff, space);
}

std::vector<double> kronecker(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double ai : a) {
    for (double bj : b) out.push_back(ai * bj);
  }
  return out;
}

PointSet scale_set(const PointSet& set, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("scale factor must be positive and finite");
  }
  std::vector<Point> pts = set.points();
  for (auto& x : pts) {
    for (auto& t : x) t *= c;
  }
  std::optional<double> scale;
  if (set.claimed_scale()) scale = *set.claimed_scale() * c;
  return PointSet(set.space(), std::move(pts), scale);
}

}  // namespace equilex
