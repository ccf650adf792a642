#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace equilex {

// The normed space l_p^dim with 1 < p < infinity.
class LpSpace {
 public:
  // Throws DomainError unless 1 < p < inf and dim >= 1.
  LpSpace(double p, std::size_t dim);

  double p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }

  friend bool operator==(const LpSpace&, const LpSpace&) = default;

 private:
  double p_;
  std::size_t dim_;
};

using Point = std::vector<double>;

// A finite list of points of one LpSpace, optionally tagged with the common
// pairwise distance it is claimed to have.
class PointSet {
 public:
  // Throws DimensionError if any point has the wrong length and DomainError
  // if the claimed scale is not a positive finite number.
  PointSet(LpSpace space, std::vector<Point> points,
           std::optional<double> claimed_scale = std::nullopt);

  const LpSpace& space() const noexcept { return space_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return space_.dim(); }
  std::optional<double> claimed_scale() const noexcept { return claimed_scale_; }

  // Same coordinates viewed under another exponent.
  PointSet with_exponent(double p) const;

 private:
  LpSpace space_;
  std::vector<Point> points_;
  std::optional<double> claimed_scale_;
};

// |t|^p evaluated as exp(p ln|t|), with 0 mapped to exactly 0.
double abs_pow(double t, double p) noexcept;

// sum_i |x_i|^p, the p-th power of the norm. No overflow guard.
double lp_norm_pow(std::span<const double> x, double p) noexcept;

double lp_norm(std::span<const double> x, const LpSpace& space);
double lp_dist(std::span<const double> x, std::span<const double> y,
               const LpSpace& space);

// (a_1 b, a_2 b, ..., a_m b).
std::vector<double> kronecker(std::span<const double> a, std::span<const double> b);

// Multiplies every coordinate and the claimed scale by c > 0.
PointSet scale_set(const PointSet& set, double c);

}  // namespace equilex
