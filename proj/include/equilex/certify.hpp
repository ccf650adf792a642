#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "equilex/lp_core.hpp"

namespace equilex {

// Validates that p is an even integer >= 2 and returns it. Throws DomainError
// otherwise: for odd or fractional p the distance polynomial is not a
// polynomial.
unsigned even_degree(double p);

// Coefficients of -1 + ||x - a||_p^p over the basis
//   [1; x_1 .. x_1^(p-1); x_2 .. x_2^(p-1); ...; x_d .. x_d^(p-1); sum_i x_i^p].
struct PolyCoeffVector {
  std::size_t dim = 0;
  unsigned degree = 0;
  double constant = 0.0;
  double power_sum_coeff = 0.0;
  std::vector<double> mono;  // dim x (degree - 1), row-major

  // Coefficient of x_i^m, i in [0, dim), m in [1, degree - 1].
  double at(std::size_t i, unsigned m) const { return mono[i * (degree - 1) + (m - 1)]; }

  std::vector<double> flatten() const;
};

inline std::size_t basis_size(std::size_t dim, unsigned degree) {
  return (degree - 1) * dim + 2;
}

// Values of the basis monomials at x, in the basis order above.
std::vector<double> basis_values(std::span<const double> x, unsigned degree);

PolyCoeffVector pa_coefficients(std::span<const double> a, double p);

// Power k of the extra monomials x_i^1..x_i^k: p/2 when 4 | p, p/2 - 1 otherwise.
unsigned extra_monomial_power(unsigned degree);

struct FamilyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t set_size = 0;
  std::size_t dim = 0;
  unsigned degree = 0;
  unsigned k = 0;
  std::vector<double> values;  // row-major

  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

// Rows: P_a for every point, then the constant 1, then x_i^m for i = 1..d,
// m = 1..k. The points are taken as given; no equilateral check.
FamilyMatrix family_matrix_of_points(const std::vector<Point>& points, std::size_t dim,
                                     double p);

// Rescales the set to pairwise distance 1 using the mean pairwise distance
// and builds the family. Throws ValidationError if the set is not
// equilateral within 1e-8 relative.
FamilyMatrix family_matrix(const PointSet& set, double p);

struct RankCertificate {
  std::size_t set_size = 0;
  std::size_t family_size = 0;
  std::size_t ambient_dim = 0;
  std::size_t numerical_rank = 0;
  unsigned k_used = 0;
  // sigma_rank / sigma_(rank+1); +inf when there is no sigma_(rank+1).
  double singular_value_gap = 0.0;
  double tolerance = 0.0;
  std::vector<double> singular_values;  // descending
  // ambient_dim - 1 - k d: the cardinality bound implied by independence.
  std::size_t implied_bound = 0;
  bool certified = false;
};

inline constexpr double kDefaultSvdTolerance = 1e-8;

// Numerical rank = number of singular values above tol * sigma_max.
RankCertificate rank_certificate(const FamilyMatrix& family, double tol = kDefaultSvdTolerance);

RankCertificate certify_rank(const PointSet& set, double p, double tol = kDefaultSvdTolerance);

}  // namespace equilex
