#include "equilex/certify.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "equilex/error.hpp"
#include "equilex/verify.hpp"

namespace equilex {

namespace {

constexpr double kHypothesisTolerance = 1e-8;

double binomial(unsigned n, unsigned r) {
  double c = 1.0;
  for (unsigned i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return std::round(c);
}

double int_pow(double x, unsigned e) {
  double r = 1.0;
  while (e--) r *= x;
  return r;
}

}  // namespace

unsigned even_degree(double p) {
  if (!(p >= 2.0) || !std::isfinite(p) || std::floor(p) != p || std::fmod(p, 2.0) != 0.0 ||
      p > 1000.0) {
    throw DomainError("rank certificate needs an even integer p >= 2, got " + std::to_string(p));
  }
  return static_cast<unsigned>(p);
}

unsigned extra_monomial_power(unsigned degree) {
  return degree % 4 == 0 ? degree / 2 : degree / 2 - 1;
}

std::vector<double> PolyCoeffVector::flatten() const {
  std::vector<double> out;
  out.reserve(basis_size(dim, degree));
  out.push_back(constant);
  out.insert(out.end(), mono.begin(), mono.end());
  out.push_back(power_sum_coeff);
  return out;
}

std::vector<double> basis_values(std::span<const double> x, unsigned degree) {
  std::vector<double> out;
  out.reserve(basis_size(x.size(), degree));
  out.push_back(1.0);
  double power_sum = 0.0;
  for (double xi : x) {
    double t = 1.0;
    for (unsigned m = 1; m < degree; ++m) {
      t *= xi;
      out.push_back(t);
    }
    power_sum += t * xi;
  }
  out.push_back(power_sum);
  return out;
}

PolyCoeffVector pa_coefficients(std::span<const double> a, double p) {
  const unsigned deg = even_degree(p);
  PolyCoeffVector c;
  c.dim = a.size();
  c.degree = deg;
  c.power_sum_coeff = 1.0;
  double norm_pow = 0.0;
  c.mono.reserve(a.size() * (deg - 1));
  for (double ai : a) {
    norm_pow += int_pow(ai, deg);
    for (unsigned m = 1; m < deg; ++m) {
      c.mono.push_back(binomial(deg, m) * int_pow(-ai, deg - m));
    }
  }
  c.constant = -1.0 + norm_pow;
  return c;
}

FamilyMatrix family_matrix_of_points(const std::vector<Point>& points, std::size_t dim,
                                     double p) {
  const unsigned deg = even_degree(p);
  FamilyMatrix f;
  f.set_size = points.size();
  f.dim = dim;
  f.degree = deg;
  f.k = extra_monomial_power(deg);
  f.cols = basis_size(dim, deg);
  f.rows = points.size() + 1 + static_cast<std::size_t>(f.k) * dim;
  f.values.assign(f.rows * f.cols, 0.0);

  std::size_t row = 0;
  for (const auto& a : points) {
    if (a.size() != dim) throw DimensionError("point of wrong dimension in family matrix");
    const auto coeffs = pa_coefficients(a, p).flatten();
    std::copy(coeffs.begin(), coeffs.end(), f.values.begin() + static_cast<std::ptrdiff_t>(row * f.cols));
    ++row;
  }
  f.values[row * f.cols] = 1.0;
  ++row;
  for (std::size_t i = 0; i < dim; ++i) {
    for (unsigned m = 1; m <= f.k; ++m) {
      f.values[row * f.cols + 1 + i * (deg - 1) + (m - 1)] = 1.0;
      ++row;
    }
  }
  return f;
}

FamilyMatrix family_matrix(const PointSet& set, double p) {
  even_degree(p);
  const PointSet probe = set.with_exponent(p);
  const EquilateralReport rep = check_equilateral(probe, kHypothesisTolerance);
  if (!rep.pass) {
    throw ValidationError("set is not equilateral in l_" + std::to_string(p) +
                          " (max relative deviation " + std::to_string(rep.max_rel_dev) + ")");
  }
  const PointSet unit = scale_set(probe, 1.0 / rep.scale_estimate);
  return family_matrix_of_points(unit.points(), unit.dim(), p);
}

RankCertificate rank_certificate(const FamilyMatrix& family, double tol) {
  if (!(tol > 0.0)) throw DomainError("singular value tolerance must be positive");
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(family.values.data(), static_cast<Eigen::Index>(family.rows),
        static_cast<Eigen::Index>(family.cols));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();

  RankCertificate c;
  c.set_size = family.set_size;
  c.family_size = family.rows;
  c.ambient_dim = family.cols;
  c.k_used = family.k;
  c.tolerance = tol;
  c.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sigma_max) ++c.numerical_rank;
  }
  const auto r = static_cast<Eigen::Index>(c.numerical_rank);
  if (r == 0) {
    c.singular_value_gap = 0.0;
  } else if (r >= sv.size()) {
    c.singular_value_gap = std::numeric_limits<double>::infinity();
  } else {
    c.singular_value_gap = sv(r) > 0.0 ? sv(r - 1) / sv(r) : std::numeric_limits<double>::infinity();
  }
  const std::size_t extra = 1 + static_cast<std::size_t>(family.k) * family.dim;
  c.implied_bound = family.cols >= extra ? family.cols - extra : 0;
  c.certified = c.numerical_rank == c.family_size && c.family_size <= c.ambient_dim;
  return c;
}

RankCertificate certify_rank(const PointSet& set, double p, double tol) {
  return rank_certificate(family_matrix(set, p), tol);
}

}  // namespace equilex
