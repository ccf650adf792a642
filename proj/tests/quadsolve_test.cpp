#include <doctest.h>

#include <cmath>
#include <random>

#include "equilex/error.hpp"
#include "equilex/quadsolve.hpp"
#include "oracles.hpp"

using namespace equilex;

namespace {

std::vector<double> vec(const std::array<double, 2>& a) { return {a[0], a[1]}; }

void check_solution(const QuadSolution& q, double lambda, double tol) {
  const double p = q.p;
  const auto u = vec(q.u);
  const auto v = vec(q.v);
  CHECK(std::fabs(oracle::norm(u, p) - 1.0) < 1e-12);
  CHECK(std::fabs(oracle::norm(v, p) - 1.0) < 1e-12);
  CHECK(std::fabs(oracle::norm({u[0] + v[0], u[1] + v[1]}, p) - lambda) < tol);
  CHECK(std::fabs(oracle::norm({u[0] - v[0], u[1] - v[1]}, p) - lambda) < tol);
}

}  // namespace

TEST_CASE("lambda_of at the ends of the parameter range") {
  for (double p : {1.05, 1.3, 1.5, 1.9}) {
    CHECK(lambda_of(1.0, p) == doctest::Approx(std::pow(2.0, 1 / p)).epsilon(1e-14));
    CHECK(lambda_of(std::pow(2.0, -1 / p), p) ==
          doctest::Approx(std::pow(2.0, 1 - 1 / p)).epsilon(1e-12));
  }
}

TEST_CASE("lambda_of interior value") {
  // p = 1.5, s = 0.9: y = (1 - 0.9^1.5)^(2/3) evaluated directly
  const double p = 1.5;
  const double s = 0.9;
  const double y = std::pow(1.0 - std::pow(s, p), 1.0 / p);
  const double want = std::pow(std::pow(std::fabs(s - y), p) + std::pow(s + y, p), 1.0 / p);
  const double got = lambda_of(s, p);
  CHECK(got == doctest::Approx(want).epsilon(1e-14));
  CHECK(got > std::pow(2.0, 1.0 / 3.0));
  CHECK(got < std::pow(2.0, 2.0 / 3.0));
}

TEST_CASE("lambda_of rejects bad input") {
  CHECK_THROWS_AS(lambda_of(0.1, 1.5), RangeError);
  CHECK_THROWS_AS(lambda_of(1.01, 1.5), RangeError);
  CHECK_THROWS_AS(lambda_of(0.9, 2.0), DomainError);
}

TEST_CASE("solve_quad closed-form endpoints") {
  const double p = 1.5;
  const auto top = solve_quad(p, std::pow(2.0, 2.0 / 3.0));
  CHECK(top.u == std::array<double, 2>{1.0, 0.0});
  CHECK(top.v == std::array<double, 2>{0.0, 1.0});

  const auto bottom = solve_quad(p, std::pow(2.0, 1.0 / 3.0));
  const double c = std::pow(2.0, -2.0 / 3.0);
  CHECK(bottom.u[0] == doctest::Approx(c).epsilon(1e-15));
  CHECK(bottom.u[0] == bottom.u[1]);
  CHECK(bottom.v[0] == -bottom.u[0]);
  CHECK(bottom.v[1] == bottom.u[0]);
}

TEST_CASE("solve_quad interior: p = 1.2, lambda = 1.45") {
  const auto q = solve_quad(1.2, 1.45);
  check_solution(q, 1.45, 1e-10);
  CHECK(q.s >= std::pow(2.0, -1 / 1.2));
  CHECK(q.s <= 1.0);
}

TEST_CASE("solve_quad errors carry the admissible interval") {
  try {
    solve_quad(1.5, 1.7);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.lo() == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
    CHECK(e.hi() == doctest::Approx(std::pow(2.0, 2.0 / 3.0)));
  }
  CHECK_THROWS_AS(solve_quad(1.5, 1.0), RangeError);
  CHECK_THROWS_AS(solve_quad(2.0, 1.5), DomainError);
  CHECK_THROWS_AS(solve_quad(1.0, 1.5), DomainError);
  CHECK_THROWS_AS(solve_quad(2.5, 1.5), DomainError);
}

TEST_CASE("property: quarter-turn gives ||u + v|| = ||u - v||") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pick_p(1.01, 1.99);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = pick_p(rng);
    const double t = angle(rng);
    std::vector<double> u{std::cos(t), std::sin(t)};
    const double n = oracle::norm(u, p);
    u = {u[0] / n, u[1] / n};
    const std::vector<double> v{-u[1], u[0]};
    const double plus = oracle::norm({u[0] + v[0], u[1] + v[1]}, p);
    const double minus = oracle::norm({u[0] - v[0], u[1] - v[1]}, p);
    const double formula =
        std::pow(std::pow(std::fabs(u[0] - u[1]), p) + std::pow(std::fabs(u[0] + u[1]), p), 1 / p);
    CHECK(std::fabs(plus - minus) < 1e-14);
    CHECK(std::fabs(plus - formula) < 1e-14);
  }
}

TEST_CASE("property: solve_quad inverts lambda_of") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> pick_p(1.01, 1.99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = pick_p(rng);
    const double lo = std::pow(2.0, -1 / p);
    const double s = lo + (1.0 - lo) * unit(rng);
    const double lambda = lambda_of(s, p);
    const auto q = solve_quad(p, lambda);
    CHECK(std::fabs(lambda_of(q.s, p) - lambda) < 1e-11);
    check_solution(q, lambda, 1e-10);
  }
}
