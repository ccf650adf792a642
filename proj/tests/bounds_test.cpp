#include <doctest.h>

#include <cmath>

#include "equilex/bounds.hpp"
#include "equilex/error.hpp"

using namespace equilex;

namespace {

const double kLog3 = std::log(3.0) / std::log(2.0);

unsigned k_formula(double p) {
  return static_cast<unsigned>(std::ceil(std::log(1.0 / (1.0 - std::pow(2.0, p - 2))) / std::log(2.0))) - 1;
}

bool has(const std::vector<Bound>& list, const char* source) {
  for (const auto& b : list) {
    if (b.source == source) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("k_of_p") {
  CHECK(k_of_p(1.5) == 1);
  CHECK(k_of_p(kLog3) == 1);
  CHECK(k_of_p(1.9) == 3);
  CHECK(k_of_p(1.7) == 2);
  CHECK(k_of_p(1.0001) == 1);
  CHECK_THROWS_AS(k_of_p(2.0), DomainError);
  CHECK_THROWS_AS(k_of_p(1.0), DomainError);
  // the closed-form ceiling agrees away from the interval ends
  for (double p = 1.01; p < 1.995; p += 0.0137) CHECK(k_of_p(p) == k_formula(p));
}

TEST_CASE("bounds_report examples") {
  const auto r45 = bounds_report(4, 5);
  CHECK(r45.exact);
  CHECK(r45.best_lower == 6);
  CHECK(r45.best_upper == 6u);

  const auto r65 = bounds_report(6, 5);
  CHECK(r65.best_upper == 16u);
  CHECK(r65.best_lower == 6);
  CHECK_FALSE(r65.exact);

  const auto r156 = bounds_report(1.5, 6);
  CHECK(r156.best_lower == 8);
  CHECK(r156.best_upper == 63u);
  CHECK(has(r156.lower_bounds, "theorem2"));
  CHECK(has(r156.upper_bounds, "petty"));

  const auto line = bounds_report(3.3, 1);
  CHECK(line.exact);
  CHECK(line.best_lower == 2);

  const auto plane = bounds_report(1.7, 2);
  CHECK(plane.exact);
  CHECK(plane.best_lower == 3);

  const auto euclid = bounds_report(2.0, 9);
  CHECK(euclid.exact);
  CHECK(euclid.best_lower == 10);

  const auto t3 = bounds_report(1.2, 4);
  CHECK(t3.best_lower == 6);
  CHECK(has(t3.lower_bounds, "theorem3"));
  CHECK_FALSE(has(bounds_report(1.5, 4).lower_bounds, "theorem3"));

  CHECK_THROWS_AS(bounds_report(1.0, 3), DomainError);
  CHECK_THROWS_AS(bounds_report(3.0, 0), DomainError);
}

TEST_CASE("even p detection is exact") {
  CHECK(is_even_integer(4.0));
  CHECK_FALSE(is_even_integer(4.0000000001));
  CHECK_FALSE(has(bounds_report(4.0000000001, 5).upper_bounds, "theorem1"));
  CHECK(has(bounds_report(8.0, 5).upper_bounds, "theorem1"));
}

TEST_CASE("notes") {
  const auto r = bounds_report(3.9, 5);
  bool near4 = false;
  for (const auto& n : r.notes) near4 |= n.find("p = 4") != std::string::npos;
  CHECK(near4);
  CHECK_FALSE(r.exact);
  CHECK(r.notes.size() >= 2);  // Smyth, Alon-Pudlak

  const auto huge = bounds_report(1.5, 100);
  CHECK_FALSE(huge.best_upper);
  CHECK(huge.best_lower == 133);
}

TEST_CASE("property: bounds coherence") {
  for (double p : {1.1, 1.2, 1.3, 1.4, 1.5, kLog3, 1.6, 1.7, 1.8, 1.9}) {
    const unsigned k = k_of_p(p);
    const std::uint64_t threshold = (std::uint64_t{1} << (k + 2)) - 2;
    for (std::uint64_t d = 1; d <= 64; ++d) {
      const auto r = bounds_report(p, d);
      CHECK(r.best_lower >= d + 1);
      REQUIRE(r.best_upper);
      CHECK(r.best_lower <= *r.best_upper);
      if (d < 64) CHECK(r.best_lower <= bounds_report(p, d + 1).best_lower);
      CHECK((theorem2_lower(k, d) > d + 1) == (d >= threshold));
    }
  }
  for (unsigned p = 4; p <= 20; p += 2) {
    for (std::uint64_t d = 1; d <= 64; ++d) {
      const auto r = bounds_report(p, d);
      std::uint64_t t1 = 0;
      std::uint64_t galvin = 0;
      for (const auto& b : r.upper_bounds) {
        if (b.source == "theorem1") t1 = b.value;
        if (b.source == "galvin") galvin = b.value;
      }
      CHECK(t1 <= galvin);
      if (p == 4) {
        CHECK(t1 == d + 1);
        CHECK(r.exact);
      }
    }
  }
}
