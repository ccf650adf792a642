#include "equilex/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "equilex/error.hpp"

namespace equilex {

namespace {

// Upper end of the exponent interval served by a Hadamard matrix of order
// 2^k: 2 + log2(1 - 2^-(k+1)).
double block_p_upper(unsigned k) {
  return 2.0 + std::log2(1.0 - std::ldexp(1.0, -static_cast<int>(k) - 1));
}

void add(std::vector<Bound>& list, std::uint64_t value, const char* source) {
  list.push_back(Bound{value, source});
}

}  // namespace

unsigned k_of_p(double p) {
  if (!(p > 1.0 && p < 2.0)) {
    throw DomainError("block parameter needs 1 < p < 2, got p = " + std::to_string(p));
  }
  // The upper ends increase to 2, so the first k with p below its upper end
  // (up to slack) is the one.
  unsigned k = 1;
  while (k < 1000 && p > block_p_upper(k) + kExponentSlack) ++k;
  return k;
}

std::uint64_t theorem2_lower(unsigned k, std::uint64_t d) {
  if (k + 1 >= 64) return d;
  const std::uint64_t block = (std::uint64_t{1} << (k + 1)) - 1;
  return d + d / block;
}

double theorem3_max_p() { return std::log(2.5) / std::log(2.0); }

bool is_even_integer(double p) {
  return std::isfinite(p) && std::floor(p) == p && std::fmod(p, 2.0) == 0.0;
}

BoundsReport bounds_report(double p, std::uint64_t d) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
  if (d == 0) throw DomainError("dimension must be at least 1");

  BoundsReport r;
  r.p = p;
  r.d = d;
  auto& lo = r.lower_bounds;
  auto& up = r.upper_bounds;

  add(lo, d + 1, "simplex");
  if (p < 2.0) add(lo, theorem2_lower(k_of_p(p), d), "theorem2");
  if (d == 4 && p <= theorem3_max_p() + kExponentSlack) add(lo, 6, "theorem3");

  if (d == 1) add(up, 2, "exact_dim1");
  if (d == 2) {
    add(lo, 3, "exact_dim2");
    add(up, 3, "exact_dim2");
  }
  if (p == 2.0) {
    add(lo, d + 1, "exact_p2");
    add(up, d + 1, "exact_p2");
  }
  if (is_even_integer(p)) {
    const auto pi = static_cast<std::uint64_t>(p);
    const std::uint64_t half = pi / 2;
    const std::uint64_t t1 = (pi % 4 == 0) ? (half - 1) * d + 1 : half * d + 1;
    add(up, t1, "theorem1");
    add(up, 1 + (pi - 1) * d, "galvin");
  }
  if (d >= 2 && d <= 64) {
    const std::uint64_t petty =
        d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    add(up, petty, "petty");
  }

  for (const auto& b : lo) r.best_lower = std::max(r.best_lower, b.value);
  for (const auto& b : up) {
    r.best_upper = r.best_upper ? std::min(*r.best_upper, b.value) : b.value;
  }
  r.exact = r.best_upper && *r.best_upper == r.best_lower;

  r.notes.push_back(
      "Smyth: e < c p d^((p+1)/(p-1)) for an unspecified constant c > 0; not evaluated");
  r.notes.push_back(
      "Alon-Pudlak: e < c_p d^((2p+2)/(2p-1)) for an unspecified c_p > 0; not evaluated");
  const bool integral = std::floor(p) == p;
  if (integral && !is_even_integer(p)) {
    r.notes.push_back("odd integer p: e <= c_p d log d (Alon-Pudlak), constant unspecified");
  }
  if (!integral && std::fabs(p - 4.0) < 1.0) {
    r.notes.push_back(
        "e = d + 1 on some neighbourhood of p = 4 whose size is not quantified; "
        "exactness at this p is unknown");
  }
  if (p < 2.0 && d >= 3) {
    const unsigned k = k_of_p(p);
    if (k + 2 < 64) {
      const std::uint64_t threshold = (std::uint64_t{1} << (k + 2)) - 2;
      r.notes.push_back("Hadamard construction beats d + 1 from d >= " +
                        std::to_string(threshold) + " (k = " + std::to_string(k) + ")");
    }
  }
  if (!r.best_upper) {
    r.notes.push_back("no upper bound with explicit constants is available in this dimension");
  }
  return r;
}

}  // namespace equilex
