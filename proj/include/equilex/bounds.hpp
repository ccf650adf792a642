#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace equilex {

// Slack used when deciding whether a floating-point exponent sits on the
// closed end of an admissible interval (log 3 / log 2 and friends are not
// representable exactly).
inline constexpr double kExponentSlack = 1e-12;

// Block parameter k >= 1 of the Hadamard lift for 1 < p < 2: the unique k
// with 2 + log2(1 - 2^-k) < p <= 2 + log2(1 - 2^-(k+1)).
// Throws DomainError outside (1, 2).
unsigned k_of_p(double p);

// floor(2^(k+1) d / (2^(k+1) - 1)) computed in integers.
std::uint64_t theorem2_lower(unsigned k, std::uint64_t d);

// Largest p for which the four-dimensional six-point set exists:
// log(5/2) / log 2.
double theorem3_max_p();

// True iff p is exactly an even integer.
bool is_even_integer(double p);

struct Bound {
  std::uint64_t value = 0;
  std::string source;

  friend bool operator==(const Bound&, const Bound&) = default;
};

struct BoundsReport {
  double p = 0.0;
  std::uint64_t d = 0;
  std::vector<Bound> lower_bounds;
  std::vector<Bound> upper_bounds;
  std::uint64_t best_lower = 0;
  // Empty when no bound with an explicit constant applies (odd or fractional
  // p in dimension above 64, where 2^d - 1 no longer fits).
  std::optional<std::uint64_t> best_upper;
  bool exact = false;
  std::vector<std::string> notes;
};

// Every explicit bound on the largest equilateral set in l_p^d.
// Throws DomainError unless p > 1 is finite and d >= 1.
BoundsReport bounds_report(double p, std::uint64_t d);

}  // namespace equilex
