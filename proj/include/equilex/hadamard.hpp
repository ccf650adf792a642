#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace equilex {

// A square +-1 matrix with H H^T = k I, checked exactly on construction.
class HadamardMatrix {
 public:
  // Row-major entries. Throws ValidationError if the entries are not all +-1
  // or the rows are not pairwise orthogonal.
  HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries);

  std::size_t order() const noexcept { return order_; }
  std::int8_t operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  std::span<const std::int8_t> row(std::size_t i) const noexcept {
    return {entries_.data() + i * order_, order_};
  }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  bool first_column_normalized() const noexcept;

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<std::int8_t> entries_;
};

// The rows w_1..w_k of a normalized Hadamard matrix with the all-ones first
// column removed. Any two distinct rows differ in exactly k/2 places.
struct ReducedRows {
  std::size_t order = 0;
  std::vector<std::vector<std::int8_t>> rows;
};

// Exact check that the row-major +-1 matrix satisfies H H^T = order * I.
// Entries outside {+1, -1} make it return false.
bool is_hadamard(std::size_t order, std::span<const std::int8_t> entries);

inline constexpr unsigned kMaxSylvesterExponent = 20;

// H_0 = [1], H_{n+1} = [[H_n, H_n], [H_n, -H_n]]; order 2^n.
HadamardMatrix sylvester(unsigned n);

// Negates every row whose first entry is -1.
HadamardMatrix normalize_first_column(const HadamardMatrix& h);

// Throws ValidationError if h is not normalized.
ReducedRows reduced_rows(const HadamardMatrix& h);

std::size_t hamming_distance(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

// Text format: a line "order k" followed by k lines of k entries (+1/-1, 1/-1).
HadamardMatrix read_hadamard(std::istream& in);
HadamardMatrix read_hadamard_file(const std::string& path);
void write_hadamard(std::ostream& out, const HadamardMatrix& h);

}  // namespace equilex
