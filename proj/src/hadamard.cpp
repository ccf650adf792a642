#include "equilex/hadamard.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "equilex/error.hpp"

namespace equilex {

bool is_hadamard(std::size_t order, std::span<const std::int8_t> entries) {
  if (order == 0 || entries.size() != order * order) return false;
  for (auto e : entries) {
    if (e != 1 && e != -1) return false;
  }
  const auto k = static_cast<std::int64_t>(order);
  for (std::size_t i = 0; i < order; ++i) {
    const std::int8_t* ri = entries.data() + i * order;
    for (std::size_t j = i; j < order; ++j) {
      const std::int8_t* rj = entries.data() + j * order;
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < order; ++c) dot += ri[c] * rj[c];
      if (dot != (i == j ? k : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (!is_hadamard(order_, entries_)) {
    throw ValidationError("matrix of order " + std::to_string(order_) +
                          " is not Hadamard (H H^T != k I)");
  }
}

bool HadamardMatrix::first_column_normalized() const noexcept {
  for (std::size_t i = 0; i < order_; ++i) {
    if ((*this)(i, 0) != 1) return false;
  }
  return true;
}

HadamardMatrix sylvester(unsigned n) {
  if (n > kMaxSylvesterExponent) {
    throw DomainError("Sylvester exponent " + std::to_string(n) + " exceeds limit " +
                      std::to_string(kMaxSylvesterExponent));
  }
  std::vector<std::int8_t> h{1};
  std::size_t order = 1;
  for (unsigned step = 0; step < n; ++step) {
    const std::size_t next = 2 * order;
    std::vector<std::int8_t> g(next * next);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        const std::int8_t e = h[i * order + j];
        g[i * next + j] = e;
        g[i * next + j + order] = e;
        g[(i + order) * next + j] = e;
        g[(i + order) * next + j + order] = static_cast<std::int8_t>(-e);
      }
    }
    h = std::move(g);
    order = next;
  }
  return HadamardMatrix(order, std::move(h));
}

HadamardMatrix normalize_first_column(const HadamardMatrix& h) {
  const std::size_t k = h.order();
  std::vector<std::int8_t> e = h.entries();
  for (std::size_t i = 0; i < k; ++i) {
    if (e[i * k] == -1) {
      for (std::size_t j = 0; j < k; ++j) e[i * k + j] = static_cast<std::int8_t>(-e[i * k + j]);
    }
  }
  return HadamardMatrix(k, std::move(e));
}

ReducedRows reduced_rows(const HadamardMatrix& h) {
  if (!h.first_column_normalized()) {
    throw ValidationError("reduced rows need a Hadamard matrix whose first column is all +1");
  }
  ReducedRows out;
  out.order = h.order();
  out.rows.reserve(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    auto r = h.row(i);
    out.rows.emplace_back(r.begin() + 1, r.end());
  }
  return out;
}

std::size_t hamming_distance(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  if (a.size() != b.size()) throw DimensionError("rows of different length");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += (a[i] != b[i]);
  return n;
}

HadamardMatrix read_hadamard(std::istream& in) {
  std::string keyword;
  long long order = 0;
  if (!(in >> keyword >> order) || keyword != "order" || order <= 0) {
    throw ParseError("Hadamard file must start with 'order k'");
  }
  const auto k = static_cast<std::size_t>(order);
  std::vector<std::int8_t> entries;
  entries.reserve(k * k);
  for (std::size_t n = 0; n < k * k; ++n) {
    long long v = 0;
    if (!(in >> v)) {
      throw ParseError("Hadamard file ended after " + std::to_string(n) + " of " +
                       std::to_string(k * k) + " entries");
    }
    if (v != 1 && v != -1) throw ParseError("Hadamard entries must be +1 or -1");
    entries.push_back(static_cast<std::int8_t>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after Hadamard matrix: " + extra);
  return HadamardMatrix(k, std::move(entries));
}

HadamardMatrix read_hadamard_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_hadamard(in);
}

void write_hadamard(std::ostream& out, const HadamardMatrix& h) {
  out << "order " << h.order() << '\n';
  for (std::size_t i = 0; i < h.order(); ++i) {
    for (std::size_t j = 0; j < h.order(); ++j) {
      if (j) out << ' ';
      out << (h(i, j) > 0 ? "+1" : "-1");
    }
    out << '\n';
  }
}

}  // namespace equilex
