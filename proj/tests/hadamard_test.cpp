#include <doctest.h>

#include <random>
#include <sstream>

#include "equilex/error.hpp"
#include "equilex/hadamard.hpp"
#include "fixtures.hpp"

using namespace equilex;

namespace {

// H H^T computed entrywise in 64-bit integers.
bool gram_is_scaled_identity(const HadamardMatrix& h) {
  const std::size_t k = h.order();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < k; ++c) s += std::int64_t{h(i, c)} * h(j, c);
      if (s != (i == j ? std::int64_t(k) : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix flip_rows(const HadamardMatrix& h, const std::vector<bool>& flip) {
  auto e = h.entries();
  const std::size_t k = h.order();
  for (std::size_t i = 0; i < k; ++i) {
    if (!flip[i]) continue;
    for (std::size_t j = 0; j < k; ++j) e[i * k + j] = static_cast<std::int8_t>(-e[i * k + j]);
  }
  return HadamardMatrix(k, e);
}

}  // namespace

TEST_CASE("sylvester small orders") {
  const auto h0 = sylvester(0);
  CHECK(h0.order() == 1);
  CHECK(h0.entries() == std::vector<std::int8_t>{1});

  const auto h1 = sylvester(1);
  CHECK(h1.entries() == std::vector<std::int8_t>{1, 1, 1, -1});

  const auto h2 = sylvester(2);
  CHECK(h2.order() == 4);
  CHECK(gram_is_scaled_identity(h2));
}

TEST_CASE("sylvester size guard") {
  CHECK_THROWS_AS(sylvester(kMaxSylvesterExponent + 1), DomainError);
}

TEST_CASE("HadamardMatrix validates on construction") {
  CHECK_THROWS_AS(HadamardMatrix(2, {1, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(HadamardMatrix(2, {1, 1, 1, 0}), ValidationError);
  CHECK_THROWS_AS(HadamardMatrix(2, {1, 1, 1}), ValidationError);
  CHECK_NOTHROW(HadamardMatrix(2, {1, -1, 1, 1}));
}

TEST_CASE("normalize_first_column") {
  for (unsigned n = 0; n <= 4; ++n) CHECK(normalize_first_column(sylvester(n)) == sylvester(n));

  std::vector<bool> flip(4, false);
  flip[2] = true;
  const auto bad = flip_rows(sylvester(2), flip);
  CHECK_FALSE(bad.first_column_normalized());
  CHECK(normalize_first_column(bad) == sylvester(2));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<bool> f(8);
    for (std::size_t i = 0; i < 8; ++i) f[i] = rng() & 1;
    const auto norm = normalize_first_column(flip_rows(sylvester(3), f));
    CHECK(norm.first_column_normalized());
    CHECK(gram_is_scaled_identity(norm));
    CHECK(normalize_first_column(norm) == norm);
  }
}

TEST_CASE("reduced rows") {
  const auto r2 = reduced_rows(sylvester(1));
  REQUIRE(r2.rows.size() == 2);
  CHECK(r2.rows[0] == std::vector<std::int8_t>{1});
  CHECK(r2.rows[1] == std::vector<std::int8_t>{-1});

  // Column 0 of sylvester(2) deleted.
  const auto r4 = reduced_rows(sylvester(2));
  CHECK(r4.rows[0] == std::vector<std::int8_t>{1, 1, 1});
  CHECK(r4.rows[1] == std::vector<std::int8_t>{-1, 1, -1});
  CHECK(r4.rows[2] == std::vector<std::int8_t>{1, -1, -1});
  CHECK(r4.rows[3] == std::vector<std::int8_t>{-1, -1, 1});

  const auto r8 = reduced_rows(sylvester(3));
  int pairs = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      CHECK(hamming_distance(r8.rows[i], r8.rows[j]) == 4);
      ++pairs;
    }
  }
  CHECK(pairs == 28);

  std::vector<bool> flip(4, false);
  flip[1] = true;
  CHECK_THROWS_AS(reduced_rows(flip_rows(sylvester(2), flip)), ValidationError);
}

TEST_CASE("property: Sylvester exactness and reduced-row Hamming distances") {
  for (unsigned n = 0; n <= 10; ++n) {
    const auto h = sylvester(n);
    CHECK(gram_is_scaled_identity(h));
    if (n > 8) continue;
    const auto w = reduced_rows(h);
    const std::size_t k = h.order();
    bool all_half = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) all_half &= hamming_distance(w.rows[i], w.rows[j]) == k / 2;
    }
    CHECK(all_half);
  }
}

TEST_CASE("text format round trip and errors") {
  std::stringstream ss;
  write_hadamard(ss, sylvester(3));
  CHECK(read_hadamard(ss) == sylvester(3));

  // order-12 Paley matrix is accepted by the validator
  std::stringstream p12(kPaley12);
  const auto h12 = read_hadamard(p12);
  CHECK(h12.order() == 12);
  CHECK(gram_is_scaled_identity(h12));
  CHECK_FALSE(h12.first_column_normalized());
  const auto w12 = reduced_rows(normalize_first_column(h12));
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = i + 1; j < 12; ++j) CHECK(hamming_distance(w12.rows[i], w12.rows[j]) == 6);
  }

  std::stringstream bad_header("size 2\n1 1\n1 -1\n");
  CHECK_THROWS_AS(read_hadamard(bad_header), ParseError);
  std::stringstream short_body("order 2\n1 1\n1\n");
  CHECK_THROWS_AS(read_hadamard(short_body), ParseError);
  std::stringstream bad_entry("order 2\n1 1\n1 2\n");
  CHECK_THROWS_AS(read_hadamard(bad_entry), ParseError);
  std::stringstream not_hadamard("order 2\n1 1\n1 1\n");
  CHECK_THROWS_AS(read_hadamard(not_hadamard), ValidationError);
}
