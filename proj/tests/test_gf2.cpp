#include <doctest.h>

#include <random>

#include "maxarc/gf2.hpp"
#include "oracles.hpp"

using namespace maxarc::gf2;

TEST_CASE("bit vector basics") {
  BitVector v(130);
  CHECK(v.is_zero());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.weight() == 3);
  CHECK(v.first_set() == 0);
  CHECK(v.support() == std::vector<int>{0, 64, 129});
  v.flip(0);
  CHECK(v.first_set() == 64);
  CHECK(BitVector::all_ones(130).weight() == 130);
  CHECK(v.dot(BitVector::all_ones(130)) == false);
  const std::vector<int> pos{3, 5};
  CHECK(BitVector::from_positions(8, pos).to_string() == "00010100");
}

TEST_CASE("rank agrees with naive elimination on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 40);
    const int cols = 1 + static_cast<int>(rng() % 60);
    const double density = trial % 3 == 0 ? 0.1 : 0.5;
    const auto m = oracle::random_matrix(rng, rows, cols, density);
    const BitMatrix bm = oracle::to_matrix(m, cols);
    const int expected = oracle::rank(m);
    CHECK(rank(bm) == expected);
    CHECK(rank(bm.transpose()) == expected);
  }
  auto m = oracle::random_matrix(rng, 40, 60, 0.5);
  CHECK(rank(oracle::to_matrix(m, 60)) == oracle::rank(m));
}

TEST_CASE("row space is in reduced echelon form with increasing pivots") {
  std::mt19937_64 rng(11);
  const auto m = oracle::random_matrix(rng, 20, 30, 0.3);
  const BinaryCode c = row_space(oracle::to_matrix(m, 30));
  for (int i = 0; i < c.dimension(); ++i) {
    const int p = c.pivots()[i];
    CHECK(c.generator().row(i).first_set() == p);
    if (i > 0) CHECK(p > c.pivots()[i - 1]);
    for (int j = 0; j < c.dimension(); ++j) CHECK(c.generator().get(j, p) == (i == j));
  }
  for (const auto& r : m) {
    BitVector v(30);
    for (int j = 0; j < 30; ++j)
      if (r[j]) v.set(j);
    CHECK(c.contains(v));
  }
}

TEST_CASE("dual code against brute-force orthogonal complement") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + trial;
    const auto m = oracle::random_matrix(rng, 4, n, 0.5);
    const BinaryCode c = row_space(oracle::to_matrix(m, n));
    const BinaryCode d = dual_code(c);
    CHECK(c.dimension() + d.dimension() == n);
    const auto expected = oracle::orthogonal_complement(m, n);
    CHECK((std::size_t{1} << d.dimension()) == expected.size());
    for (const auto& w : oracle::span(oracle::rows_of(d.generator()), n)) CHECK(expected.count(w));
    CHECK(dual_code(d) == c);
  }
}

TEST_CASE("codeword enumeration lists the span once each") {
  std::mt19937_64 rng(5);
  const auto m = oracle::random_matrix(rng, 9, 20, 0.4);
  const BinaryCode c = row_space(oracle::to_matrix(m, 20));
  const auto words = enumerate_codewords(c);
  const auto expected = oracle::span(oracle::rows_of(c.generator()), 20);
  REQUIRE(words.size() == expected.size());
  std::set<std::string> seen;
  for (const auto& w : words) {
    CHECK(c.contains(w));
    seen.insert(w.to_string());
  }
  CHECK(seen.size() == words.size());
}

TEST_CASE("enumeration refuses dimensions over the cap") {
  BitMatrix id(0, 30);
  for (int i = 0; i < 30; ++i) {
    BitVector v(30);
    v.set(i);
    id.append_row(v);
  }
  const BinaryCode c = row_space(id);
  CHECK_THROWS_AS(enumerate_codewords(c, 28), CapExceeded);
  CHECK_THROWS_AS(CodewordStream(c, 28), CapExceeded);
  CHECK(dual_code(c).dimension() == 0);
}

TEST_CASE("zero-dimensional code") {
  const BinaryCode c(7);
  CHECK(c.dimension() == 0);
  CHECK(enumerate_codewords(c).size() == 1);
  CHECK(dual_code(c).dimension() == 7);
}
