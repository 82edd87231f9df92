#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "maxarc/codes.hpp"
#include "maxarc/designs.hpp"
#include "oracles.hpp"

using namespace maxarc;
using gf2::BinaryCode;
using gf2::BitVector;

namespace {

Design denniston_design(int m, int s) { return design_from_arc(denniston_arc(Gf2mField(m), s)); }

}  // namespace

TEST_CASE("2-ranks of Denniston designs") {
  struct Case {
    int m, s, rank;
  };
  for (const Case c : {Case{2, 2, 9}, Case{3, 2, 19}, Case{4, 2, 41}}) {
    const Design d = denniston_design(c.m, c.s);
    const BinaryCode code = code_of_design(d);
    CHECK(code.dimension() == c.rank);
    CHECK(oracle::rank(oracle::rows_of(incidence_matrix(d))) == c.rank);
  }
}

TEST_CASE("weight distribution of the affine plane code") {
  const Design d = denniston_design(2, 2);
  const BinaryCode c = code_of_design(d);
  const auto wd = weight_distribution(c);
  const auto expected =
      oracle::weight_distribution(oracle::span(oracle::rows_of(c.generator()), 16), 16);
  for (int w = 0; w <= 16; ++w) CHECK(wd[w] == expected[w]);
  CHECK(wd[4] == 20);
  CHECK(wd.total() == 512);
  CHECK(minimum_distance(c) == 4);
  const BinaryCode dual = gf2::dual_code(c);
  CHECK(dual.dimension() == 7);
  CHECK(minimum_distance(dual) == 6);
}

TEST_CASE("MacWilliams transform agrees with enumeration") {
  std::mt19937_64 rng(17);
  // Every design code in reach with both sides small enough to list.
  for (int m = 2; m <= 3; ++m)
    for (int s = 1; s <= m; ++s) {
      const BinaryCode c = code_of_design(denniston_design(m, s));
      for (const BinaryCode& x : {c, gf2::dual_code(c)}) {
        if (x.dimension() > 20 || x.length() - x.dimension() > 20) continue;
        const auto direct = enumerate_weight_distribution(x);
        const auto via_dual =
            macwilliams_transform(enumerate_weight_distribution(gf2::dual_code(x)),
                                  x.length() - x.dimension());
        CHECK(direct == via_dual);
      }
    }
  // Random codes, including ones with odd weights.
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 20);
    const int k = 1 + static_cast<int>(rng() % std::min(n - 1, 20));
    const BinaryCode c = gf2::row_space(oracle::to_matrix(oracle::random_matrix(rng, k, n, 0.4), n));
    const BinaryCode dual = gf2::dual_code(c);
    if (dual.dimension() > 20) continue;
    CHECK(enumerate_weight_distribution(c) ==
          macwilliams_transform(enumerate_weight_distribution(dual), dual.dimension()));
  }
  // The dual codes of the PG(2,16) designs, in both directions.
  const BinaryCode big = code_of_design(denniston_design(4, 2));
  const BinaryCode small = gf2::dual_code(big);
  const auto small_wd = enumerate_weight_distribution(small);
  CHECK(macwilliams_transform(macwilliams_transform(small_wd, 11), 41) == small_wd);
}

TEST_CASE("weight distribution picks the smaller side") {
  const BinaryCode c = code_of_design(denniston_design(4, 2));
  CHECK_THROWS_AS(enumerate_weight_distribution(c), gf2::CapExceeded);
  const auto wd = weight_distribution(c);
  CHECK(wd[0] == 1);
  CHECK(wd[2] == 0);
  CHECK(wd[4] == 221);
  CHECK(wd.total() == (BigInt(1) << 41));
  for (int w = 1; w <= 52; w += 2) CHECK(wd[w] == 0);
  const auto dual = weight_distribution(gf2::dual_code(c));
  CHECK(dual.min_nonzero_weight() == 18);
  CHECK(dual[18] == 54);
  CHECK(weight_distribution(BinaryCode(9))[0] == 1);
  CHECK(weight_distribution(BinaryCode(9)).total() == 1);
}

TEST_CASE("low-weight search") {
  const Design d = denniston_design(3, 2);
  const BinaryCode c = code_of_design(d);
  const auto words = low_weight_codewords(c, 4);
  CHECK(words.size() == 63);
  std::set<std::vector<int>> blocks;
  for (const auto& b : d.blocks()) {
    std::vector<int> z;
    for (PointId p : b) z.push_back(p - 1);
    blocks.insert(z);
  }
  for (const auto& w : words) CHECK(blocks.count(w));
  CHECK(low_weight_codewords(c, 2).empty());
  CHECK(low_weight_codewords(c, 3).empty());
  CHECK_THROWS(low_weight_codewords(c, 5));
  CHECK_THROWS_AS(minimum_distance(BinaryCode(5)), ZeroCode);
}

TEST_CASE("rank bounds") {
  const RankBounds b = rank_bounds(16, 2, 2, 4, 6, true);
  CHECK(b.lower == 8);
  CHECK(b.upper == 11);
  CHECK(b.t == 2);
  const RankBounds p = rank_bounds(52, 4, 2, 4, 18, true);
  CHECK(p.lower <= 41);
  CHECK(p.upper == 46);
  CHECK(p.t == 8);
  const RankBounds q = rank_bounds(52, 4, 2, 2, 20, false);
  CHECK(q.upper == 51);
  CHECK(q.t == 9);
  CHECK_THROWS_AS(rank_bounds(50, 4, 2, 4, 18, true), InconsistentParameters);
  CHECK_THROWS_AS(rank_bounds(52, 4, 2, 3, 18, true), InconsistentParameters);
  CHECK_THROWS_AS(rank_bounds(52, 4, 2, 4, 20, true), InconsistentParameters);
  CHECK_THROWS_AS(rank_bounds(52, 4, 2, 4, 18, false), InconsistentParameters);
}

TEST_CASE("sphere packing") {
  CHECK(binomial(51, 2) == 1275);
  CHECK(binomial(5, 7) == 0);
  CHECK(sphere_packing_allows(52, 45, 4));
  CHECK_FALSE(sphere_packing_allows(50, 45, 3));
  CHECK_FALSE(sphere_packing_allows(51, 46, 3));
  CHECK_FALSE(punctured_sphere_packing_allows(51, 45, 4));
  CHECK_FALSE(punctured_sphere_packing_allows(52, 46, 4));
  CHECK(punctured_sphere_packing_allows(52, 45, 4));
  CHECK(sphere_packing_allows(7, 4, 3));
  CHECK_FALSE(sphere_packing_allows(7, 5, 3));
}

TEST_CASE("majority-logic decoding corrects every pattern within capacity for m = 2") {
  for (int s = 1; s <= 2; ++s) {
    const Design d = denniston_design(2, s);
    const int n = d.v();
    const int t = 2;
    CHECK(d.r() / 2 == t);
    const BinaryCode dual = gf2::dual_code(code_of_design(d));
    const auto words = gf2::enumerate_codewords(dual);

    for (const auto& c : words)
      for (int a = -1; a < n; ++a)
        for (int b = a; b < n; ++b) {
          if (a == b && a != -1) continue;
          BitVector r = c;
          if (a >= 0) r.flip(a);
          if (b >= 0) r.flip(b);
          const DecodeResult res = majority_logic_decode(d, r);
          CHECK(res.codeword == c);
          CHECK(res.corrected_positions.size() == static_cast<std::size_t>((a >= 0) + (b >= 0)));
        }

    // Every received word against the nearest-codeword oracle.
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      BitVector r(n);
      for (int j = 0; j < n; ++j)
        if (x >> j & 1) r.set(j);
      int best = n + 1;
      int ties = 0;
      const BitVector* nearest = nullptr;
      for (const auto& c : words) {
        const int dist = (r ^ c).weight();
        if (dist < best) {
          best = dist;
          ties = 1;
          nearest = &c;
        } else if (dist == best) {
          ++ties;
        }
      }
      if (best <= t) {
        REQUIRE(ties == 1);
        CHECK(majority_logic_decode(d, r).codeword == *nearest);
      } else {
        try {
          const DecodeResult res = majority_logic_decode(d, r);
          CHECK(dual.contains(res.codeword));
          CHECK((r ^ res.codeword).weight() <= t);
        } catch (const DecodingFailure&) {
        }
      }
    }
  }
}

TEST_CASE("majority-logic decoding on random patterns for m = 3") {
  std::mt19937_64 rng(23);
  for (int s = 1; s <= 2; ++s) {
    const Design d = denniston_design(3, s);
    const int n = d.v();
    const int t = 4;
    const BinaryCode dual = gf2::dual_code(code_of_design(d));
    const auto words = gf2::enumerate_codewords(dual);
    for (int trial = 0; trial < 10000; ++trial) {
      const BitVector& c = words[rng() % words.size()];
      BitVector r = c;
      const int errors = static_cast<int>(rng() % (t + 1));
      std::vector<int> pos(n);
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      for (int e = 0; e < errors; ++e) r.flip(pos[e]);
      const DecodeResult res = majority_logic_decode(d, r);
      CHECK(res.codeword == c);
      CHECK(static_cast<int>(res.corrected_positions.size()) == errors);
    }
  }
}

TEST_CASE("all-one word plus two errors") {
  const Design d = denniston_design(2, 2);
  BitVector r = BitVector::all_ones(16);
  r.flip(3);
  r.flip(11);
  const DecodeResult res = majority_logic_decode(d, r);
  CHECK(res.codeword == BitVector::all_ones(16));
  CHECK(res.corrected_positions == std::vector<int>{3, 11});
  CHECK_THROWS(majority_logic_decode(d, BitVector(15)));
}

TEST_CASE("minimum-weight words are blocks") {
  for (int m = 2; m <= 4; ++m) {
    const Design d = denniston_design(m, 2);
    const ConjectureReport r = check_conjecture(d);
    CHECK(r.min_distance == 4);
    CHECK(r.min_weight_count == d.b());
    CHECK(r.explicit_min_words == d.b());
    CHECK(r.all_min_words_are_blocks);
  }
}

TEST_CASE("code theorem clauses hold on every internal design") {
  for (int m = 2; m <= 4; ++m)
    for (int s = 1; s <= std::min(m, 2); ++s) {
      const Design d = denniston_design(m, s);
      const CodeTheoremReport r = verify_code_theorem(d);
      CHECK(r.passed());
      CHECK(r.d <= (1 << s));
      CHECK(r.rank + gf2::dual_code(code_of_design(d)).dimension() == d.v());
      // The dual of the PG(2,16) hyperoval has 120 points and a code too
      // large on both sides to list.
      if (s < m && m < 4) {
        const Design dd = design_from_arc(dual_arc(denniston_arc(Gf2mField(m), s)));
        CHECK(verify_code_theorem(dd).passed());
      }
    }
  const CodeTheoremReport r = verify_code_theorem(denniston_design(2, 2));
  CHECK(r.d_perp == 6);
  CHECK(r.bounds.lower == 8);
  CHECK(r.bounds.upper == 11);
}

TEST_CASE("factorization and printing") {
  CHECK(factorize(BigInt(68)) == "2^2 17^1");
  CHECK(factorize(BigInt(408)) == "2^3 3^1 17^1");
  CHECK(factorize(BigInt(97)) == "97^1");
  CHECK(to_string(BigInt(1) << 70) == "1180591620717411303424");
}
