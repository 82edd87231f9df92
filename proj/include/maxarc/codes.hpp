#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxarc/designs.hpp"
#include "maxarc/gf2.hpp"

namespace maxarc {

using BigInt = boost::multiprecision::cpp_int;

class ZeroCode : public std::runtime_error {
 public:
  ZeroCode() : std::runtime_error("the zero code has no minimum distance") {}
};

class DecodingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Exact counts A_0..A_n of codewords by weight.
struct WeightDistribution {
  std::vector<BigInt> counts;

  int length() const { return static_cast<int>(counts.size()) - 1; }
  const BigInt& operator[](int w) const { return counts[w]; }
  BigInt total() const;
  /// Smallest nonzero weight with a codeword, or 0 if there is none.
  int min_nonzero_weight() const;
  bool operator==(const WeightDistribution&) const = default;
};

/// b x v incidence matrix; row i is block i+1, column j is point j+1.
gf2::BitMatrix incidence_matrix(const Design& d);
gf2::BinaryCode code_of_design(const Design& d);

/// Counts by listing the code, or the dual plus the MacWilliams transform
/// when only the dual is small enough.
WeightDistribution weight_distribution(const gf2::BinaryCode& c,
                                       int cap = gf2::kDefaultEnumerationCap);
WeightDistribution enumerate_weight_distribution(const gf2::BinaryCode& c,
                                                 int cap = gf2::kDefaultEnumerationCap);
/// Weight distribution of the dual of a code of length n and dimension k
/// with distribution a.
WeightDistribution macwilliams_transform(const WeightDistribution& a, int k);

/// All codewords of weight w (1 <= w <= 4), found as sets of w columns of a
/// parity-check matrix summing to zero. Returned as sorted supports.
std::vector<std::vector<int>> low_weight_codewords(const gf2::BinaryCode& c, int w);

int minimum_distance(const gf2::BinaryCode& c, int cap = gf2::kDefaultEnumerationCap);

struct RankBounds {
  int lower = 0;
  int upper = 0;
  int t = 0;
  int d = 0;
  bool operator==(const RankBounds&) const = default;
};

/// Sphere-packing bounds on the 2-rank of a design from a degree-2^s maximal
/// arc in a plane of order 2^m, given the minimum distances of its code and
/// dual code.
RankBounds rank_bounds(int n, int m, int s, int d, int d_perp, bool has_hyperoval);

BigInt binomial(int n, int k);
/// Whether 2^k * V(n, floor((d-1)/2)) <= 2^n.
bool sphere_packing_allows(int n, int k, int d);
/// The same bound applied to the [n-1, k, d-1] punctured code.
bool punctured_sphere_packing_allows(int n, int k, int d);

struct DecodeResult {
  gf2::BitVector codeword;
  /// 0-based coordinates flipped by the decoder.
  std::vector<int> corrected_positions;
};

/// One round of threshold decoding for the dual code of a design: flip a
/// coordinate when a strict majority of the blocks through it have odd
/// parity. Throws DecodingFailure when the result is not in the dual code
/// or more than floor(r/2) positions were flipped.
DecodeResult majority_logic_decode(const Design& d, const gf2::BitVector& received);

struct ConjectureReport {
  int min_distance = 0;
  BigInt min_weight_count = 0;
  int blocks = 0;
  /// Minimum-weight words found by explicit search (d <= 4 only).
  int explicit_min_words = -1;
  bool all_min_words_are_blocks = false;
};

/// Whether the minimum-weight words of the design's code are exactly the
/// block incidence vectors.
ConjectureReport check_conjecture(const Design& d, int cap = gf2::kDefaultEnumerationCap);

struct CodeTheoremReport {
  int n = 0, m = 0, s = 0;
  int rank = 0;
  int d = 0;
  int d_perp = 0;
  BigInt a_d_perp = 0;
  int hyperovals = 0;
  RankBounds bounds;
  std::vector<std::pair<std::string, bool>> clauses;
  bool passed() const;
};

/// Checks the all-one vector, minimum distance, hyperoval and rank-bound
/// statements for a design from a degree-2^s arc in a plane of order 2^m.
/// Throws TheoremViolation naming the first failing clause.
CodeTheoremReport verify_code_theorem(const Design& d, int cap = gf2::kDefaultEnumerationCap);

/// Prime factorization as "2^3 3^1 17^1".
std::string factorize(const BigInt& n);
std::string to_string(const BigInt& n);

}  // namespace maxarc
