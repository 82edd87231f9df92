#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxarc::gf2 {

/// Default upper bound on the dimension of a code whose words may be listed.
inline constexpr int kDefaultEnumerationCap = 28;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int dimension, int cap);
  int dimension() const { return dimension_; }
  int cap() const { return cap_; }

 private:
  int dimension_;
  int cap_;
};

/// Fixed-length binary vector packed into 64-bit words. Bits past length()
/// are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  BitVector() = default;
  explicit BitVector(int length);
  /// Vector of the given length with ones at the listed 0-based positions.
  static BitVector from_positions(int length, std::span<const int> positions);
  static BitVector all_ones(int length);

  int length() const { return length_; }
  bool get(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i, bool value = true);
  void flip(int i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  int weight() const;
  bool is_zero() const;
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;
  /// Index of the lowest set bit, or -1 for the zero vector.
  int first_set() const;
  std::vector<int> support() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  bool operator==(const BitVector& other) const = default;
  /// Ordering by length, then by bit string read from position 0.
  bool operator<(const BitVector& other) const;

  std::span<const Word> words() const { return words_; }
  std::string to_string() const;

 private:
  int length_ = 0;
  std::vector<Word> words_;
};

/// Dense binary matrix stored as packed rows. Row order is significant.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int n_rows, int n_cols);
  explicit BitMatrix(std::vector<BitVector> rows, int n_cols);

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return n_cols_; }
  const BitVector& row(int i) const { return rows_[i]; }
  BitVector& row(int i) { return rows_[i]; }
  const std::vector<BitVector>& rows() const { return rows_; }
  bool get(int r, int c) const { return rows_[r].get(c); }
  void set(int r, int c, bool value = true) { rows_[r].set(c, value); }
  void append_row(BitVector row);

  BitMatrix transpose() const;
  bool operator==(const BitMatrix& other) const = default;

 private:
  int n_cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Binary linear code held by its generator in reduced row-echelon form
/// (pivot columns increasing). Equal codes have identical generators.
class BinaryCode {
 public:
  BinaryCode() = default;
  /// Zero code of the given length.
  explicit BinaryCode(int length);

  int length() const { return length_; }
  int dimension() const { return generator_.n_rows(); }
  const BitMatrix& generator() const { return generator_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const BitVector& v) const;
  /// Reduces v modulo the code; zero iff v is a codeword.
  BitVector reduce(BitVector v) const;

  bool operator==(const BinaryCode& other) const {
    return length_ == other.length_ && generator_ == other.generator_;
  }

 private:
  friend BinaryCode row_space(const BitMatrix& m);
  int length_ = 0;
  BitMatrix generator_;
  std::vector<int> pivots_;
};

int rank(const BitMatrix& m);
BinaryCode row_space(const BitMatrix& m);
BinaryCode dual_code(const BinaryCode& c);

/// Lists every codeword of a code exactly once in Gray-code order, starting
/// with the zero vector. Single consumer.
class CodewordStream {
 public:
  explicit CodewordStream(const BinaryCode& code, int cap = kDefaultEnumerationCap);

  std::optional<BitVector> next();
  std::uint64_t size() const { return std::uint64_t{1} << code_.dimension(); }

 private:
  BinaryCode code_;
  BitVector current_;
  std::uint64_t index_ = 0;
};

std::vector<BitVector> enumerate_codewords(const BinaryCode& code,
                                           int cap = kDefaultEnumerationCap);

}  // namespace maxarc::gf2
