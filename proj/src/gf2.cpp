#include "maxarc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace maxarc::gf2 {

CapExceeded::CapExceeded(int dimension, int cap)
    : std::runtime_error("code dimension " + std::to_string(dimension) +
                         " exceeds enumeration cap " + std::to_string(cap)),
      dimension_(dimension),
      cap_(cap) {}

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(int length)
    : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {
  if (length < 0) throw std::invalid_argument("negative vector length");
}

BitVector BitVector::from_positions(int length, std::span<const int> positions) {
  BitVector v(length);
  for (int p : positions) v.set(p);
  return v;
}

BitVector BitVector::all_ones(int length) {
  BitVector v(length);
  for (auto& w : v.words_) w = ~Word{0};
  if (int tail = length % kWordBits; tail != 0) v.words_.back() = (Word{1} << tail) - 1;
  return v;
}

void BitVector::set(int i, bool value) {
  if (i < 0 || i >= length_) throw std::out_of_range("bit index out of range");
  const Word mask = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

int BitVector::weight() const {
  int w = 0;
  for (Word x : words_) w += std::popcount(x);
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

bool BitVector::dot(const BitVector& other) const {
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

int BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
  return -1;
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word x = words_[i];
    while (x != 0) {
      out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::operator<(const BitVector& other) const {
  if (length_ != other.length_) return length_ < other.length_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] == other.words_[i]) continue;
    // The lowest differing bit decides; a set bit there sorts first.
    const Word diff = words_[i] ^ other.words_[i];
    const Word low = diff & (~diff + 1);
    return (words_[i] & low) != 0;
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (int i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(int n_rows, int n_cols) : n_cols_(n_cols), rows_(n_rows, BitVector(n_cols)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, int n_cols)
    : n_cols_(n_cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.length() != n_cols_) throw std::invalid_argument("row length mismatch");
}

void BitMatrix::append_row(BitVector row) {
  if (row.length() != n_cols_) throw std::invalid_argument("row length mismatch");
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_cols_, n_rows());
  for (int r = 0; r < n_rows(); ++r)
    for (int c : rows_[r].support()) t.set(c, r);
  return t;
}

// --------------------------------------------------------------- BinaryCode

BinaryCode::BinaryCode(int length) : length_(length), generator_(0, length) {}

BitVector BinaryCode::reduce(BitVector v) const {
  for (int i = 0; i < dimension(); ++i)
    if (v.get(pivots_[i])) v ^= generator_.row(i);
  return v;
}

bool BinaryCode::contains(const BitVector& v) const {
  if (v.length() != length_) return false;
  return reduce(v).is_zero();
}

namespace {

// Reduced row-echelon form in place; returns pivot columns in row order.
std::vector<int> rref(std::vector<BitVector>& rows, int n_cols) {
  std::vector<int> pivots;
  int r = 0;
  const int n_rows = static_cast<int>(rows.size());
  for (int c = 0; c < n_cols && r < n_rows; ++c) {
    int p = r;
    while (p < n_rows && !rows[p].get(c)) ++p;
    if (p == n_rows) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < n_rows; ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

int rank(const BitMatrix& m) {
  // Forward elimination only; cheaper than full RREF.
  std::vector<BitVector> rows = m.rows();
  int r = 0;
  const int n_rows = m.n_rows();
  for (int c = 0; c < m.n_cols() && r < n_rows; ++c) {
    int p = r;
    while (p < n_rows && !rows[p].get(c)) ++p;
    if (p == n_rows) continue;
    std::swap(rows[r], rows[p]);
    for (int i = r + 1; i < n_rows; ++i)
      if (rows[i].get(c)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

BinaryCode row_space(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  BinaryCode code(m.n_cols());
  code.pivots_ = rref(rows, m.n_cols());
  code.generator_ = BitMatrix(std::move(rows), m.n_cols());
  return code;
}

BinaryCode dual_code(const BinaryCode& c) {
  const int n = c.length();
  std::vector<bool> is_pivot(n, false);
  for (int p : c.pivots()) is_pivot[p] = true;
  // For G in RREF, each free column f gives the kernel vector e_f + sum of
  // e_{pivot_i} over rows i with G[i][f] = 1.
  BitMatrix kernel(0, n);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (int i = 0; i < c.dimension(); ++i)
      if (c.generator().get(i, f)) v.set(c.pivots()[i]);
    kernel.append_row(std::move(v));
  }
  return row_space(kernel);
}

// ----------------------------------------------------------- CodewordStream

CodewordStream::CodewordStream(const BinaryCode& code, int cap)
    : code_(code), current_(code.length()) {
  if (code.dimension() > cap) throw CapExceeded(code.dimension(), cap);
}

std::optional<BitVector> CodewordStream::next() {
  if (index_ >= size()) return std::nullopt;
  if (index_ > 0) {
    // Gray code: step i flips generator row ctz(i).
    current_ ^= code_.generator().row(std::countr_zero(index_));
  }
  ++index_;
  return current_;
}

std::vector<BitVector> enumerate_codewords(const BinaryCode& code, int cap) {
  CodewordStream stream(code, cap);
  std::vector<BitVector> out;
  out.reserve(stream.size());
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace maxarc::gf2
