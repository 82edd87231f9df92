#include "maxarc/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace maxarc {

using gf2::BinaryCode;
using gf2::BitMatrix;
using gf2::BitVector;

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

int WeightDistribution::min_nonzero_weight() const {
  for (int w = 1; w <= length(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

BitMatrix incidence_matrix(const Design& d) {
  BitMatrix a(d.b(), d.v());
  for (int i = 0; i < d.b(); ++i)
    for (PointId p : d.blocks()[i]) a.set(i, p - 1);
  return a;
}

BinaryCode code_of_design(const Design& d) { return gf2::row_space(incidence_matrix(d)); }

WeightDistribution enumerate_weight_distribution(const BinaryCode& c, int cap) {
  if (c.dimension() > cap) throw gf2::CapExceeded(c.dimension(), cap);
  const int n = c.length();
  std::vector<std::uint64_t> counts(n + 1, 0);
  BitVector current(n);
  const std::uint64_t total = std::uint64_t{1} << c.dimension();
  counts[0] = 1;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= c.generator().row(std::countr_zero(i));
    ++counts[current.weight()];
  }
  WeightDistribution wd;
  wd.counts.assign(counts.begin(), counts.end());
  return wd;
}

WeightDistribution macwilliams_transform(const WeightDistribution& a, int k) {
  const int n = a.length();
  std::vector<BigInt> acc(n + 1, 0);
  std::vector<BigInt> kraw(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.counts[i] == 0) continue;
    // Krawtchouk values K_j(i) for j = 0..n by the three-term recurrence
    // (j+1) K_{j+1} = (n-2i) K_j - (n-j+1) K_{j-1}.
    kraw[0] = 1;
    if (n >= 1) kraw[1] = n - 2 * i;
    for (int j = 1; j < n; ++j) {
      BigInt next = BigInt(n - 2 * i) * kraw[j] - BigInt(n - j + 1) * kraw[j - 1];
      kraw[j + 1] = next / (j + 1);
    }
    for (int j = 0; j <= n; ++j) acc[j] += a.counts[i] * kraw[j];
  }
  WeightDistribution out;
  out.counts.resize(n + 1);
  const BigInt size = BigInt(1) << k;
  for (int j = 0; j <= n; ++j) {
    if (acc[j] < 0 || acc[j] % size != 0)
      throw std::logic_error("MacWilliams transform produced a non-integral count");
    out.counts[j] = acc[j] / size;
  }
  return out;
}

WeightDistribution weight_distribution(const BinaryCode& c, int cap) {
  if (c.dimension() <= cap) return enumerate_weight_distribution(c, cap);
  const int dual_dim = c.length() - c.dimension();
  if (dual_dim > cap) throw gf2::CapExceeded(std::min(c.dimension(), dual_dim), cap);
  return macwilliams_transform(enumerate_weight_distribution(gf2::dual_code(c), cap), dual_dim);
}

std::vector<std::vector<int>> low_weight_codewords(const BinaryCode& c, int w) {
  if (w < 1 || w > 4) throw std::invalid_argument("low-weight search supports weights 1..4");
  const int n = c.length();
  // Column j of a parity-check matrix; codewords are column sets summing to 0.
  const BitMatrix cols = gf2::dual_code(c).generator().transpose();
  const auto& h = cols.rows();
  std::vector<std::vector<int>> out;
  if (h.empty()) return out;

  std::map<BitVector, std::vector<int>> by_value;
  for (int j = 0; j < n; ++j) by_value[h[j]].push_back(j);

  if (w == 1) {
    for (int j = 0; j < n; ++j)
      if (h[j].is_zero()) out.push_back({j});
  } else if (w == 2) {
    for (const auto& [value, idx] : by_value)
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) out.push_back({idx[a], idx[b]});
  } else if (w == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto it = by_value.find(h[i] ^ h[j]);
        if (it == by_value.end()) continue;
        for (int l : it->second)
          if (l > j) out.push_back({i, j, l});
      }
  } else {
    // Each 4-set a<b<c<d is counted once through the split {a,b} | {c,d}.
    std::map<BitVector, std::vector<std::pair<int, int>>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs[h[i] ^ h[j]].emplace_back(i, j);
    for (const auto& [value, list] : pairs)
      for (const auto& [a, b] : list)
        for (const auto& [c2, d2] : list)
          if (b < c2) out.push_back({a, b, c2, d2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int minimum_distance(const BinaryCode& c, int cap) {
  if (c.dimension() == 0) throw ZeroCode();
  if (std::min(c.dimension(), c.length() - c.dimension()) <= cap)
    return weight_distribution(c, cap).min_nonzero_weight();
  for (int w = 1; w <= 4; ++w)
    if (!low_weight_codewords(c, w).empty()) return w;
  throw gf2::CapExceeded(std::min(c.dimension(), c.length() - c.dimension()), cap);
}

// ------------------------------------------------------------- rank bounds

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

int floor_log2(const BigInt& x) { return static_cast<int>(boost::multiprecision::msb(x)); }

int ceil_log2(const BigInt& x) {
  const int f = floor_log2(x);
  return (BigInt(1) << f) == x ? f : f + 1;
}

BigInt ball_volume(int n, int radius) {
  BigInt v = 0;
  for (int i = 0; i <= radius; ++i) v += binomial(n, i);
  return v;
}

}  // namespace

RankBounds rank_bounds(int n, int m, int s, int d, int d_perp, bool has_hyperoval) {
  if (m < s || s < 1) throw InconsistentParameters("need m >= s >= 1");
  if (n != (1 << (m + s)) - (1 << m) + (1 << s))
    throw InconsistentParameters("length does not match 2^(m+s) - 2^m + 2^s");
  if (d < 2 || d % 2 != 0 || d > (1 << s))
    throw InconsistentParameters("d must be even and at most 2^s");
  if (d_perp % 2 != 0) throw InconsistentParameters("dual distance must be even");
  const int hyperoval_distance = (1 << m) + 2;
  RankBounds rb;
  rb.d = d;
  if (has_hyperoval) {
    if (d_perp != hyperoval_distance)
      throw InconsistentParameters("a design with hyperovals has dual distance 2^m + 2");
    rb.t = 1 << (m - 1);
  } else {
    if (d_perp < hyperoval_distance + 2)
      throw InconsistentParameters("without hyperovals the dual distance is at least 2^m + 4");
    rb.t = d_perp / 2 - 1;
  }
  rb.lower = 1 + ceil_log2(ball_volume(n - 1, rb.t));
  rb.upper = n - 1 - floor_log2(ball_volume(n - 1, d / 2 - 1));
  return rb;
}

bool sphere_packing_allows(int n, int k, int d) {
  return (BigInt(1) << k) * ball_volume(n, (d - 1) / 2) <= (BigInt(1) << n);
}

bool punctured_sphere_packing_allows(int n, int k, int d) {
  return sphere_packing_allows(n - 1, k, d - 1);
}

// ---------------------------------------------------------------- decoding

DecodeResult majority_logic_decode(const Design& d, const BitVector& received) {
  if (received.length() != d.v()) throw std::invalid_argument("received word has wrong length");
  std::vector<char> odd(d.b() + 1, 0);
  for (int id = 1; id <= d.b(); ++id) {
    int parity = 0;
    for (PointId p : d.block(id)) parity ^= received.get(p - 1) ? 1 : 0;
    odd[id] = static_cast<char>(parity);
  }
  DecodeResult res{received, {}};
  for (PointId p = 1; p <= d.v(); ++p) {
    int failed = 0;
    for (int id : d.blocks_through(p)) failed += odd[id];
    const int checks = static_cast<int>(d.blocks_through(p).size());
    if (2 * failed > checks) {
      res.codeword.flip(p - 1);
      res.corrected_positions.push_back(p - 1);
    }
  }
  const int t = d.r() / 2;
  if (static_cast<int>(res.corrected_positions.size()) > t)
    throw DecodingFailure("decoder flipped " + std::to_string(res.corrected_positions.size()) +
                          " positions, more than " + std::to_string(t));
  for (int id = 1; id <= d.b(); ++id) {
    int parity = 0;
    for (PointId p : d.block(id)) parity ^= res.codeword.get(p - 1) ? 1 : 0;
    if (parity != 0) throw DecodingFailure("decoded word fails the check of block " + std::to_string(id));
  }
  return res;
}

// -------------------------------------------------------------- conjecture

ConjectureReport check_conjecture(const Design& d, int cap) {
  const BinaryCode c = code_of_design(d);
  const WeightDistribution wd = weight_distribution(c, cap);
  ConjectureReport rep;
  rep.min_distance = wd.min_nonzero_weight();
  rep.min_weight_count = wd[rep.min_distance];
  rep.blocks = d.b();
  if (rep.min_distance >= 1 && rep.min_distance <= 4) {
    const auto words = low_weight_codewords(c, rep.min_distance);
    rep.explicit_min_words = static_cast<int>(words.size());
    if (BigInt(rep.explicit_min_words) != rep.min_weight_count)
      throw std::logic_error("explicit low-weight search disagrees with the weight distribution");
    std::set<std::vector<int>> blocks;
    for (const auto& blk : d.blocks()) {
      std::vector<int> zero_based;
      for (PointId p : blk) zero_based.push_back(p - 1);
      blocks.insert(std::move(zero_based));
    }
    rep.all_min_words_are_blocks =
        std::all_of(words.begin(), words.end(), [&](const auto& w) { return blocks.count(w) > 0; });
  } else {
    // Blocks are weight-k codewords, so equality of counts means equality of sets.
    rep.all_min_words_are_blocks = rep.min_distance == d.k() && rep.min_weight_count == d.b();
  }
  return rep;
}

// ----------------------------------------------------------------- theorem

bool CodeTheoremReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.second; });
}

CodeTheoremReport verify_code_theorem(const Design& d, int cap) {
  CodeTheoremReport rep;
  rep.n = d.v();
  const int r = d.r();
  if (!std::has_single_bit(static_cast<unsigned>(d.k())) ||
      !std::has_single_bit(static_cast<unsigned>(r - 1)))
    throw InconsistentParameters("design is not of the form 2-(2^(m+s)-2^m+2^s, 2^s, 1)");
  rep.s = std::countr_zero(static_cast<unsigned>(d.k()));
  rep.m = std::countr_zero(static_cast<unsigned>(r - 1));

  const BinaryCode c = code_of_design(d);
  const BinaryCode dual = gf2::dual_code(c);
  rep.rank = c.dimension();
  const BitVector ones = BitVector::all_ones(rep.n);
  auto add = [&](const std::string& name, bool ok) { rep.clauses.emplace_back(name, ok); };

  add("all-one vector in C", c.contains(ones));
  add("all-one vector in dual", dual.contains(ones));

  const WeightDistribution wd_dual = weight_distribution(dual, cap);
  const WeightDistribution wd = weight_distribution(c, cap);
  rep.d_perp = wd_dual.min_nonzero_weight();
  rep.a_d_perp = wd_dual[rep.d_perp];
  rep.d = wd.min_nonzero_weight();
  rep.hyperovals = static_cast<int>(find_hyperovals(d).size());

  const int hyperoval_distance = (1 << rep.m) + 2;
  add("dual distance even", rep.d_perp % 2 == 0);
  if (rep.hyperovals > 0) {
    add("dual distance is 2^m+2 with hyperovals", rep.d_perp == hyperoval_distance);
    add("minimum-weight dual words count hyperovals", rep.a_d_perp == rep.hyperovals);
  } else {
    add("dual distance at least 2^m+4 without hyperovals", rep.d_perp >= hyperoval_distance + 2);
  }
  add("minimum distance even and at most 2^s", rep.d % 2 == 0 && rep.d <= d.k());
  bool odd_free = true;
  for (int w = 1; w <= rep.n; w += 2) odd_free = odd_free && wd[w] == 0 && wd_dual[w] == 0;
  add("no odd weights", odd_free);

  try {
    rep.bounds = rank_bounds(rep.n, rep.m, rep.s, rep.d, rep.d_perp, rep.hyperovals > 0);
    add("rank within bounds", rep.bounds.lower <= rep.rank && rep.rank <= rep.bounds.upper);
  } catch (const InconsistentParameters& e) {
    add(std::string("rank bounds applicable (") + e.what() + ")", false);
  }

  for (const auto& [name, ok] : rep.clauses)
    if (!ok) throw TheoremViolation(name, "failed for design " + d.label());
  return rep;
}

// ----------------------------------------------------------------- helpers

std::string to_string(const BigInt& n) { return n.str(); }

std::string factorize(const BigInt& n) {
  if (n <= 1) return n.str();
  BigInt x = n;
  std::string out;
  for (unsigned p = 2; BigInt(p) * p <= x; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out += (out.empty() ? "" : " ") + std::to_string(p) + "^" + std::to_string(e);
  }
  if (x > 1) out += (out.empty() ? "" : " ") + x.str() + "^1";
  return out;
}

}  // namespace maxarc
