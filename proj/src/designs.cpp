#include "maxarc/designs.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "maxarc/exact_cover.hpp"

namespace maxarc {

NotPairwiseCompatible::NotPairwiseCompatible(int i, int j)
    : std::runtime_error("resolutions " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not compatible"),
      i_(i),
      j_(j) {}

Design::Design(int v, int k, std::vector<std::vector<PointId>> blocks, std::string label)
    : v_(v), k_(k), blocks_(std::move(blocks)), label_(std::move(label)) {
  if (k_ < 2 || v_ < k_) throw std::invalid_argument("design needs 2 <= k <= v");
  if ((v_ - 1) % (k_ - 1) != 0 || (v_ * (v_ - 1)) % (k_ * (k_ - 1)) != 0)
    throw std::invalid_argument("no Steiner 2-design with these parameters");
  const int expected_b = v_ * (v_ - 1) / (k_ * (k_ - 1));
  if (b() != expected_b)
    throw std::invalid_argument("expected " + std::to_string(expected_b) + " blocks, got " +
                                std::to_string(b()));

  std::vector<int> pair_block(static_cast<std::size_t>(v_) * v_, 0);
  blocks_through_.assign(v_, {});
  for (int id = 1; id <= b(); ++id) {
    auto& blk = blocks_[id - 1];
    std::sort(blk.begin(), blk.end());
    if (static_cast<int>(blk.size()) != k_) throw std::invalid_argument("block of wrong size");
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw std::invalid_argument("block with repeated point");
    for (PointId p : blk) {
      if (p < 1 || p > v_) throw std::invalid_argument("block point out of range");
      blocks_through_[p - 1].push_back(id);
    }
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        int& slot = pair_block[static_cast<std::size_t>(blk[i] - 1) * v_ + (blk[j] - 1)];
        if (slot != 0)
          throw std::invalid_argument("points " + std::to_string(blk[i]) + " and " +
                                      std::to_string(blk[j]) + " lie in two blocks");
        slot = id;
      }
  }
  // With b = v(v-1)/(k(k-1)) and no pair covered twice, every pair is covered.
}

Design design_from_arc(const Arc& a) {
  if (a.degree() < 2) throw std::invalid_argument("design needs arc degree at least 2");
  const auto& plane = *a.plane();
  std::vector<int> index(plane.n_points() + 1, 0);
  for (int i = 0; i < a.size(); ++i) index[a.points()[i]] = i + 1;

  std::vector<std::vector<PointId>> blocks;
  std::vector<int> lines;
  for (int l = 1; l <= plane.n_lines(); ++l) {
    std::vector<PointId> blk;
    for (PointId p : plane.line(l))
      if (index[p] != 0) blk.push_back(index[p]);
    if (blk.empty()) continue;
    blocks.push_back(std::move(blk));
    lines.push_back(l);
  }
  Design d(a.size(), a.degree(), std::move(blocks), a.label());
  d.plane_points_ = a.points();
  d.plane_lines_ = std::move(lines);
  return d;
}

std::vector<ParallelClass> enumerate_parallel_classes(const Design& d) {
  if (d.v() % d.k() != 0) return {};
  std::vector<std::vector<int>> options;
  options.reserve(d.b());
  for (const auto& blk : d.blocks()) {
    std::vector<int> items;
    for (PointId p : blk) items.push_back(p - 1);
    options.push_back(std::move(items));
  }
  std::vector<ParallelClass> out;
  ExactCover(d.v(), options).enumerate([&](const std::vector<int>& sol) {
    ParallelClass pc;
    for (int r : sol) pc.block_ids.push_back(r + 1);
    out.push_back(std::move(pc));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Resolution> enumerate_resolutions(const Design& d,
                                              const std::vector<ParallelClass>& classes) {
  std::vector<std::vector<int>> options;
  options.reserve(classes.size());
  for (const auto& pc : classes) {
    std::vector<int> items;
    for (int id : pc.block_ids) items.push_back(id - 1);
    options.push_back(std::move(items));
  }
  std::vector<Resolution> out;
  ExactCover(d.b(), options).enumerate([&](const std::vector<int>& sol) {
    Resolution r;
    for (int c : sol) r.classes.push_back(classes[c]);
    std::sort(r.classes.begin(), r.classes.end());
    out.push_back(std::move(r));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool compatible(const Resolution& r1, const Resolution& r2) {
  int max_block = 0;
  for (const auto& pc : r2.classes)
    for (int id : pc.block_ids) max_block = std::max(max_block, id);
  std::vector<int> class_in_r2(max_block + 1, -1);
  for (std::size_t j = 0; j < r2.classes.size(); ++j)
    for (int id : r2.classes[j].block_ids) class_in_r2[id] = static_cast<int>(j);

  int shared = 0;
  std::vector<int> common(r2.classes.size());
  for (const auto& pc : r1.classes) {
    std::fill(common.begin(), common.end(), 0);
    for (int id : pc.block_ids) {
      if (id > max_block || class_in_r2[id] < 0) return false;
      ++common[class_in_r2[id]];
    }
    for (std::size_t j = 0; j < common.size(); ++j) {
      if (common[j] <= 1) continue;
      if (pc == r2.classes[j]) {
        if (++shared > 1) return false;
      } else {
        return false;
      }
    }
  }
  return shared == 1;
}

std::vector<Resolution> resolutions_from_embedding(const Arc& a, const Design& d) {
  const auto& plane = *a.plane();
  const int q = plane.order();
  if (a.degree() > q) throw std::invalid_argument("embedding resolutions need k <= q");
  std::vector<int> block_of_line(plane.n_lines() + 1, 0);
  for (int id = 1; id <= d.b(); ++id) block_of_line[d.plane_lines().at(id - 1)] = id;

  std::vector<Resolution> out;
  for (int ext : a.exterior_lines()) {
    Resolution r;
    for (PointId y : plane.line(ext)) {
      ParallelClass pc;
      for (int l : plane.lines_through(y))
        if (block_of_line[l] != 0) pc.block_ids.push_back(block_of_line[l]);
      std::sort(pc.block_ids.begin(), pc.block_ids.end());
      r.classes.push_back(std::move(pc));
    }
    std::sort(r.classes.begin(), r.classes.end());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Resolution> resolutions_from_embedding(const Arc& a) {
  return resolutions_from_embedding(a, design_from_arc(a));
}

int compatible_resolution_bound(int s, int k) { return (s * k - k + 1) * s; }

CompatibilityReport max_compatible_bound_check(const std::vector<Resolution>& resolutions, int s,
                                               int k) {
  for (std::size_t i = 0; i < resolutions.size(); ++i)
    for (std::size_t j = i + 1; j < resolutions.size(); ++j)
      if (!compatible(resolutions[i], resolutions[j]))
        throw NotPairwiseCompatible(static_cast<int>(i), static_cast<int>(j));
  CompatibilityReport rep;
  rep.m = static_cast<int>(resolutions.size());
  rep.bound = compatible_resolution_bound(s, k);
  rep.within_bound = rep.m <= rep.bound;
  rep.attains_bound = rep.m == rep.bound;
  return rep;
}

std::vector<int> greedy_compatible_subset(const std::vector<Resolution>& resolutions) {
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(resolutions.size()); ++i) {
    const bool ok = std::all_of(kept.begin(), kept.end(), [&](int j) {
      return compatible(resolutions[i], resolutions[j]);
    });
    if (ok) kept.push_back(i);
  }
  return kept;
}

// ---------------------------------------------------------------- hyperovals

namespace {

// With p0 = min S fixed, each of the r blocks through p0 holds exactly one
// more point of a hyperoval S; branch block by block on that point.
class HyperovalSearch {
 public:
  explicit HyperovalSearch(const Design& d)
      : d_(d), count_(d.b() + 1, 0), in_s_(d.v() + 1, 0) {}

  std::vector<Hyperoval> run() {
    for (PointId p0 = 1; p0 <= d_.v(); ++p0) {
      p0_ = p0;
      add(p0);
      open_ = d_.blocks_through(p0);
      extend();
      remove(p0);
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool allowed(PointId x) const {
    if (x <= p0_ || in_s_[x]) return false;
    for (int b : d_.blocks_through(x))
      if (count_[b] >= 2) return false;
    return true;
  }

  void add(PointId x) {
    in_s_[x] = 1;
    for (int b : d_.blocks_through(x)) ++count_[b];
    chosen_.push_back(x);
  }

  void remove(PointId x) {
    in_s_[x] = 0;
    for (int b : d_.blocks_through(x)) --count_[b];
    chosen_.pop_back();
  }

  void extend() {
    // Pick the unresolved block through p0 with the fewest candidates.
    int best_idx = -1;
    std::vector<PointId> best_cands;
    for (std::size_t i = 0; i < open_.size(); ++i) {
      const int b = open_[i];
      if (count_[b] != 1) continue;
      std::vector<PointId> cands;
      for (PointId x : d_.block(b))
        if (allowed(x)) cands.push_back(x);
      if (cands.empty()) return;
      if (best_idx < 0 || cands.size() < best_cands.size()) {
        best_idx = static_cast<int>(i);
        best_cands = std::move(cands);
      }
    }
    if (best_idx < 0) {
      auto pts = chosen_;
      std::sort(pts.begin(), pts.end());
      found_.push_back({std::move(pts)});
      return;
    }
    for (PointId x : best_cands) {
      add(x);
      extend();
      remove(x);
    }
  }

  const Design& d_;
  std::vector<int> count_;
  std::vector<char> in_s_;
  std::vector<PointId> chosen_;
  std::vector<int> open_;
  PointId p0_ = 0;
  std::vector<Hyperoval> found_;
};

}  // namespace

std::vector<Hyperoval> find_hyperovals(const Design& d) { return HyperovalSearch(d).run(); }

void write_design(std::ostream& out, const Design& d) {
  out << "design " << (d.label().empty() ? "unnamed" : d.label()) << " v " << d.v() << " k "
      << d.k() << '\n';
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
}

void write_resolution(std::ostream& out, const Resolution& r) {
  for (const auto& pc : r.classes) {
    for (std::size_t i = 0; i < pc.block_ids.size(); ++i) out << (i ? " " : "") << pc.block_ids[i];
    out << '\n';
  }
}

}  // namespace maxarc
