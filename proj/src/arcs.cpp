#include "maxarc/arcs.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <random>

namespace maxarc {

NotMaximal::NotMaximal(int line, int intersection_size, const std::string& what)
    : std::runtime_error(what), line_(line), intersection_size_(intersection_size) {}

bool Arc::contains(PointId p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<int> Arc::secant_lines() const {
  std::vector<int> out;
  for (int l = 1; l <= plane_->n_lines(); ++l) {
    const auto& pts = plane_->line(l);
    if (std::any_of(pts.begin(), pts.end(), [&](PointId p) { return contains(p); }))
      out.push_back(l);
  }
  return out;
}

std::vector<int> Arc::exterior_lines() const {
  std::vector<int> out;
  for (int l = 1; l <= plane_->n_lines(); ++l) {
    const auto& pts = plane_->line(l);
    if (std::none_of(pts.begin(), pts.end(), [&](PointId p) { return contains(p); }))
      out.push_back(l);
  }
  return out;
}

Arc validate_arc(PlanePtr plane, std::span<const PointId> points, int k) {
  const int q = plane->order();
  if (k < 1 || k > q + 1) throw std::invalid_argument("arc degree out of range");
  std::vector<PointId> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("arc point set contains duplicates");
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > plane->n_points()))
    throw std::invalid_argument("arc point outside the plane");

  std::vector<char> in(plane->n_points() + 1, 0);
  for (PointId p : sorted) in[p] = 1;
  for (int l = 1; l <= plane->n_lines(); ++l) {
    int c = 0;
    for (PointId p : plane->line(l)) c += in[p];
    if (c != 0 && c != k)
      throw NotMaximal(l, c,
                       "line " + std::to_string(l) + " meets the set in " + std::to_string(c) +
                           " points, expected 0 or " + std::to_string(k));
  }
  const int expected = q * k + k - q;
  if (static_cast<int>(sorted.size()) != expected)
    throw NotMaximal(0, static_cast<int>(sorted.size()),
                     "set has " + std::to_string(sorted.size()) + " points, a maximal arc of degree " +
                         std::to_string(k) + " has " + std::to_string(expected));

  Arc a;
  a.plane_ = std::move(plane);
  a.points_ = std::move(sorted);
  a.degree_ = k;
  return a;
}

// ---------------------------------------------------------------- Denniston

Arc denniston_arc(const Gf2mField& field, std::span<const std::uint32_t> subgroup_generators) {
  const std::uint32_t q = field.order();
  std::vector<char> in_h(q, 0);
  in_h[0] = 1;
  for (std::uint32_t g : subgroup_generators) {
    if (g >= q) throw std::invalid_argument("subgroup generator outside the field");
    std::vector<char> next = in_h;
    for (std::uint32_t h = 0; h < q; ++h)
      if (in_h[h]) next[h ^ g] = 1;
    in_h = std::move(next);
  }

  // Smallest a with t^2 + t + a irreducible, so that a x^2 + xy + y^2 vanishes
  // only at the origin.
  std::uint32_t alpha = 0;
  for (std::uint32_t a = 1; a < q && alpha == 0; ++a) {
    bool has_root = false;
    for (std::uint32_t t = 0; t < q && !has_root; ++t) has_root = (field.mul(t, t) ^ t ^ a) == 0;
    if (!has_root) alpha = a;
  }
  if (alpha == 0) throw std::logic_error("no anisotropic quadratic form found");

  auto plane = make_pg2(field);
  std::vector<PointId> pts;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      const std::uint32_t f = field.mul(alpha, field.mul(x, x)) ^ field.mul(x, y) ^ field.mul(y, y);
      if (in_h[f]) pts.push_back(pg2_point_index(field, {x, y, 1}));
    }
  const int k = static_cast<int>(std::count(in_h.begin(), in_h.end(), 1));
  Arc a = validate_arc(plane, pts, k);
  a.set_label("Denniston(" + std::to_string(q) + "," + std::to_string(k) + ")");
  return a;
}

Arc denniston_arc(const Gf2mField& field, int s) {
  if (s < 1 || s > field.degree()) throw std::invalid_argument("Denniston s must be in 1..m");
  std::vector<std::uint32_t> gens;
  for (int i = 0; i < s; ++i) gens.push_back(std::uint32_t{1} << i);
  return denniston_arc(field, gens);
}

Arc dual_arc(const Arc& a) {
  const int q = a.plane()->order();
  if (a.degree() >= q) throw std::invalid_argument("dual arc needs degree below the plane order");
  auto dual = dual_plane(*a.plane());
  Arc d = validate_arc(dual, a.exterior_lines(), q / a.degree());
  if (!a.label().empty()) d.set_label(a.label() + "^perp");
  return d;
}

// -------------------------------------------------------------- tabu search

void SearchConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (max_experiments < 1 || moves_per_experiment < 1 || tabu_length < 1)
    throw std::invalid_argument("search counts must be positive");
  if (!(random_move_probability >= 0.0 && random_move_probability <= 1.0))
    throw std::invalid_argument("random move probability must lie in [0,1]");
  if (stop_after_hits < 0) throw std::invalid_argument("stop_after_hits must be non-negative");
}

int intersection_penalty(int i, int k) {
  if (i == 0 || i == k) return 0;
  const int d = std::min(i, std::abs(i - k));
  return d * d;
}

namespace {

std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
  // Rejection sampling keeps the draw unbiased and library independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Move {
  PointId in;
  PointId out;
};

class Experiment {
 public:
  Experiment(const ProjectivePlane& plane, int k, int tabu_length, double p_random,
             std::uint64_t seed)
      : plane_(plane),
        k_(k),
        tabu_length_(tabu_length),
        p_random_(p_random),
        rng_(seed),
        in_set_(plane.n_points() + 1, 0),
        count_(plane.n_lines() + 1, 0),
        delta_remove_(plane.n_points() + 1, 0),
        delta_add_(plane.n_points() + 1, 0) {
    const int q = plane.order();
    const int size = q * k + k - q;
    std::vector<PointId> all(plane.n_points());
    for (int i = 0; i < plane.n_points(); ++i) all[i] = i + 1;
    for (int i = 0; i < size; ++i) std::swap(all[i], all[i + uniform_below(rng_, all.size() - i)]);
    inside_.assign(all.begin(), all.begin() + size);
    outside_.assign(all.begin() + size, all.end());
    for (PointId p : inside_) {
      in_set_[p] = 1;
      for (int l : plane_.lines_through(p)) ++count_[l];
    }
    objective_ = 0;
    for (int l = 1; l <= plane_.n_lines(); ++l) objective_ += penalty(count_[l]);
  }

  bool solved() const { return objective_ == 0; }
  std::vector<PointId> current() const {
    auto v = inside_;
    std::sort(v.begin(), v.end());
    return v;
  }

  void step() {
    if (outside_.empty() || inside_.empty()) return;
    if (unit_draw(rng_) < p_random_) {
      apply(uniform_below(rng_, inside_.size()), uniform_below(rng_, outside_.size()));
      return;
    }
    refresh_deltas();
    long best = std::numeric_limits<long>::max();
    candidates_.clear();
    for (std::size_t i = 0; i < inside_.size(); ++i) {
      const PointId out = inside_[i];
      for (std::size_t j = 0; j < outside_.size(); ++j) {
        const PointId in = outside_[j];
        const int l = plane_.line_through(out, in);
        const int c = count_[l];
        // The shared line keeps its count; undo both one-sided changes on it.
        const long delta = delta_remove_[out] + delta_add_[in] -
                           (penalty(c - 1) - penalty(c)) - (penalty(c + 1) - penalty(c));
        if (delta > best) continue;
        if (is_tabu(in, out) && objective_ + delta != 0) continue;
        if (delta < best) {
          best = delta;
          candidates_.clear();
        }
        candidates_.emplace_back(i, j);
      }
    }
    if (candidates_.empty()) {
      apply(uniform_below(rng_, inside_.size()), uniform_below(rng_, outside_.size()));
      return;
    }
    const auto [i, j] = candidates_[uniform_below(rng_, candidates_.size())];
    apply(i, j);
  }

 private:
  int penalty(int c) const { return intersection_penalty(c, k_); }

  bool is_tabu(PointId in, PointId out) const {
    return std::any_of(tabu_.begin(), tabu_.end(),
                       [&](const Move& m) { return m.out == in || m.in == out; });
  }

  void refresh_deltas() {
    for (PointId p = 1; p <= plane_.n_points(); ++p) {
      long d = 0;
      if (in_set_[p]) {
        for (int l : plane_.lines_through(p)) d += penalty(count_[l] - 1) - penalty(count_[l]);
        delta_remove_[p] = d;
      } else {
        for (int l : plane_.lines_through(p)) d += penalty(count_[l] + 1) - penalty(count_[l]);
        delta_add_[p] = d;
      }
    }
  }

  void apply(std::size_t i, std::size_t j) {
    const PointId out = inside_[i];
    const PointId in = outside_[j];
    for (int l : plane_.lines_through(out)) {
      objective_ -= penalty(count_[l]);
      --count_[l];
      objective_ += penalty(count_[l]);
    }
    for (int l : plane_.lines_through(in)) {
      objective_ -= penalty(count_[l]);
      ++count_[l];
      objective_ += penalty(count_[l]);
    }
    in_set_[out] = 0;
    in_set_[in] = 1;
    inside_[i] = in;
    outside_[j] = out;
    tabu_.push_back({in, out});
    if (static_cast<int>(tabu_.size()) > tabu_length_) tabu_.pop_front();
  }

  const ProjectivePlane& plane_;
  int k_;
  int tabu_length_;
  double p_random_;
  std::mt19937_64 rng_;
  std::vector<PointId> inside_;
  std::vector<PointId> outside_;
  std::vector<char> in_set_;
  std::vector<int> count_;
  std::vector<long> delta_remove_;
  std::vector<long> delta_add_;
  std::deque<Move> tabu_;
  std::vector<std::pair<std::size_t, std::size_t>> candidates_;
  long objective_ = 0;
};

}  // namespace

SearchResult tabu_search(const PlanePtr& plane, const SearchConfig& cfg) {
  cfg.validate();
  SearchResult result;
  const int q = plane->order();
  const int size = q * cfg.k + cfg.k - q;
  if (cfg.k > q + 1 || size < 1 || size > plane->n_points()) return result;

  std::map<std::vector<PointId>, int> found;
  int total_hits = 0;
  for (int e = 0; e < cfg.max_experiments; ++e) {
    ++result.experiments_run;
    Experiment ex(*plane, cfg.k, cfg.tabu_length, cfg.random_move_probability,
                  cfg.rng_seed + static_cast<std::uint64_t>(e));
    for (int move = 0; move < cfg.moves_per_experiment && !ex.solved(); ++move) ex.step();
    if (!ex.solved()) continue;
    auto pts = ex.current();
    // Objective zero forces every line to 0 or k points; validate anyway.
    try {
      validate_arc(plane, pts, cfg.k);
    } catch (const NotMaximal&) {
      continue;
    }
    ++found[std::move(pts)];
    if (cfg.stop_after_hits > 0 && ++total_hits >= cfg.stop_after_hits) break;
  }
  for (const auto& [pts, hits] : found) {
    result.arcs.push_back(validate_arc(plane, pts, cfg.k));
    result.hits.push_back(hits);
  }
  return result;
}

}  // namespace maxarc
