#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxarc/geometry.hpp"

namespace maxarc {

/// Thrown by validate_arc. line() is the first line whose intersection size
/// is neither 0 nor k; it is 0 when only the size condition fails.
class NotMaximal : public std::runtime_error {
 public:
  NotMaximal(int line, int intersection_size, const std::string& what);
  int line() const { return line_; }
  int intersection_size() const { return intersection_size_; }

 private:
  int line_;
  int intersection_size_;
};

/// A maximal arc of degree k: qk+k-q points, every line meeting it in 0 or
/// k points. Only validate_arc constructs one.
class Arc {
 public:
  const PlanePtr& plane() const { return plane_; }
  const std::vector<PointId>& points() const { return points_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(points_.size()); }
  /// q / k, the degree of the dual arc.
  int dual_degree() const { return plane_->order() / degree_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool contains(PointId p) const;
  /// Lines meeting the arc in exactly k points.
  std::vector<int> secant_lines() const;
  /// Lines disjoint from the arc.
  std::vector<int> exterior_lines() const;

 private:
  friend Arc validate_arc(PlanePtr plane, std::span<const PointId> points, int k);
  PlanePtr plane_;
  std::vector<PointId> points_;
  int degree_ = 0;
  std::string label_;
};

/// Checks the size and line-intersection conditions; points may be in any
/// order but must be distinct and inside the plane.
Arc validate_arc(PlanePtr plane, std::span<const PointId> points, int k);

/// Denniston arc of degree |H| in make_pg2(field): the affine points (x,y)
/// with a x^2 + xy + y^2 in H, for the smallest a making the form
/// anisotropic. H is the additive subgroup spanned by the given elements.
Arc denniston_arc(const Gf2mField& field, std::span<const std::uint32_t> subgroup_generators);
/// Same with H = {h : h < 2^s}.
Arc denniston_arc(const Gf2mField& field, int s);

/// The lines disjoint from a, as a maximal arc of degree q/k in dual_plane.
/// Requires k < q.
Arc dual_arc(const Arc& a);

struct SearchConfig {
  int k = 4;
  int max_experiments = 10000;
  int moves_per_experiment = 50000;
  int tabu_length = 7;
  double random_move_probability = 0.01;
  std::uint64_t rng_seed = 1;
  /// Stop once this many experiments have produced an arc; 0 runs them all.
  int stop_after_hits = 0;

  void validate() const;
};

struct SearchResult {
  /// Distinct arcs found, ordered by point set.
  std::vector<Arc> arcs;
  /// hits[i] = number of experiments that ended in arcs[i].
  std::vector<int> hits;
  int experiments_run = 0;
};

/// Penalty of a line meeting the candidate set in i points when degree k is
/// wanted: 0 for i in {0, k}, otherwise the squared distance to the nearer.
int intersection_penalty(int i, int k);

/// Randomized tabu search for maximal arcs of degree cfg.k. Each experiment
/// starts from a random set of the maximal size and performs best-swap
/// moves; a set is recorded when every line meets it in 0 or k points.
/// Deterministic for a fixed seed.
SearchResult tabu_search(const PlanePtr& plane, const SearchConfig& cfg);

/// Arc point sets published for planes of order 16, indexed in the numbering
/// of the corresponding plane files.
struct KnownArc {
  const char* label;
  const char* plane_label;
  int degree;
  std::vector<PointId> points;
};

const std::vector<KnownArc>& known_arcs();
const KnownArc* find_known_arc(const std::string& label);

}  // namespace maxarc
