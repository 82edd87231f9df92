#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxarc/arcs.hpp"

namespace maxarc {

/// Steiner 2-(v,k,1) design. Points and block ids are 1-based.
class Design {
 public:
  /// Verifies that every pair of points lies in exactly one block.
  Design(int v, int k, std::vector<std::vector<PointId>> blocks, std::string label = {});

  int v() const { return v_; }
  int k() const { return k_; }
  int b() const { return static_cast<int>(blocks_.size()); }
  /// Blocks through a point.
  int r() const { return (v_ - 1) / (k_ - 1); }
  const std::vector<std::vector<PointId>>& blocks() const { return blocks_; }
  const std::vector<PointId>& block(int id) const { return blocks_[id - 1]; }
  const std::vector<int>& blocks_through(PointId p) const { return blocks_through_[p - 1]; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Plane point behind each design point, when built from an arc.
  const std::vector<PointId>& plane_points() const { return plane_points_; }
  /// Plane line behind each block, when built from an arc.
  const std::vector<int>& plane_lines() const { return plane_lines_; }

 private:
  friend Design design_from_arc(const Arc& a);
  int v_;
  int k_;
  std::vector<std::vector<PointId>> blocks_;
  std::vector<std::vector<int>> blocks_through_;
  std::string label_;
  std::vector<PointId> plane_points_;
  std::vector<int> plane_lines_;
};

/// Sorted ids of v/k pairwise disjoint blocks covering every point.
struct ParallelClass {
  std::vector<int> block_ids;
  auto operator<=>(const ParallelClass&) const = default;
};

/// Partition of the blocks into parallel classes, kept sorted.
struct Resolution {
  std::vector<ParallelClass> classes;
  auto operator<=>(const Resolution&) const = default;
};

/// Point set of size r+1 meeting every block in 0 or 2 points (sorted).
struct Hyperoval {
  std::vector<PointId> points;
  auto operator<=>(const Hyperoval&) const = default;
};

class NotPairwiseCompatible : public std::runtime_error {
 public:
  NotPairwiseCompatible(int i, int j);
  int first() const { return i_; }
  int second() const { return j_; }

 private:
  int i_;
  int j_;
};

/// Blocks are the k-secant intersections in line order; design point i is
/// the i-th arc point in ascending plane order.
Design design_from_arc(const Arc& a);

/// All parallel classes, sorted.
std::vector<ParallelClass> enumerate_parallel_classes(const Design& d);

/// All resolutions that use the given classes, sorted.
std::vector<Resolution> enumerate_resolutions(const Design& d,
                                              const std::vector<ParallelClass>& classes);

/// True iff the resolutions share exactly one class and every other pair of
/// classes has at most one block in common.
bool compatible(const Resolution& r1, const Resolution& r2);

/// For each line disjoint from the arc, the resolution whose classes are the
/// k-secants through each point of that line. For k = q this is the unique
/// resolution of the affine plane.
std::vector<Resolution> resolutions_from_embedding(const Arc& a, const Design& d);
std::vector<Resolution> resolutions_from_embedding(const Arc& a);

struct CompatibilityReport {
  int m = 0;
  int bound = 0;
  bool within_bound = false;
  bool attains_bound = false;
};

/// (sk-k+1)s, the maximum size of a set of mutually compatible resolutions.
int compatible_resolution_bound(int s, int k);

/// Throws NotPairwiseCompatible if some pair fails compatible().
CompatibilityReport max_compatible_bound_check(const std::vector<Resolution>& resolutions, int s,
                                               int k);

/// Greedy pass over the list keeping each resolution compatible with all
/// kept so far. Returns indices into the list.
std::vector<int> greedy_compatible_subset(const std::vector<Resolution>& resolutions);

std::vector<Hyperoval> find_hyperovals(const Design& d);

void write_design(std::ostream& out, const Design& d);
void write_resolution(std::ostream& out, const Resolution& r);

}  // namespace maxarc
