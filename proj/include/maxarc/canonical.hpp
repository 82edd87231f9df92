#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxarc/codes.hpp"
#include "maxarc/designs.hpp"
#include "maxarc/gf2.hpp"

namespace maxarc {

/// Bipartite graph with vertex colors. Left vertices are 0..n_left-1, right
/// vertices n_left..n_left+n_right-1; edges join a left and a right vertex.
struct ColoredIncidenceGraph {
  int n_left = 0;
  int n_right = 0;
  /// (left index, right index), both 0-based within their side.
  std::vector<std::pair<int, int>> edges;
  /// One color per vertex, left side first. Isomorphisms preserve colors.
  std::vector<int> colors;

  int n_vertices() const { return n_left + n_right; }
  void validate() const;
};

struct CanonicalForm {
  /// Colors of the vertices in canonical order.
  std::vector<int> colors;
  /// Edges under the canonical labeling as (smaller, larger), sorted.
  std::vector<std::pair<int, int>> edges;
  BigInt automorphism_group_order = 1;
  /// labeling[v] = canonical index of vertex v.
  std::vector<int> labeling;
  /// Automorphisms found during the search (vertex permutations).
  std::vector<std::vector<int>> generators;

  bool same_graph(const CanonicalForm& other) const {
    return colors == other.colors && edges == other.edges;
  }
};

/// Individualization-refinement canonical labeling with automorphism
/// pruning. Deterministic; the group order is exact.
CanonicalForm canonize(const ColoredIncidenceGraph& g);

/// Applies a vertex relabeling (new index of each vertex) to a graph and
/// returns the relabeled edges in canonical-form layout.
std::vector<std::pair<int, int>> relabeled_edges(const ColoredIncidenceGraph& g,
                                                 const std::vector<int>& labeling);

/// Points (color 0) against blocks (color 1).
ColoredIncidenceGraph design_graph(const Design& d);
/// Coordinates (color 0) against the nonzero words of whichever of c and its
/// dual has the smaller dimension (color 1 + weight).
ColoredIncidenceGraph code_graph(const gf2::BinaryCode& c, int cap = gf2::kDefaultEnumerationCap);

BigInt design_automorphism_group_order(const Design& d);
BigInt code_automorphism_group_order(const gf2::BinaryCode& c,
                                     int cap = gf2::kDefaultEnumerationCap);

struct IsomorphismResult {
  bool isomorphic = false;
  /// 0-based map from the first structure's points (or coordinates) to the
  /// second's; empty when not isomorphic.
  std::vector<int> witness;
};

IsomorphismResult designs_isomorphic(const Design& d1, const Design& d2);
IsomorphismResult codes_equivalent(const gf2::BinaryCode& c1, const gf2::BinaryCode& c2,
                                   int cap = gf2::kDefaultEnumerationCap);

/// A class of pairwise isomorphic inputs, by index into the input list, in
/// increasing order. witnesses[i] maps the first member onto members[i]
/// (0-based points or coordinates) and has been checked directly.
struct EquivalenceClass {
  std::vector<int> members;
  std::vector<std::vector<int>> witnesses;
};

/// Partitions designs into isomorphism classes, ordered by first member.
std::vector<EquivalenceClass> classify_designs(const std::vector<Design>& designs);
/// Partitions codes of equal length into permutation-equivalence classes.
std::vector<EquivalenceClass> classify_codes(const std::vector<gf2::BinaryCode>& codes,
                                             int cap = gf2::kDefaultEnumerationCap);

/// 0-based coordinate permutation: coordinate i of a word moves to perm[i].
using Permutation = std::vector<int>;

gf2::BinaryCode permute_code(const gf2::BinaryCode& c, const Permutation& perm);
/// True iff moving coordinate i to perm[i] maps c_from onto c_to.
bool verify_permutation(const Permutation& perm, const gf2::BinaryCode& c_from,
                        const gf2::BinaryCode& c_to);

/// Parses 1-based cycle notation such as "(1, 29, 13, 45)(2, 30)"; fixed
/// points may be omitted.
Permutation parse_cycles(const std::string& text, int n);
/// Cycle notation with 1-based points, fixed points omitted.
std::string format_cycles(const Permutation& perm);

/// Published coordinate permutations between codes of (52,4)-arc designs.
struct KnownEquivalence {
  const char* from;
  const char* to;
  const char* cycles;
};
const std::vector<KnownEquivalence>& known_equivalences();

}  // namespace maxarc
