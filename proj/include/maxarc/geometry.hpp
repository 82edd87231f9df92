#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxarc {

/// 1-based point or line index.
using PointId = int;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& what);
  int line_number() const { return line_number_; }

 private:
  int line_number_;
};

/// Raised when a structure fails a projective-plane axiom.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(int point, int line, const std::string& what);
  /// Offending point and line, 1-based; 0 when not applicable.
  int point() const { return point_; }
  int line() const { return line_; }

 private:
  int point_;
  int line_;
};

/// GF(2^m) with elements as bitmasks of polynomial coefficients.
class Gf2mField {
 public:
  /// Field of order 2^m using the default modulus for m.
  explicit Gf2mField(int m);
  /// Field with an explicit modulus (bitmask including the x^m term).
  Gf2mField(int m, std::uint32_t modulus);

  int degree() const { return m_; }
  std::uint32_t order() const { return std::uint32_t{1} << m_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t trace(std::uint32_t a) const;

  static bool is_irreducible(std::uint32_t poly);
  /// x^2+x+1, x^3+x+1, x^4+x+1 for m = 2, 3, 4; otherwise the numerically
  /// smallest irreducible polynomial of degree m.
  static std::uint32_t default_modulus(int m);

 private:
  int m_;
  std::uint32_t modulus_;
};

/// Points 1..n_points and blocks given as ascending point lists.
struct IncidenceStructure {
  int n_points = 0;
  std::vector<std::vector<PointId>> blocks;
  std::string label;

  int n_blocks() const { return static_cast<int>(blocks.size()); }
  /// For each point (index p-1), the 1-based ids of the blocks containing it.
  std::vector<std::vector<int>> blocks_through_points() const;
  bool operator==(const IncidenceStructure&) const = default;
};

/// Validated projective plane of order q with line lookup tables.
class ProjectivePlane {
 public:
  /// Checks every plane axiom; throws AxiomViolation on failure.
  ProjectivePlane(int order, IncidenceStructure structure);

  int order() const { return order_; }
  int n_points() const { return structure_.n_points; }
  int n_lines() const { return structure_.n_blocks(); }
  const std::string& label() const { return structure_.label; }
  const IncidenceStructure& structure() const { return structure_; }

  /// Points on line l (1-based), ascending.
  const std::vector<PointId>& line(int l) const { return structure_.blocks[l - 1]; }
  /// Lines through point p (1-based), ascending.
  const std::vector<int>& lines_through(PointId p) const { return lines_through_[p - 1]; }
  /// The unique line through two distinct points.
  int line_through(PointId a, PointId b) const {
    return join_[static_cast<std::size_t>(a - 1) * n_points() + (b - 1)];
  }

 private:
  int order_;
  IncidenceStructure structure_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<int> join_;
};

using PlanePtr = std::shared_ptr<const ProjectivePlane>;

/// 1-based index of a nonzero homogeneous triple in make_pg2 numbering.
PointId pg2_point_index(const Gf2mField& field, std::array<std::uint32_t, 3> x);
/// Normalized triple (leading nonzero coordinate 1) of a make_pg2 point.
std::array<std::uint32_t, 3> pg2_coordinates(const Gf2mField& field, PointId p);

/// PG(2, 2^m): points are normalized triples in lexicographic order, lines
/// are listed in the same order of their normalized dual coordinates.
PlanePtr make_pg2(const Gf2mField& field);

PlanePtr parse_plane(std::istream& in);
PlanePtr parse_plane_file(const std::string& path);
void serialize_plane(std::ostream& out, const ProjectivePlane& plane);

/// Point i of the result is line i of p; line j is the set of lines of p
/// through point j.
PlanePtr dual_plane(const ProjectivePlane& p);

/// Contents of an arc file.
struct ArcFile {
  std::string label;
  std::string plane_label;
  int degree = 0;
  std::vector<PointId> points;
};

ArcFile parse_arc(std::istream& in);
ArcFile parse_arc_file(const std::string& path);
void serialize_arc(std::ostream& out, const ArcFile& arc);

}  // namespace maxarc
