#include "maxarc/geometry.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace maxarc {

ParseError::ParseError(int line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
      line_number_(line_number) {}

AxiomViolation::AxiomViolation(int point, int line, const std::string& what)
    : std::runtime_error(what), point_(point), line_(line) {}

// ---------------------------------------------------------------- Gf2mField

Gf2mField::Gf2mField(int m) : Gf2mField(m, default_modulus(m)) {}

Gf2mField::Gf2mField(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in 1..16");
  if (std::bit_width(modulus) != static_cast<unsigned>(m + 1))
    throw std::invalid_argument("modulus degree does not match m");
  if (!is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible");
}

std::uint32_t Gf2mField::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (std::uint32_t{1} << m_)) a ^= modulus_;
  }
  return r;
}

std::uint32_t Gf2mField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  // a^(2^m - 2)
  std::uint32_t result = 1;
  std::uint32_t base = a;
  std::uint32_t e = order() - 2;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Gf2mField::trace(std::uint32_t a) const {
  std::uint32_t t = 0;
  std::uint32_t x = a;
  for (int i = 0; i < m_; ++i) {
    t ^= x;
    x = mul(x, x);
  }
  return t;
}

namespace {

// Remainder of a modulo b over GF(2)[x].
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = std::bit_width(b) - 1;
  while (a != 0 && static_cast<int>(std::bit_width(a)) - 1 >= db) a ^= b << (static_cast<int>(std::bit_width(a)) - 1 - db);
  return a;
}

}  // namespace

bool Gf2mField::is_irreducible(std::uint32_t poly) {
  const int deg = std::bit_width(poly) - 1;
  if (deg < 1) return false;
  // Exhaustive trial division by every polynomial of degree 1..deg/2.
  for (std::uint32_t d = 2; static_cast<int>(std::bit_width(d)) - 1 <= deg / 2; ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

std::uint32_t Gf2mField::default_modulus(int m) {
  switch (m) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    default: break;
  }
  if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in 1..16");
  for (std::uint32_t p = std::uint32_t{1} << m;; ++p)
    if (is_irreducible(p)) return p;
}

// ------------------------------------------------------- IncidenceStructure

std::vector<std::vector<int>> IncidenceStructure::blocks_through_points() const {
  std::vector<std::vector<int>> out(n_points);
  for (int b = 0; b < n_blocks(); ++b)
    for (PointId p : blocks[b]) out[p - 1].push_back(b + 1);
  return out;
}

// ---------------------------------------------------------- ProjectivePlane

ProjectivePlane::ProjectivePlane(int order, IncidenceStructure structure)
    : order_(order), structure_(std::move(structure)) {
  const int q = order_;
  if (q < 2) throw AxiomViolation(0, 0, "plane order must be at least 2");
  const int v = q * q + q + 1;
  if (structure_.n_points != v)
    throw AxiomViolation(0, 0, "plane of order " + std::to_string(q) + " needs " +
                                   std::to_string(v) + " points");
  if (structure_.n_blocks() != v)
    throw AxiomViolation(0, 0, "plane of order " + std::to_string(q) + " needs " +
                                   std::to_string(v) + " lines, got " +
                                   std::to_string(structure_.n_blocks()));
  for (int l = 1; l <= v; ++l) {
    const auto& pts = line(l);
    if (static_cast<int>(pts.size()) != q + 1)
      throw AxiomViolation(pts.empty() ? 0 : pts.front(), l,
                           "line " + std::to_string(l) + " has " + std::to_string(pts.size()) +
                               " points, expected " + std::to_string(q + 1));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 1 || pts[i] > v)
        throw AxiomViolation(pts[i], l, "point index out of range on line " + std::to_string(l));
      if (i > 0 && pts[i] <= pts[i - 1])
        throw AxiomViolation(pts[i], l, "line " + std::to_string(l) + " is not strictly ascending");
    }
  }

  join_.assign(static_cast<std::size_t>(v) * v, 0);
  for (int l = 1; l <= v; ++l) {
    const auto& pts = line(l);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const std::size_t ab = static_cast<std::size_t>(pts[i] - 1) * v + (pts[j] - 1);
        if (join_[ab] != 0)
          throw AxiomViolation(pts[i], l,
                               "points " + std::to_string(pts[i]) + " and " +
                                   std::to_string(pts[j]) + " lie on lines " +
                                   std::to_string(join_[ab]) + " and " + std::to_string(l));
        join_[ab] = l;
        join_[static_cast<std::size_t>(pts[j] - 1) * v + (pts[i] - 1)] = l;
      }
  }
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b)
      if (join_[static_cast<std::size_t>(a - 1) * v + (b - 1)] == 0)
        throw AxiomViolation(a, 0,
                             "points " + std::to_string(a) + " and " + std::to_string(b) +
                                 " lie on no common line");

  lines_through_ = structure_.blocks_through_points();
  for (int p = 1; p <= v; ++p)
    if (static_cast<int>(lines_through_[p - 1].size()) != q + 1)
      throw AxiomViolation(p, 0, "point " + std::to_string(p) + " is on " +
                                     std::to_string(lines_through_[p - 1].size()) + " lines");

  // Two distinct lines share exactly one point.
  for (int l1 = 1; l1 <= v; ++l1)
    for (int l2 = l1 + 1; l2 <= v; ++l2) {
      const auto& a = line(l1);
      const auto& b = line(l2);
      int common = 0;
      for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] == b[j]) {
          ++common;
          ++i;
          ++j;
        } else if (a[i] < b[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (common != 1)
        throw AxiomViolation(0, l1, "lines " + std::to_string(l1) + " and " + std::to_string(l2) +
                                        " share " + std::to_string(common) + " points");
    }
}

// --------------------------------------------------------------------- PG(2,q)

PointId pg2_point_index(const Gf2mField& field, std::array<std::uint32_t, 3> x) {
  const std::uint32_t q = field.order();
  int lead = 0;
  while (lead < 3 && x[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("zero vector is not a projective point");
  const std::uint32_t s = field.inv(x[lead]);
  for (auto& c : x) c = field.mul(c, s);
  switch (lead) {
    case 2: return 1;
    case 1: return static_cast<PointId>(2 + x[2]);
    default: return static_cast<PointId>(2 + q + x[1] * q + x[2]);
  }
}

std::array<std::uint32_t, 3> pg2_coordinates(const Gf2mField& field, PointId p) {
  const std::uint32_t q = field.order();
  if (p < 1 || static_cast<std::uint32_t>(p) > q * q + q + 1)
    throw std::out_of_range("point index out of range");
  if (p == 1) return {0, 0, 1};
  const std::uint32_t i = static_cast<std::uint32_t>(p) - 2;
  if (i < q) return {0, 1, i};
  return {1, (i - q) / q, (i - q) % q};
}

PlanePtr make_pg2(const Gf2mField& field) {
  const std::uint32_t q = field.order();
  const int v = static_cast<int>(q * q + q + 1);
  IncidenceStructure s;
  s.n_points = v;
  s.label = "PG(2," + std::to_string(q) + ")";
  std::vector<std::array<std::uint32_t, 3>> coords(v);
  for (int p = 1; p <= v; ++p) coords[p - 1] = pg2_coordinates(field, p);
  // Lines are indexed by normalized dual coordinates with the point ordering.
  for (int l = 1; l <= v; ++l) {
    const auto u = coords[l - 1];
    std::vector<PointId> pts;
    for (int p = 1; p <= v; ++p) {
      const auto& x = coords[p - 1];
      const std::uint32_t dot =
          field.mul(u[0], x[0]) ^ field.mul(u[1], x[1]) ^ field.mul(u[2], x[2]);
      if (dot == 0) pts.push_back(p);
    }
    s.blocks.push_back(std::move(pts));
  }
  return std::make_shared<const ProjectivePlane>(static_cast<int>(q), std::move(s));
}

// ------------------------------------------------------------------ plane I/O

namespace {

bool is_skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<int> parse_ints(const std::string& text, int line_number) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_number, "expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

PlanePtr parse_plane(std::istream& in) {
  std::string text;
  int line_number = 0;
  bool have_header = false;
  int q = 0;
  IncidenceStructure s;
  while (std::getline(in, text)) {
    ++line_number;
    if (is_skippable(text)) continue;
    if (!have_header) {
      std::istringstream ss(text);
      std::string kw_plane, label, kw_order, extra;
      if (!(ss >> kw_plane >> label >> kw_order >> q) || kw_plane != "plane" ||
          kw_order != "order" || (ss >> extra))
        throw ParseError(line_number, "expected header 'plane <label> order <q>'");
      if (q < 2) throw ParseError(line_number, "plane order must be at least 2");
      s.label = label;
      s.n_points = q * q + q + 1;
      have_header = true;
      continue;
    }
    auto pts = parse_ints(text, line_number);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 1 || pts[i] > s.n_points)
        throw ParseError(line_number, "point index " + std::to_string(pts[i]) + " out of range");
      if (i > 0 && pts[i] <= pts[i - 1])
        throw ParseError(line_number, "point indices must be strictly ascending");
    }
    s.blocks.push_back(std::move(pts));
  }
  if (!have_header) throw ParseError(line_number, "missing plane header");

  std::vector<std::vector<PointId>> sorted = s.blocks;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    const auto pos = std::find(s.blocks.begin(), s.blocks.end(), *it);
    const auto dup = std::find(pos + 1, s.blocks.end(), *it);
    throw AxiomViolation(it->empty() ? 0 : it->front(),
                         static_cast<int>(dup - s.blocks.begin()) + 1, "duplicate line");
  }
  return std::make_shared<const ProjectivePlane>(q, std::move(s));
}

PlanePtr parse_plane_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plane file " + path);
  return parse_plane(in);
}

void serialize_plane(std::ostream& out, const ProjectivePlane& plane) {
  out << "plane " << plane.label() << " order " << plane.order() << '\n';
  for (int l = 1; l <= plane.n_lines(); ++l) {
    const auto& pts = plane.line(l);
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i];
    out << '\n';
  }
}

PlanePtr dual_plane(const ProjectivePlane& p) {
  IncidenceStructure s;
  s.n_points = p.n_lines();
  s.label = p.label() + "^perp";
  for (PointId x = 1; x <= p.n_points(); ++x) s.blocks.push_back(p.lines_through(x));
  return std::make_shared<const ProjectivePlane>(p.order(), std::move(s));
}

// -------------------------------------------------------------------- arc I/O

ArcFile parse_arc(std::istream& in) {
  ArcFile arc;
  std::string text;
  int line_number = 0;
  bool have_header = false;
  bool have_points = false;
  while (std::getline(in, text)) {
    ++line_number;
    if (is_skippable(text)) continue;
    if (!have_header) {
      std::istringstream ss(text);
      std::string kw_arc, kw_plane, kw_degree, extra;
      if (!(ss >> kw_arc >> arc.label >> kw_plane >> arc.plane_label >> kw_degree >> arc.degree) ||
          kw_arc != "arc" || kw_plane != "plane" || kw_degree != "degree" || (ss >> extra))
        throw ParseError(line_number, "expected header 'arc <label> plane <label> degree <k>'");
      have_header = true;
      continue;
    }
    if (have_points) throw ParseError(line_number, "unexpected content after point list");
    arc.points = parse_ints(text, line_number);
    have_points = true;
  }
  if (!have_header) throw ParseError(line_number, "missing arc header");
  if (!have_points) throw ParseError(line_number, "missing arc point list");
  return arc;
}

ArcFile parse_arc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open arc file " + path);
  return parse_arc(in);
}

void serialize_arc(std::ostream& out, const ArcFile& arc) {
  out << "arc " << arc.label << " plane " << arc.plane_label << " degree " << arc.degree << '\n';
  for (std::size_t i = 0; i < arc.points.size(); ++i) out << (i ? " " : "") << arc.points[i];
  out << '\n';
}

}  // namespace maxarc
