#include <doctest.h>

#include <sstream>

#include "maxarc/canonical.hpp"
#include "maxarc/designs.hpp"
#include "maxarc/geometry.hpp"

using namespace maxarc;

namespace {

// Carry-less product reduced bit by bit, independent of the field tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m) {
  std::uint32_t r = 0;
  for (int i = 0; i < m; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int bit = 2 * m; bit >= m; --bit)
    if (r >> bit & 1) r ^= modulus << (bit - m);
  return r;
}

std::string text_of(const ProjectivePlane& p) {
  std::ostringstream s;
  serialize_plane(s, p);
  return s.str();
}

}  // namespace

TEST_CASE("field arithmetic") {
  for (int m = 1; m <= 4; ++m) {
    const Gf2mField f(m);
    CHECK(Gf2mField::is_irreducible(f.modulus()));
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < f.order(); ++b)
        CHECK(f.mul(a, b) == slow_mul(a, b, f.modulus(), m));
    }
  }
  CHECK(Gf2mField::default_modulus(2) == 0b111);
  CHECK(Gf2mField::default_modulus(3) == 0b1011);
  CHECK(Gf2mField::default_modulus(4) == 0b10011);
  CHECK_FALSE(Gf2mField::is_irreducible(0b101));
}

TEST_CASE("PG(2,q) satisfies the plane axioms") {
  for (int m = 1; m <= 4; ++m) {
    const Gf2mField f(m);
    const PlanePtr p = make_pg2(f);
    const int q = 1 << m;
    CHECK(p->order() == q);
    CHECK(p->n_points() == q * q + q + 1);
    CHECK(p->n_lines() == q * q + q + 1);
    CHECK(p->label() == "PG(2," + std::to_string(q) + ")");
    for (int a = 1; a <= p->n_points(); ++a)
      for (int b = a + 1; b <= p->n_points(); ++b) {
        const auto& l = p->line(p->line_through(a, b));
        CHECK(std::binary_search(l.begin(), l.end(), a));
        CHECK(std::binary_search(l.begin(), l.end(), b));
      }
  }
}

TEST_CASE("point numbering of PG(2,q)") {
  const Gf2mField f(2);
  CHECK(pg2_point_index(f, {0, 0, 1}) == 1);
  CHECK(pg2_point_index(f, {0, 1, 0}) == 2);
  CHECK(pg2_point_index(f, {0, 1, 3}) == 5);
  CHECK(pg2_point_index(f, {1, 0, 0}) == 6);
  CHECK(pg2_point_index(f, {1, 3, 3}) == 21);
  for (int p = 1; p <= 21; ++p) CHECK(pg2_point_index(f, pg2_coordinates(f, p)) == p);
  // Scalar multiples name the same point.
  CHECK(pg2_point_index(f, {2, 2, 2}) == pg2_point_index(f, {1, 1, 1}));
}

TEST_CASE("plane files round trip") {
  const PlanePtr p = make_pg2(Gf2mField(3));
  std::istringstream in(text_of(*p));
  const PlanePtr q = parse_plane(in);
  CHECK(q->structure() == p->structure());
  CHECK(q->order() == 8);
}

TEST_CASE("parser skips comments and blank lines") {
  std::istringstream in(
      "# Fano plane\nplane F order 2\n\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n# x\n2 5 7\n3 4 7\n3 5 6\n");
  const PlanePtr p = parse_plane(in);
  CHECK(p->label() == "F");
  CHECK(p->n_lines() == 7);
}

TEST_CASE("malformed plane files are rejected") {
  const std::string good_tail = "1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_plane(in);
  };
  CHECK_THROWS_AS(parse("plane F order 2\n1 2 x\n" + good_tail), ParseError);
  CHECK_THROWS_AS(parse("plane F order 2\n1 2 9\n" + good_tail), ParseError);
  CHECK_THROWS_AS(parse("plane F order 2\n3 2 1\n" + good_tail), ParseError);
  CHECK_THROWS_AS(parse("order 2\n1 2 3\n" + good_tail), ParseError);
  // A truncated line.
  CHECK_THROWS_AS(parse("plane F order 2\n1 2\n" + good_tail), AxiomViolation);
  // A repeated line.
  CHECK_THROWS_AS(parse("plane F order 2\n1 4 5\n" + good_tail), AxiomViolation);
  // Two lines sharing two points.
  CHECK_THROWS_AS(parse("plane F order 2\n1 2 3\n1 2 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n"),
                  AxiomViolation);
  // Missing line.
  CHECK_THROWS_AS(parse("plane F order 2\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n"),
                  AxiomViolation);
}

TEST_CASE("axiom violations report the offending line") {
  const PlanePtr p = make_pg2(Gf2mField(2));
  IncidenceStructure s = p->structure();
  s.blocks[6].pop_back();
  try {
    ProjectivePlane bad(4, s);
    FAIL("expected an axiom violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.line() == 7);
  }
}

TEST_CASE("dual plane") {
  const PlanePtr p = make_pg2(Gf2mField(2));
  const PlanePtr d = dual_plane(*p);
  CHECK(d->label() == "PG(2,4)^perp");
  CHECK(d->n_points() == 21);
  for (int l = 1; l <= 21; ++l) CHECK(d->lines_through(l) == p->line(l));
  const PlanePtr dd = dual_plane(*d);
  CHECK(dd->structure().blocks == p->structure().blocks);

  // PG(2,4) is self-dual.
  const Design dp(21, 5, p->structure().blocks);
  const Design dq(21, 5, d->structure().blocks);
  CHECK(designs_isomorphic(dp, dq).isomorphic);
}

TEST_CASE("arc files") {
  std::istringstream in("# comment\narc A plane PG(2,4) degree 2\n1 2 3 4 5 6\n");
  const ArcFile a = parse_arc(in);
  CHECK(a.label == "A");
  CHECK(a.plane_label == "PG(2,4)");
  CHECK(a.degree == 2);
  CHECK(a.points.size() == 6);
  std::ostringstream out;
  serialize_arc(out, a);
  std::istringstream back(out.str());
  const ArcFile b = parse_arc(back);
  CHECK(b.points == a.points);
  CHECK(b.label == a.label);
  std::istringstream bad("arc A plane P degree two\n1 2\n");
  CHECK_THROWS_AS(parse_arc(bad), ParseError);
}
