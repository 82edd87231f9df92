#include <doctest.h>

#include <numeric>
#include <set>

#include "maxarc/arcs.hpp"
#include "oracles.hpp"

using namespace maxarc;

namespace {

void check_secant_structure(const Arc& a) {
  const auto& p = *a.plane();
  const int q = p.order();
  int secants = 0;
  for (int l = 1; l <= p.n_lines(); ++l) {
    int hit = 0;
    for (PointId x : p.line(l)) hit += a.contains(x);
    CHECK((hit == 0 || hit == a.degree()));
    secants += hit == a.degree();
  }
  CHECK(secants * a.degree() == a.size() * (q + 1));
  for (PointId x : a.points()) {
    int through = 0;
    for (int l : p.lines_through(x)) {
      int hit = 0;
      for (PointId y : p.line(l)) hit += a.contains(y);
      through += hit == a.degree();
    }
    CHECK(through == q + 1);
  }
}

}  // namespace

TEST_CASE("Denniston arcs are maximal for every m <= 4") {
  for (int m = 1; m <= 4; ++m)
    for (int s = 1; s <= m; ++s) {
      const Arc a = denniston_arc(Gf2mField(m), s);
      const int q = 1 << m;
      const int k = 1 << s;
      CHECK(a.size() == (1 << (m + s)) - q + k);
      CHECK(a.degree() == k);
      const Arc again = validate_arc(a.plane(), a.points(), k);
      CHECK(again.points() == a.points());
      check_secant_structure(a);
    }
  CHECK(denniston_arc(Gf2mField(4), 1).size() == 18);
  CHECK(denniston_arc(Gf2mField(3), 2).size() == 28);
}

TEST_CASE("Denniston arc from explicit subgroup generators") {
  const Gf2mField f(4);
  const std::vector<std::uint32_t> gens{1, 6};
  const Arc a = denniston_arc(f, gens);
  CHECK(a.size() == 52);
  CHECK(a.degree() == 4);
  const std::vector<std::uint32_t> dependent{1, 6, 7};
  CHECK(denniston_arc(f, dependent).points() == a.points());
}

TEST_CASE("perturbed arcs are rejected with the first bad line") {
  const Arc a = denniston_arc(Gf2mField(4), 2);
  std::vector<PointId> pts = a.points();
  PointId outside = 1;
  while (a.contains(outside)) ++outside;
  pts[10] = outside;
  try {
    validate_arc(a.plane(), pts, 4);
    FAIL("perturbed set accepted");
  } catch (const NotMaximal& e) {
    CHECK(e.line() >= 1);
    const auto& line = a.plane()->line(e.line());
    std::set<PointId> s(pts.begin(), pts.end());
    int hit = 0;
    for (PointId x : line) hit += s.count(x);
    CHECK(hit == e.intersection_size());
    CHECK(hit != 0);
    CHECK(hit != 4);
    for (int l = 1; l < e.line(); ++l) {
      int h = 0;
      for (PointId x : a.plane()->line(l)) h += s.count(x);
      CHECK((h == 0 || h == 4));
    }
  }
}

TEST_CASE("degenerate and invalid inputs") {
  const PlanePtr p = make_pg2(Gf2mField(2));
  std::vector<PointId> all(21);
  std::iota(all.begin(), all.end(), 1);
  CHECK(validate_arc(p, all, 5).size() == 21);
  // A single line meets every other line once, so it is not an arc of degree q+1.
  CHECK_THROWS_AS(validate_arc(p, p->line(1), 5), NotMaximal);
  try {
    validate_arc(p, std::vector<PointId>{}, 2);
    FAIL("empty set accepted");
  } catch (const NotMaximal& e) {
    CHECK(e.line() == 0);
    CHECK(e.intersection_size() == 0);
  }
  CHECK_THROWS_AS(validate_arc(p, std::vector<PointId>{1, 1, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_arc(p, std::vector<PointId>{0, 1, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_arc(p, std::vector<PointId>{1, 2, 22}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_arc(p, all, 6), std::invalid_argument);
}

TEST_CASE("dual arcs") {
  const Arc a = denniston_arc(Gf2mField(4), 2);
  const Arc d = dual_arc(a);
  CHECK(d.size() == 52);
  CHECK(d.degree() == 4);
  CHECK(d.points() == a.exterior_lines());
  CHECK(d.plane()->label() == "PG(2,16)^perp");

  const Arc b = denniston_arc(Gf2mField(3), 2);
  const Arc bd = dual_arc(b);
  CHECK(bd.degree() == 2);
  CHECK(bd.size() == 10);

  for (int m = 2; m <= 4; ++m)
    for (int s = 1; s < m; ++s) {
      const Arc x = denniston_arc(Gf2mField(m), s);
      const int k = x.degree();
      const int t = x.plane()->order() / k;
      const Arc xd = dual_arc(x);
      CHECK(xd.size() == (t * k - k + 1) * t);
      // The double dual lives in a plane equal to the original one.
      const Arc xdd = dual_arc(xd);
      CHECK(xdd.points() == x.points());
      CHECK(xdd.plane()->structure().blocks == x.plane()->structure().blocks);
    }
  const Arc full = denniston_arc(Gf2mField(2), 2);
  CHECK_THROWS(dual_arc(full));
}

TEST_CASE("intersection penalty") {
  CHECK(intersection_penalty(0, 4) == 0);
  CHECK(intersection_penalty(4, 4) == 0);
  CHECK(intersection_penalty(1, 4) == 1);
  CHECK(intersection_penalty(2, 4) == 4);
  CHECK(intersection_penalty(3, 4) == 1);
  CHECK(intersection_penalty(5, 4) == 1);
  CHECK(intersection_penalty(7, 4) == 9);
}

TEST_CASE("search config validation") {
  SearchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.random_move_probability = 1.5;
  CHECK_THROWS(cfg.validate());
  cfg = SearchConfig{};
  cfg.tabu_length = 0;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("tabu search finds exactly the hyperovals of PG(2,4)") {
  const PlanePtr p = make_pg2(Gf2mField(2));
  const auto expected = oracle::exhaustive_arcs(*p, 6, 2);
  CHECK(expected.size() == 168);

  SearchConfig cfg;
  cfg.k = 2;
  cfg.max_experiments = 3000;
  cfg.moves_per_experiment = 200;
  cfg.tabu_length = 3;
  cfg.rng_seed = 42;
  const SearchResult res = tabu_search(p, cfg);
  REQUIRE_FALSE(res.arcs.empty());
  std::set<std::vector<int>> truth(expected.begin(), expected.end());
  for (const Arc& a : res.arcs) CHECK(truth.count(a.points()));
  CHECK(res.arcs.size() == res.hits.size());
  CHECK(std::accumulate(res.hits.begin(), res.hits.end(), 0) <= res.experiments_run);
  CHECK(res.arcs.size() > 100);
  for (std::size_t i = 1; i < res.arcs.size(); ++i)
    CHECK(res.arcs[i - 1].points() < res.arcs[i].points());
}

TEST_CASE("tabu search is reproducible") {
  const PlanePtr p = make_pg2(Gf2mField(3));
  SearchConfig cfg;
  cfg.k = 2;
  cfg.max_experiments = 40;
  cfg.moves_per_experiment = 500;
  cfg.tabu_length = 5;
  cfg.rng_seed = 9;
  const SearchResult a = tabu_search(p, cfg);
  const SearchResult b = tabu_search(p, cfg);
  REQUIRE(a.arcs.size() == b.arcs.size());
  for (std::size_t i = 0; i < a.arcs.size(); ++i) CHECK(a.arcs[i].points() == b.arcs[i].points());
  CHECK(a.hits == b.hits);
  cfg.rng_seed = 10;
  const SearchResult c = tabu_search(p, cfg);
  CHECK(c.experiments_run == 40);
}

TEST_CASE("tabu search finds a (52,4)-arc in PG(2,16)") {
  const PlanePtr p = make_pg2(Gf2mField(4));
  SearchConfig cfg;
  cfg.k = 4;
  cfg.max_experiments = 200;
  cfg.moves_per_experiment = 20000;
  cfg.stop_after_hits = 1;
  cfg.rng_seed = 1;
  const SearchResult res = tabu_search(p, cfg);
  REQUIRE(res.arcs.size() == 1);
  CHECK(res.arcs[0].size() == 52);
  check_secant_structure(res.arcs[0]);
}

TEST_CASE("impossible degree returns nothing") {
  const PlanePtr p = make_pg2(Gf2mField(2));
  SearchConfig cfg;
  cfg.k = 3;  // 3 does not divide 4
  cfg.max_experiments = 5;
  cfg.moves_per_experiment = 100;
  const SearchResult res = tabu_search(p, cfg);
  CHECK(res.arcs.empty());
}

TEST_CASE("published point sets") {
  CHECK(known_arcs().size() == 11);
  for (const auto& k : known_arcs()) {
    CHECK(k.degree == 4);
    CHECK(k.points.size() == 52);
    std::set<PointId> s(k.points.begin(), k.points.end());
    CHECK(s.size() == 52);
    CHECK(*s.begin() >= 1);
    CHECK(*s.rbegin() <= 273);
    const std::string label = k.label;
    CHECK(label.substr(0, label.find('.')) == k.plane_label);
  }
  REQUIRE(find_known_arc("SEMI2.7") != nullptr);
  CHECK(find_known_arc("SEMI2.7")->points.front() == 261);
  CHECK(find_known_arc("NOPE.1") == nullptr);
}
