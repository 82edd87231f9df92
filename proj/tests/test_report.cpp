#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "maxarc/catalog.hpp"
#include "maxarc/reference.hpp"
#include "maxarc/report.hpp"

using namespace maxarc;

TEST_CASE("internal arcs resolve") {
  const std::optional<std::filesystem::path> none;
  for (const auto& name : internal_arc_names()) {
    const Arc a = load_arc(name, none);
    CHECK(a.size() > 0);
  }
  CHECK(load_arc("PG(2,16).1", none).label() == "PG(2,16).1");
  const Arc d = load_arc("PG(2,16).2^perp", none);
  CHECK(d.label() == "PG(2,16).2^perp");
  CHECK(d.plane()->label() == "PG(2,16)^perp");
  CHECK(load_arc("denniston-4-1", none).size() == 18);
  CHECK_THROWS_AS(load_arc("SEMI2.7", none), MissingData);
  CHECK_THROWS_AS(load_arc("UNKNOWN.1", none), MissingData);
  CHECK_THROWS(load_arc("denniston-2-3", none));
  CHECK(load_plane("PG(2,8)", none)->n_points() == 73);
  CHECK_THROWS(load_plane("PG(2,6)", none));
}

TEST_CASE("arc and plane files from a data directory") {
  const auto dir = std::filesystem::temp_directory_path() / "maxarc_report_test";
  std::filesystem::create_directories(dir);
  const PlanePtr plane = make_pg2(Gf2mField(4));
  {
    std::ofstream f(dir / "TEST.plane");
    f << "# regenerated PG(2,16)\n";
    std::ostringstream s;
    serialize_plane(s, *plane);
    std::string text = s.str();
    f << "plane TEST" << text.substr(text.find(" order"));
  }
  const Arc den = denniston_arc(Gf2mField(4), 2);
  {
    std::ofstream f(dir / "TEST.1.arc");
    serialize_arc(f, {"TEST.1", "TEST", 4, den.points()});
  }
  const Arc a = load_arc("TEST.1", dir);
  CHECK(a.label() == "TEST.1");
  CHECK(a.plane()->label() == "TEST");
  CHECK(a.points() == den.points());
  CHECK(load_arc("TEST.1^perp", dir).size() == 52);
  {
    std::ofstream f(dir / "BAD.1.arc");
    std::vector<PointId> pts = den.points();
    pts[0] = pts[0] == 1 ? 2 : 1;
    if (std::count(pts.begin(), pts.end(), pts[0]) > 1) pts[0] = 3;
    serialize_arc(f, {"BAD.1", "TEST", 4, pts});
  }
  CHECK_THROWS_AS(load_arc("BAD.1", dir), NotMaximal);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report for the affine plane of order 4") {
  ReportOptions opt;
  opt.resolutions = true;
  const ArcReport r = build_report(load_arc("denniston-2-2", std::nullopt), opt);
  CHECK(r.n == 16);
  CHECK(r.rank == 9);
  CHECK(r.d == 4);
  CHECK(r.a4 == 20);
  CHECK(r.k_perp == 7);
  CHECK(r.d_perp == 6);
  CHECK(r.bounds.lower == 8);
  CHECK(r.bounds.upper == 11);
  CHECK(r.bounds_hold);
  CHECK(r.parallel_classes == 5);
  CHECK(r.resolutions == 1);
  CHECK_FALSE(r.parallel_classes_dual.has_value());
  CHECK(r.conjecture_holds == true);
  CHECK(r.theorem_ok());
  CHECK(r.a_d_perp == r.hyperovals);
}

TEST_CASE("report JSON round trip and stable table") {
  const ArcReport r = build_report(load_arc("denniston-3-2", std::nullopt));
  CHECK(r.rank == 19);
  CHECK(r.k_perp == 9);
  CHECK(r.d_perp == 10);
  CHECK(r.design_automorphisms == 1512);
  CHECK(r.parallel_classes_dual.has_value());
  const nlohmann::json j = to_json(r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  CHECK(format_reports({r}) == format_reports({build_report(load_arc("denniston-3-2", std::nullopt))}));
}

TEST_CASE("reference tables are internally consistent") {
  CHECK(design_census().size() == 36);
  std::set<std::string> arcs;
  for (const auto& row : design_census()) arcs.insert(row.arc);

  int members = 0;
  std::set<std::string> seen;
  std::map<std::string, int> rank_of;
  for (const auto& cls : code_classes()) {
    for (const auto& m : cls.members) {
      ++members;
      CHECK(seen.insert(m).second);
      std::string base = m;
      if (base.size() > 5 && base.substr(base.size() - 5) == "^perp") base.resize(base.size() - 5);
      CHECK(arcs.count(base));
      rank_of[m] = cls.rank;
    }
  }
  CHECK(code_classes().size() == 27);
  CHECK(members == 55);

  CHECK(code_parameters().size() == 27);
  for (const auto& row : code_parameters()) {
    CHECK(row.k + row.k_perp == 52);
    CHECK(row.d % 2 == 0);
    CHECK(row.d_perp % 2 == 0);
    const auto it = rank_of.find(row.arc);
    REQUIRE(it != rank_of.end());
    CHECK(it->second == row.k);
  }
}
