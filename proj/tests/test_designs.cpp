#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "maxarc/codes.hpp"
#include "maxarc/designs.hpp"
#include "maxarc/exact_cover.hpp"
#include "oracles.hpp"

using namespace maxarc;

namespace {

void check_pair_coverage(const Design& d) {
  std::vector<std::vector<int>> cover(d.v() + 1, std::vector<int>(d.v() + 1, 0));
  for (const auto& b : d.blocks()) {
    CHECK(static_cast<int>(b.size()) == d.k());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) ++cover[b[i]][b[j]];
  }
  for (int x = 1; x <= d.v(); ++x)
    for (int y = x + 1; y <= d.v(); ++y) CHECK(cover[x][y] == 1);
  CHECK(d.b() * d.k() * (d.k() - 1) == d.v() * (d.v() - 1));
}

void check_resolution(const Design& d, const Resolution& r) {
  CHECK(static_cast<int>(r.classes.size()) == d.r());
  std::vector<int> seen(d.b() + 1, 0);
  for (const auto& pc : r.classes) {
    std::vector<int> cover(d.v() + 1, 0);
    for (int id : pc.block_ids) {
      ++seen[id];
      for (PointId p : d.block(id)) ++cover[p];
    }
    for (int p = 1; p <= d.v(); ++p) CHECK(cover[p] == 1);
  }
  for (int id = 1; id <= d.b(); ++id) CHECK(seen[id] == 1);
}

Design shuffled(const Design& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(d.v());
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<PointId>> blocks;
  for (const auto& b : d.blocks()) {
    std::vector<PointId> nb;
    for (PointId p : b) nb.push_back(perm[p - 1]);
    std::sort(nb.begin(), nb.end());
    blocks.push_back(nb);
  }
  std::shuffle(blocks.begin(), blocks.end(), rng);
  return Design(d.v(), d.k(), blocks, d.label());
}

}  // namespace

TEST_CASE("exact cover engine") {
  // Knuth's example: exactly one cover, options 0, 3 and 4.
  const std::vector<std::vector<int>> options = {
      {2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}};
  ExactCover ec(7, options);
  std::vector<std::vector<int>> found;
  ec.enumerate([&](const std::vector<int>& sol) {
    found.push_back(sol);
    return true;
  });
  REQUIRE(found.size() == 1);
  CHECK(found[0] == std::vector<int>{0, 3, 4});
  CHECK(ExactCover(2, {{0}, {1}, {0, 1}}).count() == 2);
  CHECK(ExactCover(2, {{0}}).count() == 0);
}

TEST_CASE("designs of Denniston arcs are Steiner systems") {
  for (int m = 2; m <= 4; ++m)
    for (int s = 1; s <= m; ++s) {
      const Arc a = denniston_arc(Gf2mField(m), s);
      const Design d = design_from_arc(a);
      CHECK(d.v() == a.size());
      CHECK(d.k() == a.degree());
      check_pair_coverage(d);
      if (s < m) check_pair_coverage(design_from_arc(dual_arc(a)));
    }
  const Design d = design_from_arc(denniston_arc(Gf2mField(4), 2));
  CHECK(d.b() == 221);
  CHECK(d.r() == 17);
}

TEST_CASE("design constructor rejects non-Steiner block sets") {
  CHECK_THROWS(Design(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK_THROWS(Design(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 4}}));
  CHECK_THROWS(Design(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                             {3, 5}}));
  CHECK_NOTHROW(Design(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                              {3, 5, 6}}));
}

TEST_CASE("affine plane of order 4") {
  const Arc a = denniston_arc(Gf2mField(2), 2);
  const Design d = design_from_arc(a);
  CHECK(d.v() == 16);
  CHECK(d.b() == 20);
  const auto classes = enumerate_parallel_classes(d);
  CHECK(classes.size() == 5);
  const auto res = enumerate_resolutions(d, classes);
  REQUIRE(res.size() == 1);
  check_resolution(d, res[0]);
  const auto emb = resolutions_from_embedding(a, d);
  REQUIRE(emb.size() == 1);
  CHECK(emb[0] == res[0]);
  CHECK_FALSE(find_hyperovals(d).empty());
}

TEST_CASE("compatibility") {
  const Arc a = denniston_arc(Gf2mField(3), 2);
  const Design d = design_from_arc(a);
  const auto emb = resolutions_from_embedding(a, d);
  REQUIRE(emb.size() == 10);
  CHECK(compatible_resolution_bound(2, 4) == 10);
  for (const auto& r : emb) {
    check_resolution(d, r);
    CHECK_FALSE(compatible(r, r));
  }
  for (std::size_t i = 0; i < emb.size(); ++i)
    for (std::size_t j = i + 1; j < emb.size(); ++j) CHECK(compatible(emb[i], emb[j]));

  const auto rep = max_compatible_bound_check(emb, 2, 4);
  CHECK(rep.m == 10);
  CHECK(rep.bound == 10);
  CHECK(rep.attains_bound);
  const auto one = max_compatible_bound_check({emb[0]}, 2, 4);
  CHECK(one.m == 1);
  CHECK(one.within_bound);
  CHECK_FALSE(one.attains_bound);
  CHECK_THROWS_AS(max_compatible_bound_check({emb[0], emb[1], emb[0]}, 2, 4),
                  NotPairwiseCompatible);

  // Every embedding resolution is among the enumerated ones, and no set of
  // mutually compatible resolutions found greedily exceeds the bound.
  const auto all = enumerate_resolutions(d, enumerate_parallel_classes(d));
  for (const auto& r : emb) CHECK(std::binary_search(all.begin(), all.end(), r));
  const auto greedy = greedy_compatible_subset(all);
  CHECK(greedy.size() <= 10);
  CHECK(greedy.size() >= 1);
  std::vector<Resolution> kept;
  for (int i : greedy) kept.push_back(all[i]);
  CHECK(max_compatible_bound_check(kept, 2, 4).within_bound);
}

TEST_CASE("resolutions sharing no class are incompatible") {
  const Arc a = denniston_arc(Gf2mField(3), 2);
  const Design d = design_from_arc(a);
  const auto all = enumerate_resolutions(d, enumerate_parallel_classes(d));
  int checked = 0;
  for (std::size_t i = 0; i < all.size() && checked < 50; ++i)
    for (std::size_t j = i + 1; j < all.size() && checked < 50; ++j) {
      std::vector<ParallelClass> common;
      std::set_intersection(all[i].classes.begin(), all[i].classes.end(),
                            all[j].classes.begin(), all[j].classes.end(),
                            std::back_inserter(common));
      if (common.empty()) {
        CHECK_FALSE(compatible(all[i], all[j]));
        ++checked;
      }
    }
}

TEST_CASE("resolution counts do not depend on labeling") {
  const Design d = design_from_arc(denniston_arc(Gf2mField(3), 2));
  const auto classes = enumerate_parallel_classes(d);
  const auto res = enumerate_resolutions(d, classes);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Design e = shuffled(d, seed);
    const auto ce = enumerate_parallel_classes(e);
    CHECK(ce.size() == classes.size());
    CHECK(enumerate_resolutions(e, ce).size() == res.size());
    CHECK(find_hyperovals(e).size() == find_hyperovals(d).size());
  }
}

TEST_CASE("hyperovals match minimum-weight dual codewords") {
  for (int m = 2; m <= 4; ++m)
    for (int s = 1; s <= m; ++s) {
      if (m == 4 && s > 2) continue;
      const Design d = design_from_arc(denniston_arc(Gf2mField(m), s));
      const auto hyp = find_hyperovals(d);
      for (const auto& h : hyp) {
        CHECK(static_cast<int>(h.points.size()) == d.r() + 1);
        for (const auto& b : d.blocks()) {
          int hit = 0;
          for (PointId p : b) hit += std::binary_search(h.points.begin(), h.points.end(), p);
          CHECK((hit == 0 || hit == 2));
        }
      }
      const auto dual = gf2::dual_code(code_of_design(d));
      const auto wd = weight_distribution(dual);
      if (wd.min_nonzero_weight() == d.r() + 1) CHECK(wd[d.r() + 1] == hyp.size());
      else CHECK(hyp.empty());
    }
}

TEST_CASE("design and resolution text output") {
  const Arc a = denniston_arc(Gf2mField(2), 2);
  const Design d = design_from_arc(a);
  std::ostringstream out;
  write_design(out, d);
  std::istringstream in(out.str());
  std::string word, label;
  int v = 0, k = 0;
  in >> word >> label;
  CHECK(word == "design");
  in >> word >> v >> word >> k;
  CHECK(v == 16);
  CHECK(k == 4);
  int lines = 0;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 20);

  std::ostringstream res;
  write_resolution(res, resolutions_from_embedding(a, d).front());
  const std::string text = res.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
