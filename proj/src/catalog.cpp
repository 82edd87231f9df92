#include "maxarc/catalog.hpp"

#include <bit>
#include <cstdlib>
#include <regex>

namespace maxarc {

namespace {

constexpr const char* kPerp = "^perp";

bool strip_perp(std::string& label) {
  const std::string suffix = kPerp;
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    label.resize(label.size() - suffix.size());
    return true;
  }
  return false;
}

std::filesystem::path require(const std::optional<std::filesystem::path>& dir,
                              const std::string& file) {
  if (!dir)
    throw MissingData(file + " needed but " + std::string(kDataDirVariable) + " is not set");
  auto path = *dir / file;
  if (!std::filesystem::exists(path)) throw MissingData("missing data file " + path.string());
  return path;
}

// Additive subgroups giving the two inequivalent degree-4 Denniston arcs of
// PG(2,16), told apart by the orders of their automorphism groups (68, 408).
struct NamedDenniston {
  const char* name;
  std::vector<std::uint32_t> generators;
};
const std::vector<NamedDenniston>& named_denniston() {
  static const std::vector<NamedDenniston> arcs = {{"PG(2,16).1", {1, 2}},
                                                   {"PG(2,16).2", {1, 6}}};
  return arcs;
}

}  // namespace

std::optional<std::filesystem::path> data_directory() {
  const char* env = std::getenv(kDataDirVariable);
  if (!env || !*env) return std::nullopt;
  return std::filesystem::path(env);
}

PlanePtr load_plane(const std::string& label, const std::optional<std::filesystem::path>& dir) {
  std::string base = label;
  if (strip_perp(base)) return dual_plane(*load_plane(base, dir));
  static const std::regex pg(R"(PG\(2,(\d+)\))");
  std::smatch m;
  if (std::regex_match(base, m, pg)) {
    const int q = std::stoi(m[1]);
    if (q < 2 || (q & (q - 1)) != 0)
      throw std::invalid_argument("only PG(2,2^m) is built internally: " + label);
    return make_pg2(Gf2mField(std::countr_zero(static_cast<unsigned>(q))));
  }
  return parse_plane_file(require(dir, base + ".plane").string());
}

Arc load_arc(const std::string& name, const std::optional<std::filesystem::path>& dir) {
  std::string base = name;
  if (strip_perp(base)) {
    Arc dual = dual_arc(load_arc(base, dir));
    dual.set_label(name);
    return dual;
  }

  static const std::regex den(R"(denniston-(\d+)-(\d+))");
  std::smatch m;
  if (std::regex_match(base, m, den)) {
    const int deg = std::stoi(m[1]);
    const int s = std::stoi(m[2]);
    if (deg < 1 || deg > 10 || s < 1 || s > deg)
      throw std::invalid_argument("need 1 <= s <= m <= 10: " + name);
    return denniston_arc(Gf2mField(deg), s);
  }
  for (const auto& nd : named_denniston()) {
    if (base != nd.name) continue;
    Arc a = denniston_arc(Gf2mField(4), nd.generators);
    a.set_label(base);
    return a;
  }
  if (const KnownArc* known = find_known_arc(base)) {
    Arc a = validate_arc(load_plane(known->plane_label, dir), known->points, known->degree);
    a.set_label(base);
    return a;
  }
  const ArcFile file = parse_arc_file(require(dir, base + ".arc").string());
  Arc a = validate_arc(load_plane(file.plane_label, dir), file.points, file.degree);
  a.set_label(file.label.empty() ? base : file.label);
  return a;
}

std::vector<std::string> internal_arc_names() {
  std::vector<std::string> names = {"denniston-2-1", "denniston-2-2", "denniston-3-1",
                                    "denniston-3-2"};
  for (const auto& nd : named_denniston()) names.emplace_back(nd.name);
  return names;
}

}  // namespace maxarc
