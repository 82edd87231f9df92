#include "maxarc/report.hpp"

#include <iomanip>
#include <sstream>

#include "maxarc/canonical.hpp"
#include "maxarc/designs.hpp"

namespace maxarc {

namespace {

struct DesignCounts {
  long classes = 0;
  std::optional<long> resolutions;
};

DesignCounts count_resolvability(const Design& d, bool resolutions) {
  const auto classes = enumerate_parallel_classes(d);
  DesignCounts out{static_cast<long>(classes.size()), std::nullopt};
  if (resolutions) out.resolutions = static_cast<long>(enumerate_resolutions(d, classes).size());
  return out;
}

}  // namespace

ArcReport build_report(const Arc& arc, const ReportOptions& options) {
  ArcReport r;
  r.label = arc.label();
  r.plane = arc.plane()->label();
  r.q = arc.plane()->order();
  r.degree = arc.degree();
  r.n = arc.size();

  const Design d = design_from_arc(arc);
  const gf2::BinaryCode c = code_of_design(d);
  const gf2::BinaryCode dual = gf2::dual_code(c);
  const WeightDistribution wd = weight_distribution(c, options.cap);
  const WeightDistribution wd_dual = weight_distribution(dual, options.cap);

  r.rank = c.dimension();
  r.a2 = r.n >= 2 ? wd[2] : 0;
  r.a4 = r.n >= 4 ? wd[4] : 0;
  r.d = wd.min_nonzero_weight();
  r.k_perp = dual.dimension();
  r.d_perp = wd_dual.min_nonzero_weight();
  r.a_d_perp = r.d_perp > 0 ? wd_dual[r.d_perp] : BigInt(0);
  r.hyperovals = static_cast<int>(find_hyperovals(d).size());

  try {
    const CodeTheoremReport t = verify_code_theorem(d, options.cap);
    r.theorem_clauses = t.clauses;
    r.bounds = t.bounds;
  } catch (const TheoremViolation& e) {
    r.theorem_failure = e.what();
  } catch (const InconsistentParameters& e) {
    r.theorem_failure = e.what();
  }
  r.bounds_hold = r.bounds.upper > 0 && r.bounds.lower <= r.rank && r.rank <= r.bounds.upper;

  if (arc.degree() == 4) {
    const ConjectureReport cr = check_conjecture(d, options.cap);
    r.conjecture_holds = cr.min_distance == 4 && cr.all_min_words_are_blocks;
  }

  if (options.automorphisms) {
    r.design_automorphisms = design_automorphism_group_order(d);
    r.code_automorphisms = code_automorphism_group_order(c, options.cap);
  }
  if (options.parallel_classes) {
    const DesignCounts counts = count_resolvability(d, options.resolutions);
    r.parallel_classes = counts.classes;
    r.resolutions = counts.resolutions;
  }

  const bool has_dual = options.dual && arc.degree() < arc.plane()->order();
  if (has_dual && (options.parallel_classes || options.automorphisms)) {
    const Design dd = design_from_arc(dual_arc(arc));
    if (options.parallel_classes) {
      const DesignCounts counts = count_resolvability(dd, options.resolutions);
      r.parallel_classes_dual = counts.classes;
      r.resolutions_dual = counts.resolutions;
    }
    if (options.automorphisms)
      r.code_automorphisms_dual = code_automorphism_group_order(code_of_design(dd), options.cap);
  }
  return r;
}

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>)
    return v->str();
  else
    return *v;
}

template <class T>
std::optional<T> read_opt(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  if constexpr (std::is_same_v<T, BigInt>)
    return BigInt(v.get<std::string>());
  else
    return v.get<T>();
}

}  // namespace

nlohmann::json to_json(const ArcReport& r) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& [name, ok] : r.theorem_clauses) clauses.push_back({{"clause", name}, {"holds", ok}});
  return {
      {"label", r.label},
      {"plane", r.plane},
      {"q", r.q},
      {"degree", r.degree},
      {"n", r.n},
      {"design_automorphisms", opt(r.design_automorphisms)},
      {"parallel_classes", opt(r.parallel_classes)},
      {"parallel_classes_dual", opt(r.parallel_classes_dual)},
      {"resolutions", opt(r.resolutions)},
      {"resolutions_dual", opt(r.resolutions_dual)},
      {"rank", r.rank},
      {"a2", r.a2.str()},
      {"a4", r.a4.str()},
      {"code", {r.n, r.rank, r.d}},
      {"dual_code", {r.n, r.k_perp, r.d_perp}},
      {"a_d_perp", r.a_d_perp.str()},
      {"hyperovals", r.hyperovals},
      {"code_automorphisms", opt(r.code_automorphisms)},
      {"code_automorphisms_dual", opt(r.code_automorphisms_dual)},
      {"rank_bounds", {r.bounds.lower, r.bounds.upper}},
      {"rank_bound_t", r.bounds.t},
      {"rank_bound_d", r.bounds.d},
      {"bounds_hold", r.bounds_hold},
      {"conjecture_holds", opt(r.conjecture_holds)},
      {"theorem_clauses", clauses},
      {"theorem_failure", r.theorem_failure},
  };
}

ArcReport report_from_json(const nlohmann::json& j) {
  ArcReport r;
  r.label = j.at("label").get<std::string>();
  r.plane = j.at("plane").get<std::string>();
  r.q = j.at("q").get<int>();
  r.degree = j.at("degree").get<int>();
  r.n = j.at("n").get<int>();
  r.design_automorphisms = read_opt<BigInt>(j, "design_automorphisms");
  r.parallel_classes = read_opt<long>(j, "parallel_classes");
  r.parallel_classes_dual = read_opt<long>(j, "parallel_classes_dual");
  r.resolutions = read_opt<long>(j, "resolutions");
  r.resolutions_dual = read_opt<long>(j, "resolutions_dual");
  r.rank = j.at("rank").get<int>();
  r.a2 = BigInt(j.at("a2").get<std::string>());
  r.a4 = BigInt(j.at("a4").get<std::string>());
  r.d = j.at("code").at(2).get<int>();
  r.k_perp = j.at("dual_code").at(1).get<int>();
  r.d_perp = j.at("dual_code").at(2).get<int>();
  r.a_d_perp = BigInt(j.at("a_d_perp").get<std::string>());
  r.hyperovals = j.at("hyperovals").get<int>();
  r.code_automorphisms = read_opt<BigInt>(j, "code_automorphisms");
  r.code_automorphisms_dual = read_opt<BigInt>(j, "code_automorphisms_dual");
  r.bounds.lower = j.at("rank_bounds").at(0).get<int>();
  r.bounds.upper = j.at("rank_bounds").at(1).get<int>();
  r.bounds.t = j.at("rank_bound_t").get<int>();
  r.bounds.d = j.at("rank_bound_d").get<int>();
  r.bounds_hold = j.at("bounds_hold").get<bool>();
  r.conjecture_holds = read_opt<bool>(j, "conjecture_holds");
  for (const auto& c : j.at("theorem_clauses"))
    r.theorem_clauses.emplace_back(c.at("clause").get<std::string>(), c.at("holds").get<bool>());
  r.theorem_failure = j.at("theorem_failure").get<std::string>();
  return r;
}

namespace {

template <class T>
std::string show(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << *v;
  return s.str();
}

std::string pair_of(const std::string& a, const std::string& b) { return a + " / " + b; }

}  // namespace

std::string format_reports(const std::vector<ArcReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "arc" << std::setw(10) << "|Aut(D)|" << std::setw(14)
      << "par. cl." << std::setw(12) << "resol." << std::setw(6) << "rank" << std::setw(14)
      << "(A2,A4)" << std::setw(12) << "[n,k,d]" << std::setw(12) << "[n,k',d']"
      << std::setw(8) << "A_d'" << std::setw(6) << "hyp." << std::setw(10) << "bounds"
      << std::setw(10) << "conj." << std::setw(26) << "|Aut(C)|"
      << "theorems\n";
  for (const auto& r : reports) {
    const std::string code = "[" + std::to_string(r.n) + "," + std::to_string(r.rank) + "," +
                             std::to_string(r.d) + "]";
    const std::string dual = "[" + std::to_string(r.n) + "," + std::to_string(r.k_perp) + "," +
                             std::to_string(r.d_perp) + "]";
    const std::string bounds = r.bounds.upper > 0 ? std::to_string(r.bounds.lower) + ".." +
                                                        std::to_string(r.bounds.upper)
                                                  : "-";
    const std::string conj =
        r.conjecture_holds ? (*r.conjecture_holds ? "holds" : "fails") : "-";
    const std::string aut_code = r.code_automorphisms ? factorize(*r.code_automorphisms) : "-";
    out << std::left << std::setw(16) << r.label << std::setw(10) << show(r.design_automorphisms)
        << std::setw(14) << pair_of(show(r.parallel_classes), show(r.parallel_classes_dual))
        << std::setw(12) << pair_of(show(r.resolutions), show(r.resolutions_dual))
        << std::setw(6) << r.rank << std::setw(14)
        << ("(" + r.a2.str() + "," + r.a4.str() + ")") << std::setw(12) << code
        << std::setw(12) << dual << std::setw(8) << r.a_d_perp.str() << std::setw(6)
        << r.hyperovals << std::setw(10) << bounds << std::setw(10) << conj << std::setw(26)
        << aut_code << (r.theorem_ok() ? "ok" : "FAILED: " + r.theorem_failure) << "\n";
  }
  return out.str();
}

}  // namespace maxarc
