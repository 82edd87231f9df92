#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "maxarc/arcs.hpp"
#include "maxarc/codes.hpp"

namespace maxarc {

struct ReportOptions {
  bool automorphisms = true;
  bool parallel_classes = true;
  /// Resolution enumeration takes about a minute per PG(2,16) design.
  bool resolutions = false;
  /// Also analyse the design of the dual arc when it exists.
  bool dual = true;
  int cap = gf2::kDefaultEnumerationCap;
};

/// Invariants of the design D of an arc, its binary code C, and, when
/// requested, of the design of the dual arc.
struct ArcReport {
  std::string label;
  std::string plane;
  int q = 0;
  int degree = 0;
  int n = 0;

  std::optional<BigInt> design_automorphisms;
  std::optional<long> parallel_classes;
  std::optional<long> parallel_classes_dual;
  std::optional<long> resolutions;
  std::optional<long> resolutions_dual;

  int rank = 0;
  BigInt a2 = 0;
  BigInt a4 = 0;
  int d = 0;
  int k_perp = 0;
  int d_perp = 0;
  BigInt a_d_perp = 0;
  int hyperovals = 0;
  std::optional<BigInt> code_automorphisms;
  std::optional<BigInt> code_automorphisms_dual;

  RankBounds bounds;
  bool bounds_hold = false;
  /// Only meaningful for arcs of degree 4.
  std::optional<bool> conjecture_holds;
  std::vector<std::pair<std::string, bool>> theorem_clauses;
  /// Empty when every clause holds.
  std::string theorem_failure;

  bool theorem_ok() const { return theorem_failure.empty(); }
  bool operator==(const ArcReport&) const = default;
};

ArcReport build_report(const Arc& arc, const ReportOptions& options = {});

nlohmann::json to_json(const ArcReport& r);
ArcReport report_from_json(const nlohmann::json& j);

/// Fixed-width table, one row per report.
std::string format_reports(const std::vector<ArcReport>& reports);

}  // namespace maxarc
