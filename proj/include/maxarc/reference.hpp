#pragma once

#include <string>
#include <vector>

namespace maxarc {

/// Published invariants of the 2-(52,4,1) design D of a (52,4)-arc and the
/// design D^perp of its dual arc. Group orders of the codes are given as
/// factorizations in the format of factorize().
struct DesignCensusRow {
  const char* arc;
  int design_automorphisms;
  int parallel_classes;
  int parallel_classes_dual;
  int resolutions;
  int resolutions_dual;
  const char* code_automorphisms;
  const char* code_automorphisms_dual;
};

/// One permutation-equivalence class of design codes. Members name the arc
/// whose design spans the code; a "^perp" suffix selects the dual arc.
struct CodeClassRow {
  int rank;
  std::vector<std::string> members;
  int a2;
  int a4;
  const char* automorphisms;
};

/// Parameters [52,k,d] of a design code and [52,k_perp,d_perp] of its dual,
/// with the number of minimum-weight dual codewords.
struct CodeParameterRow {
  const char* arc;
  int k;
  int d;
  int k_perp;
  int d_perp;
  int a_d_perp;
};

const std::vector<DesignCensusRow>& design_census();
const std::vector<CodeClassRow>& code_classes();
const std::vector<CodeParameterRow>& code_parameters();

}  // namespace maxarc
