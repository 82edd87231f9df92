#include "maxarc/reference.hpp"

namespace maxarc {

const std::vector<DesignCensusRow>& design_census() {
  static const std::vector<DesignCensusRow> rows = {
      {"PG(2,16).1", 68, 2329, 2329, 409, 409, "2^2 17^1", "2^2 17^1"},
      {"PG(2,16).2", 409, 2550, 2550, 460, 460, "2^3 3^1 17^1", "2^3 3^1 17^1"},
      {"DEMP.1", 24, 250, 319, 52, 52, "2^46 3^19 5^9 7^6 11^3 13^3 17^3", "2^33 3^2"},
      {"DEMP.2", 144, 543, 1023, 52, 214, "2^44 3^14", "2^18 3^4 5^1 7^1"},
      {"DEMP.3", 24, 611, 645, 52, 52, "2^45 3^13", "2^41 3^11 5^2 7^2"},
      {"DEMP.4", 48, 531, 691, 52, 52, "2^44 3^14", "2^45 3^15"},
      {"DEMP.5", 4, 255, 377, 52, 52, "2^46 3^19 5^9 7^6 11^3 13^3 17^3", "2^33 3^2"},
      {"SEMI4.1", 96, 2569, 2569, 52, 52, "2^17 3^3", "2^17 3^3"},
      {"SEMI2.1", 24, 327, 327, 52, 52, "2^45 3^15", "2^45 3^15"},
      {"SEMI2.2", 144, 1279, 1279, 55, 55, "2^18 3^4 5^1 7^1", "2^18 3^4 5^1 7^1"},
      {"SEMI2.3", 32, 1497, 1497, 52, 52, "2^26 3^1", "2^26 3^1"},
      {"SEMI2.4", 32, 1313, 1313, 52, 52, "2^25 3^1", "2^25 3^1"},
      {"SEMI2.5", 16, 1045, 1045, 52, 52, "2^37 3^6", "2^37 3^6"},
      {"SEMI2.6", 48, 547, 691, 52, 52, "2^45 3^15", "2^17 3^3"},
      {"SEMI2.7", 48, 691, 547, 52, 52, "2^17 3^3", "2^45 3^15"},
      {"LMRH.1", 96, 2265, 2265, 104, 104, "2^45 3^15", "2^45 3^15"},
      {"LMRH.2", 32, 2377, 2289, 64, 64, "2^45 3^15", "2^45 3^15"},
      {"MATH.1", 24, 291, 275, 52, 52, "2^49 3^20 5^9 7^6 11^3 13^3", "2^49 3^20 5^9 7^6 11^3 13^3"},
      {"MATH.2", 32, 1729, 1553, 52, 52, "2^37 3^2", "2^45 3^15"},
      {"MATH.3", 32, 2401, 2217, 64, 104, "2^45 3^15", "2^45 3^15"},
      {"MATH.4", 32, 1665, 1473, 52, 52, "2^38 3^5", "2^38 3^5"},
      {"MATH.5", 16, 1233, 1457, 52, 52, "2^43 3^12 5^2 7^2", "2^36 3^4"},
      {"MATH.6", 16, 1329, 1405, 52, 52, "2^48 3^14 5^6 7^6", "2^45 3^15"},
      {"MATH.7", 16, 1125, 1505, 52, 52, "2^48 3^14 5^6 7^6", "2^45 3^15"},
      {"HALL.1", 24, 274, 558, 52, 52, "2^49 3^20 5^9 7^6 11^3 13^3", "2^6 3^2"},
      {"HALL.2", 4, 309, 445, 52, 52, "2^46 3^19 5^9 7^6 11^3 13^3 17^3", "2^15 3^4"},
      {"BBH1.1", 24, 330, 330, 52, 52, "2^40 3^13 5^3 7^3", "2^40 3^13 5^3 7^3"},
      {"BBH1.2", 32, 2017, 2017, 136, 136, "2^38 3^5", "2^38 3^5"},
      {"BBH1.3", 4, 285, 285, 52, 52, "2^43 3^16 5^6 7^4 11^1", "2^43 3^16 5^6 7^4 11^1"},
      {"JOWK.1", 16, 1389, 1241, 52, 52, "2^37 3^2", "2^44 3^14 5^1 7^1"},
      {"JOWK.2", 32, 2409, 2321, 104, 52, "2^37 3^2", "2^38 3^6 5^1"},
      {"JOHN.1", 32, 1953, 1641, 144, 52, "2^45 3^15", "2^48 3^14 5^6 7^6"},
      {"JOHN.2", 32, 1953, 1841, 144, 52, "2^45 3^15", "2^48 3^14 5^6 7^6"},
      {"JOHN.3", 32, 2017, 1761, 136, 52, "2^38 3^5", "2^48 3^14 5^6 7^6"},
      {"JOHN.4", 32, 2409, 1929, 104, 52, "2^37 3^2", "2^48 3^14 5^6 7^6"},
      {"DSFP.1", 24, 1045, 1121, 52, 52, "2^45 3^13", "2^43 3^11"},
  };
  return rows;
}

const std::vector<CodeClassRow>& code_classes() {
  static const std::vector<CodeClassRow> rows = {
      {41, {"PG(2,16).1"}, 0, 221, "2^2 17^1"},
      {41, {"PG(2,16).2"}, 0, 221, "2^3 3^1 17^1"},
      {43, {"HALL.1^perp"}, 6, 1037, "2^6 3^2"},
      {45, {"DEMP.1^perp", "DEMP.5^perp"}, 24, 3989, "2^33 3^2"},
      {45, {"DEMP.2^perp", "SEMI2.2"}, 6, 4325, "2^18 3^4 5^1 7^1"},
      {45, {"SEMI4.1", "SEMI2.7"}, 0, 4469, "2^17 3^3"},
      {45, {"SEMI2.3"}, 18, 4165, "2^26 3^1"},
      {45, {"SEMI2.4"}, 16, 4277, "2^25 3^1"},
      {45, {"HALL.2^perp"}, 12, 4229, "2^15 3^4"},
      {46, {"JOHN.3"}, 42, 8293, "2^38 3^5"},
      {46, {"JOHN.4", "JOWK.1", "MATH.2"}, 26, 8613, "2^37 3^2"},
      {46, {"JOWK.2^perp"}, 46, 8325, "2^38 3^6 5^1"},
      {46, {"MATH.4", "MATH.4^perp"}, 42, 8549, "2^38 3^5"},
      {46, {"MATH.5^perp"}, 42, 8549, "2^36 3^4"},
      {46, {"SEMI2.5"}, 50, 8453, "2^37 3^6"},
      {47, {"BBH1.1"}, 120, 16853, "2^40 3^13 5^3 7^3"},
      {47, {"DEMP.2", "DEMP.4"}, 72, 17045, "2^44 3^14"},
      {47, {"DSFP.1", "DEMP.3"}, 74, 16997, "2^45 3^13"},
      {47, {"DSFP.1^perp"}, 66, 17093, "2^43 3^11"},
      {47, {"JOHN.1", "LMRH.1", "LMRH.2", "LMRH.2^perp", "MATH.2^perp", "MATH.3", "MATH.3^perp", "MATH.6^perp", "MATH.7^perp", "SEMI2.1", "SEMI2.6", "DEMP.4^perp"}, 78, 16901, "2^45 3^15"},
      {47, {"JOWK.1^perp"}, 94, 16709, "2^44 3^14 5^1 7^1"},
      {47, {"MATH.5"}, 106, 16869, "2^43 3^12 5^2 7^2"},
      {47, {"DEMP.3^perp"}, 98, 16965, "2^41 3^11 5^2 7^2"},
      {48, {"JOHN.1^perp", "JOHN.2^perp", "JOHN.3^perp", "JOHN.4^perp", "MATH.6", "MATH.7"}, 174, 33669, "2^48 3^14 5^6 7^6"},
      {48, {"BBH1.3"}, 186, 33829, "2^43 3^16 5^6 7^4 11^1"},
      {49, {"HALL.1", "MATH.1", "MATH.1^perp"}, 366, 67205, "2^49 3^20 5^9 7^6 11^3 13^3"},
      {49, {"DEMP.1", "DEMP.5", "HALL.2"}, 408, 67541, "2^46 3^19 5^9 7^6 11^3 13^3 17^3"},
  };
  return rows;
}

const std::vector<CodeParameterRow>& code_parameters() {
  static const std::vector<CodeParameterRow> rows = {
      {"PG(2,16).1", 41, 4, 11, 18, 54},
      {"PG(2,16).2", 41, 4, 11, 18, 54},
      {"HALL.1^perp", 43, 2, 9, 18, 24},
      {"DEMP.1^perp", 45, 2, 7, 20, 3},
      {"DEMP.2^perp", 45, 2, 7, 20, 3},
      {"HALL.2^perp", 45, 2, 7, 20, 3},
      {"SEMI2.3", 45, 2, 7, 20, 11},
      {"SEMI2.4", 45, 2, 7, 18, 4},
      {"SEMI4.1", 45, 4, 7, 20, 3},
      {"JOHN.3", 46, 2, 6, 20, 3},
      {"JOHN.4", 46, 2, 6, 20, 3},
      {"JOWK.2^perp", 46, 2, 6, 20, 11},
      {"MATH.4", 46, 2, 6, 18, 4},
      {"MATH.5^perp", 46, 2, 6, 18, 4},
      {"SEMI2.5", 46, 2, 6, 18, 4},
      {"BBH1.1", 47, 2, 5, 18, 6},
      {"DEMP.2", 47, 2, 5, 20, 3},
      {"DEMP.3^perp", 47, 2, 5, 18, 4},
      {"DSFP.1", 47, 2, 5, 20, 3},
      {"DSFP.1^perp", 47, 2, 5, 20, 1},
      {"JOHN.1", 47, 2, 5, 20, 3},
      {"JOWK.1^perp", 47, 2, 5, 20, 7},
      {"MATH.5", 47, 2, 5, 18, 4},
      {"BBH1.3", 48, 2, 4, 18, 2},
      {"JOHN.1^perp", 48, 2, 4, 20, 3},
      {"DEMP.1", 49, 2, 3, 18, 3},
      {"HALL.1", 49, 2, 3, 20, 3},
  };
  return rows;
}

}  // namespace maxarc
