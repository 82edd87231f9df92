#include "maxarc/canonical.hpp"

namespace maxarc {

const std::vector<KnownEquivalence>& known_equivalences() {
  static const std::vector<KnownEquivalence> table = {
      {"DEMP.1^perp", "DEMP.5^perp",
       "(1, 29, 13, 45)(2, 30, 16, 46, 4, 31, 14, 47)(3, 32, 15, 48)"
       "(5, 24, 7, 22)(6, 21, 8, 23)(9, 36, 10, 33)(11, 35)(12, 34)"
       "(18, 19, 20)(25, 28, 27, 26)(37, 41)(38, 42)(39, 43)(40, 44)"},
      {"SEMI2.2", "DEMP.2^perp",
       "(1, 50, 37, 25, 17, 48, 8, 2, 51, 9, 11, 31, 13, 26, 45, 12, 7, 14, 32, 39, 36, 18, 29, 40, 15, 10, 28, 35, 42, 6, 5)"
       "(3, 52, 46, 22, 34, 27)(4, 49, 23, 24)(20, 21, 30)(38, 41, 43, 47)"},
      {"SEMI4.1", "SEMI2.7",
       "(2, 33, 17, 31, 24, 29, 49, 35, 46, 51)"
       "(3, 42, 32, 45, 22, 21, 13, 26, 48, 14, 38, 9, 40, 50, 4, 11, 47, 44, 5, 30, 6, 41, 8, 23, 10, 18, 37, 25, 52)"
       "(7, 20, 39, 28, 34, 36, 12, 16, 27)"},
      {"JOWK.1", "MATH.2",
       "(1, 50)"
       "(2, 24, 21, 25, 26, 13, 9, 30, 35, 31, 40, 6, 51, 4, 42, 23, 43, 37, 5, 7, 49)"
       "(3, 20, 8, 10, 48, 36, 34, 14, 11, 28, 46, 52)"
       "(12, 29, 33, 16, 38, 27, 18, 39, 45, 32, 19)(15, 17, 44)(22, 41)"},
      {"JOHN.4", "MATH.2",
       "(1, 5, 7, 8, 12, 2, 6, 10)(3, 11)(4, 9)"
       "(13, 29, 25, 50, 41, 38, 14, 30, 28, 52, 37, 19, 32, 49, 16, 33, 26, 27, 24, 21, 47, 42, 18, 34, 45, 43)"
       "(15, 35, 46, 20, 36, 22, 48, 40, 17, 31, 51, 44, 39)"},
      {"MATH.4^perp", "MATH.4",
       "(1, 40, 14, 11, 48, 24, 13, 7, 41, 31, 3, 49, 5, 47, 35, 36, 27, 45, 33, 30, 4, 52, 19, 25, 44, 28, 38, 6, 39, 12, 51, 18, 21, 17, 29)"
       "(2, 46, 34, 32)(8, 37, 20, 26, 42, 23)(9, 50)(10, 43, 22)"},
      {"DEMP.2", "DEMP.4",
       "(2, 50)(3, 8, 51)(4, 12, 14, 52)(5, 28, 23, 20, 17, 21, 9, 7, 24, 15)"
       "(6, 42, 31, 49, 22, 36, 29, 39, 16)"
       "(11, 19, 18, 47, 27, 48, 46, 43, 44, 40, 35, 33, 13, 30, 32, 45, 37, 41, 38, 25, 34)"},
      {"DSFP.1", "DEMP.3",
       "(1, 49)(2, 51)"
       "(3, 24, 10, 6, 30, 25, 23, 21, 17, 22, 16, 41, 12, 26, 44, 29, 40, 28, 32, 8, 13, 18, 52, 4, 7, 34, 11, 14, 43, 20, 33, 35, 15, 50)"
       "(5, 48, 36, 27, 45, 39, 38, 31, 46, 42, 9, 47)(19, 37)"},
      {"LMRH.2", "SEMI2.1",
       "(1, 9)"
       "(2, 6, 48, 47, 20, 42, 14, 36, 27, 16, 45, 17, 32, 40, 11, 3, 12, 4, 15, 23, 37, 35, 52, 34, 49, 38, 8, 21, 10)"
       "(5, 51, 44)(7, 18, 39, 25)(13, 29, 19, 26)(22, 33)(24, 43, 28, 30)"
       "(31, 46)"},
      {"LMRH.2^perp", "SEMI2.1",
       "(6, 8, 20, 45, 51, 14, 32, 28, 46, 12, 21, 30, 34, 38, 10, 9)"
       "(7, 17, 36, 44, 16, 26, 40, 22, 33, 35, 41, 49, 50, 11, 18, 39, 19, 42, 52, 47, 15, 23, 24, 27, 43, 13, 29, 31, 25, 37)"},
      {"SEMI2.6", "SEMI2.1",
       "(6, 11, 14, 28, 39, 7, 25, 18, 38, 13, 20, 44, 49, 27, 45, 46, 19, 34, 23, 12, 47, 10, 35, 51, 22, 36, 26, 29, 21, 9, 17, 41, 43, 16, 50, 30, 15, 31, 48, 52, 33, 32, 42, 24)"},
      {"DEMP.4^perp", "SEMI2.1",
       "(1, 25)"
       "(2, 28, 4, 31, 49, 12, 50, 15, 41, 37, 10, 14, 38, 7, 29, 13, 35, 17, 36, 20, 45, 9, 11, 47, 18, 39, 19, 42, 40, 22, 33, 5, 26)"
       "(3, 34, 8, 32, 52, 51, 48, 21, 27)(6, 23, 24, 30, 16, 44, 46)"},
      {"LMRH.1", "SEMI2.1",
       "(6, 12, 17, 39, 44, 40, 32, 23, 45, 11, 24, 10, 27, 36, 29, 16, 20, 7, 30, 35, 41, 37, 49, 9, 48, 47, 43, 21, 34, 38, 52, 18, 19, 25, 28, 22, 42, 14, 15, 33, 13, 51, 50, 46)"
       "(26, 31)"},
      {"MATH.2^perp", "SEMI2.1",
       "(1, 29)"
       "(2, 32, 4, 23, 43, 41, 35, 28, 45, 5, 6, 9, 12, 51, 19, 47, 17, 11, 48, 20, 50, 10, 15, 24, 46, 8, 21, 37, 13, 30)"
       "(3, 26, 39, 49, 7, 18, 14, 27, 42, 38, 16, 33, 31)(22, 40, 52)"
       "(25, 36, 34)"},
      {"MATH.3", "SEMI2.1",
       "(1, 5)(2, 8, 4, 11, 34, 21, 6)"
       "(3, 14, 20, 31, 32, 51, 52, 22, 15, 47, 33, 42, 7)(9, 25)(10, 35, 45)"
       "(12, 41, 46, 40, 24, 36, 26, 23)"
       "(13, 50, 49, 27, 29, 48, 43, 19, 28, 39, 30, 18, 44)(16, 17, 38)"},
      {"MATH.3^perp", "SEMI2.1",
       "(1, 29)"
       "(2, 32, 4, 23, 19, 41, 31, 3, 26, 39, 43, 28, 45, 5, 6, 9, 12, 51, 49, 13, 30)"
       "(7, 18, 38, 40, 46, 8, 21)(10, 15, 24, 22)"
       "(11, 48, 20, 44, 34, 14, 27, 42, 25, 36, 50, 16, 33)(17, 35, 47)"},
      {"MATH.6^perp", "SEMI2.1",
       "(1, 29)"
       "(2, 32, 4, 23, 41, 17, 7, 21, 27, 36, 14, 38, 24, 25, 39, 28, 45, 43, 46, 47, 20, 37, 44, 50, 34, 8, 18, 5, 6, 9, 12, 48, 19, 11, 15, 13, 30)"
       "(3, 26, 42, 22, 52, 35, 40, 49, 16, 31)(10, 51, 33)"},
      {"MATH.7^perp", "SEMI2.1",
       "(1, 29)"
       "(2, 32, 4, 23, 49, 34, 50, 33, 8, 18, 11, 51, 41, 46, 19, 5, 6, 9, 12, 48, 20, 40, 52, 16, 38, 28, 45, 43, 14, 31, 3, 26, 42, 22, 25, 39, 24, 27, 36, 37, 44, 17, 7, 21, 35, 10, 15, 13, 30)"},
      {"JOHN.1", "SEMI2.1",
       "(1, 6)"
       "(2, 12, 48, 27, 43, 50, 30, 34, 36, 14, 35, 32, 42, 23, 40, 26, 41, 31, 11, 18, 13, 8, 4, 9, 51, 22, 52, 33, 25, 37, 28, 46, 7, 21, 17, 44, 45, 10)"
       "(5, 15, 38, 39, 47, 24, 20, 49, 19, 16)"},
      {"JOHN.1^perp", "MATH.6",
       "(1, 45)(2, 46)(3, 47)(4, 48)"
       "(5, 29, 42, 40, 25, 24, 36, 37, 17, 18, 26, 13, 9)"
       "(6, 30, 39, 20, 22, 34, 43, 49, 27, 14, 10)"
       "(7, 31, 50, 28, 16, 12, 8, 32, 51, 23, 35, 44, 52, 15, 11)"
       "(19, 21, 33, 41, 38)"},
      {"JOHN.2^perp", "MATH.6",
       "(1, 45)(2, 46)(3, 47)(4, 48)"
       "(5, 29, 42, 40, 25, 24, 36, 37, 17, 18, 26, 13, 9)"
       "(6, 30, 39, 20, 22, 34, 43, 49, 27, 14, 10)"
       "(7, 31, 50, 28, 16, 12, 8, 32, 51, 23, 35, 44, 52, 15, 11)"
       "(19, 21, 33, 41, 38)"},
      {"JOHN.3^perp", "MATH.6",
       "(1, 37)(2, 38)"
       "(3, 40, 4, 41, 33, 29, 15, 24, 52, 8, 46, 10, 17, 47, 11, 19, 50, 6, 42, 34, 30, 25, 13, 21, 43, 35, 31, 27, 16, 18, 48, 12, 20, 51, 7, 45, 9, 23, 49, 5, 39)"
       "(14, 22, 44, 36, 32, 28, 26)"},
      {"JOHN.4^perp", "MATH.6",
       "(1, 37)(2, 38)"
       "(3, 40, 4, 41, 33, 29, 15, 24, 52, 8, 46, 10, 17, 47, 11, 19, 50, 6, 42, 34, 30, 25, 13, 21, 43, 35, 31, 27, 16, 18, 48, 12, 20, 51, 7, 45, 9, 23, 49, 5, 39)"
       "(14, 22, 44, 36, 32, 28, 26)"},
      {"MATH.7", "MATH.6",
       "(6, 10, 13, 16, 21, 17)"
       "(7, 19, 23, 28, 22, 11, 36, 48, 49, 20, 47, 35, 43, 40)"
       "(8, 29, 39, 32, 37, 26)(9, 27, 34, 18, 45, 31, 30, 24, 14, 42)"
       "(12, 33, 46, 44, 15, 38, 51, 52, 25, 50, 41)"},
      {"MATH.1^perp", "MATH.1",
       "(1, 33)(2, 7, 47, 38, 52, 41, 32, 24, 13, 36, 4, 25, 19, 9, 34)"
       "(3, 8, 12, 28, 15, 26, 20, 17, 46, 37, 49, 16, 10, 35)"
       "(5, 27, 50, 31, 22, 23, 51, 39, 14, 6, 45, 30, 18, 48, 43, 42, 40, 29, 11)"},
      {"HALL.1", "MATH.1",
       "(6, 10, 13, 16, 21, 17)"
       "(7, 19, 23, 28, 22, 11, 36, 48, 49, 20, 47, 35, 43, 40)"
       "(8, 29, 39, 32, 37, 26)(9, 27, 34, 18, 45, 31, 30, 24, 14, 42)"
       "(12, 33, 46, 44, 15, 38, 51, 52, 25, 50, 41)"},
      {"DEMP.1", "HALL.2",
       "(1, 51, 37, 46, 31, 36, 43, 28, 27, 16, 26, 52, 50, 49, 41, 23, 25, 47, 32, 40, 4, 22, 3, 2)"
       "(5, 7, 13, 24)"
       "(6, 33, 10, 42, 18, 17, 35, 12, 9, 8, 19, 39, 14, 11, 15, 29)"
       "(20, 45, 21)(38, 48, 44)"},
      {"DEMP.5", "HALL.2",
       "(1, 49, 51, 48, 16, 34, 40, 37, 4, 19, 46, 42, 7, 26, 25, 6, 2, 17, 23, 11, 5, 24, 22, 39, 32, 45, 41, 50, 52, 47, 15, 31, 36, 29, 44, 38, 8, 3)"
       "(9, 28, 27, 10, 30, 33, 18, 35)(20, 43)"},
  };
  return table;
}

}  // namespace maxarc
