#include "maxarc/arcs.hpp"

namespace maxarc {

const std::vector<KnownArc>& known_arcs() {
  static const std::vector<KnownArc> arcs = {
      {"DEMP.3", "DEMP", 4,
       {263, 265, 266, 258, 32, 122, 142, 243, 187, 102, 61, 197, 84,
        232, 210, 156, 18, 126, 140, 251, 181, 112, 52, 195, 88, 237,
        214, 154, 30, 117, 144, 244, 178, 109, 54, 202, 83, 236, 219,
        152, 24, 116, 139, 252, 189, 99, 62, 208, 82, 229, 218, 150}},
      {"DEMP.4", "DEMP", 4,
       {273, 260, 257, 258, 14, 69, 61, 27, 34, 128, 255, 232, 153,
        97, 84, 186, 7, 71, 60, 22, 39, 124, 246, 227, 147, 108,
        86, 179, 8, 68, 63, 32, 45, 122, 242, 225, 149, 110, 89,
        187, 133, 194, 224, 175, 222, 161, 212, 138, 200, 141, 203, 169}},
      {"SEMI2.3", "SEMI2", 4,
       {263, 268, 265, 267, 23, 28, 228, 25, 27, 234, 240, 229, 4,
        16, 124, 5, 123, 10, 121, 119, 49, 251, 76, 63, 56, 145,
        252, 247, 75, 73, 50, 159, 152, 249, 71, 146, 36, 88, 202,
        48, 37, 216, 82, 81, 197, 208, 42, 210, 209, 95, 196, 223}},
      {"SEMI2.4", "SEMI2", 4,
       {259, 269, 262, 270, 20, 233, 32, 21, 231, 236, 26, 235, 4,
        16, 124, 5, 123, 10, 121, 119, 33, 90, 208, 47, 40, 209,
        85, 96, 196, 202, 34, 223, 216, 84, 197, 210, 49, 251, 66,
        63, 56, 155, 252, 247, 72, 79, 50, 156, 151, 249, 65, 153}},
      {"SEMI2.5", "SEMI2", 4,
       {260, 272, 266, 261, 23, 27, 121, 25, 124, 28, 119, 123, 1,
        2, 232, 15, 239, 8, 225, 226, 66, 146, 69, 154, 72, 152,
        74, 149, 49, 241, 58, 245, 63, 255, 53, 250, 36, 96, 44,
        219, 48, 89, 199, 84, 224, 43, 212, 220, 196, 87, 208, 201}},
      {"SEMI2.6", "SEMI2", 4,
       {260, 268, 266, 263, 18, 136, 216, 26, 25, 153, 133, 135, 30,
        213, 215, 131, 158, 146, 211, 154, 35, 79, 120, 39, 37, 112,
        80, 76, 40, 117, 119, 70, 111, 102, 115, 108, 6, 175, 206,
        12, 16, 57, 176, 172, 15, 201, 202, 166, 62, 50, 194, 58}},
      {"SEMI2.7", "SEMI2", 4,
       {261, 263, 271, 262, 25, 58, 250, 30, 32, 31, 128, 50, 60,
        242, 252, 54, 246, 127, 121, 126, 85, 110, 139, 88, 91, 93,
        206, 105, 111, 141, 133, 112, 136, 201, 207, 208, 5, 149, 70,
        8, 11, 13, 226, 152, 155, 76, 66, 157, 74, 234, 230, 236}},
      {"LMRH.2", "LMRH", 4,
       {46, 78, 250, 90, 42, 74, 94, 254, 260, 266, 270, 269, 20,
        29, 132, 141, 4, 13, 164, 173, 25, 27, 50, 194, 137, 145,
        209, 139, 9, 11, 146, 210, 169, 49, 193, 171, 37, 70, 64,
        195, 69, 147, 224, 38, 246, 208, 86, 51, 85, 211, 245, 160}},
      {"DEMP.5", "DEMP", 4,
       {1, 3, 8, 15, 23, 24, 25, 28, 36, 38, 41, 43, 51,
        54, 61, 64, 66, 69, 70, 78, 81, 82, 89, 96, 100, 104,
        106, 109, 129, 133, 139, 140, 149, 154, 156, 160, 178, 183, 189,
        190, 195, 202, 206, 207, 228, 231, 235, 239, 257, 260, 271, 272}},
      {"HALL.2", "HALL", 4,
       {1, 2, 5, 14, 19, 27, 28, 32, 34, 39, 40, 45, 49,
        53, 54, 63, 81, 84, 88, 95, 103, 107, 108, 109, 131, 134,
        142, 143, 147, 153, 154, 155, 166, 169, 170, 173, 180, 183, 184,
        185, 197, 202, 204, 208, 210, 212, 222, 224, 257, 260, 262, 266}},
      {"BBH1.3", "BBH1", 4,
       {11, 13, 14, 16, 18, 27, 30, 31, 34, 38, 39, 42, 55,
        56, 59, 63, 65, 69, 70, 79, 81, 85, 89, 91, 130, 135,
        137, 144, 146, 153, 156, 159, 161, 167, 170, 173, 181, 190, 191,
        192, 197, 205, 207, 208, 241, 245, 246, 254, 262, 263, 266, 269}},
  };
  return arcs;
}

const KnownArc* find_known_arc(const std::string& label) {
  for (const auto& a : known_arcs())
    if (label == a.label) return &a;
  return nullptr;
}

}  // namespace maxarc
