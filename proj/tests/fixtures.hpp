#pragma once
// Exhaustive avoider counts for n = 0..9, one row per registry case,
// frozen from an independent reference implementation.

#include <array>
#include <map>

namespace fixtures {

using Row = std::array<long long, 10>;

inline const std::map<int, Row>& counts() {
  static const std::map<int, Row> m = {
      {29, {1, 1, 2, 6, 21, 71, 218, 610, 1585, 3895}},
      {30, {1, 1, 2, 6, 21, 71, 218, 614, 1619, 4065}},
      {35, {1, 1, 2, 6, 21, 71, 222, 648, 1797, 4807}},
      {49, {1, 1, 2, 6, 21, 72, 230, 701, 2113, 6475}},
      {69, {1, 1, 2, 6, 21, 73, 236, 700, 1919, 4927}},
      {72, {1, 1, 2, 6, 21, 73, 237, 711, 1988, 5253}},
      {75, {1, 1, 2, 6, 21, 73, 238, 721, 2044, 5492}},
      {76, {1, 1, 2, 6, 21, 73, 238, 721, 2046, 5501}},
      {80, {1, 1, 2, 6, 21, 73, 238, 726, 2101, 5857}},
      {84, {1, 1, 2, 6, 21, 73, 239, 736, 2158, 6102}},
      {86, {1, 1, 2, 6, 21, 73, 239, 740, 2194, 6298}},
      {88, {1, 1, 2, 6, 21, 73, 240, 744, 2192, 6192}},
      {93, {1, 1, 2, 6, 21, 73, 241, 754, 2252, 6471}},
      {99, {1, 1, 2, 6, 21, 73, 242, 762, 2290, 6610}},
      {132, {1, 1, 2, 6, 21, 74, 255, 857, 2815, 9063}},
      {150, {1, 1, 2, 6, 21, 75, 259, 852, 2669, 7997}},
      {151, {1, 1, 2, 6, 21, 75, 259, 853, 2684, 8120}},
      {153, {1, 1, 2, 6, 21, 75, 260, 864, 2756, 8485}},
      {156, {1, 1, 2, 6, 21, 75, 261, 876, 2840, 8934}},
      {158, {1, 1, 2, 6, 21, 75, 261, 879, 2879, 9232}},
      {172, {1, 1, 2, 6, 21, 75, 265, 927, 3229, 11253}},
      {180, {1, 1, 2, 6, 21, 75, 267, 951, 3407, 12309}},
      {184, {1, 1, 2, 6, 21, 76, 270, 927, 3074, 9886}},
      {187, {1, 1, 2, 6, 21, 76, 271, 938, 3146, 10252}},
      {193, {1, 1, 2, 6, 21, 76, 275, 989, 3539, 12631}},
      {195, {1, 1, 2, 6, 21, 76, 275, 989, 3544, 12696}},
      {210, {1, 1, 2, 6, 21, 77, 283, 1032, 3740, 13522}},
      {211, {1, 1, 2, 6, 21, 77, 284, 1041, 3789, 13730}},
      {212, {1, 1, 2, 6, 21, 77, 285, 1053, 3875, 14212}},
      {213, {1, 1, 2, 6, 21, 77, 285, 1054, 3889, 14330}},
      {227, {1, 1, 2, 6, 21, 77, 289, 1103, 4261, 16603}},
      {231, {1, 1, 2, 6, 21, 78, 297, 1143, 4419, 17119}},
      {241, {1, 1, 2, 6, 21, 80, 322, 1346, 5783, 25372}},
  };
  return m;
}

}  // namespace fixtures
