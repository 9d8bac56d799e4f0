#pragma once

#include <cstdint>
#include <vector>

#include "propmod/core.hpp"

namespace propmod::testing {

struct PlanarEntry {
  std::int64_t f[2];
  std::int64_t g[2];
  std::int64_t b;

  ModularInequality ineq() const { return {LinearForm{f[0], f[1]}, LinearForm{g[0], g[1]}, b}; }
};

// Fixed planar corpus: coefficients in [-15, 15], b in [2, 12].
inline const std::vector<PlanarEntry>& planar_corpus() {
  static const std::vector<PlanarEntry> corpus = {
      // strip
      {{3, -2}, {1, -3}, 11},
      {{7, -1}, {1, -14}, 5},
      {{3, 2}, {1, -1}, 10},
      {{11, 0}, {1, -3}, 11},
      {{-6, -1}, {-12, 7}, 11},
      {{-10, 8}, {6, -15}, 11},
      {{-3, -1}, {-2, 5}, 8},
      {{-1, 0}, {-6, 15}, 4},
      {{12, -12}, {9, -6}, 12},
      {{4, 5}, {13, -13}, 7},
      {{12, -15}, {-9, 11}, 7},
      {{7, 13}, {-9, 2}, 3},
      {{6, 14}, {5, -11}, 4},
      {{-2, 8}, {3, -15}, 8},
      {{-7, -1}, {-4, 1}, 9},
      {{-12, -3}, {-2, 12}, 9},
      {{14, -11}, {-11, 14}, 12},
      {{-2, -7}, {9, -10}, 12},
      {{-3, 8}, {-13, 14}, 4},
      {{15, 9}, {2, -10}, 12},
      {{-1, -6}, {5, -8}, 8},
      {{-2, 6}, {1, -6}, 11},
      {{3, 9}, {-4, 15}, 4},
      {{5, 3}, {-1, 7}, 10},
      {{-4, 5}, {12, -10}, 10},
      {{11, -2}, {5, -6}, 5},
      // strip, g vanishing on an axis
      {{-11, 8}, {0, 11}, 10},
      {{15, 12}, {0, 9}, 2},
      {{0, -4}, {0, 11}, 11},
      {{-4, -14}, {10, 0}, 9},
      // positive
      {{9, -11}, {9, 12}, 10},
      {{2, -11}, {13, 10}, 8},
      {{-13, -4}, {2, 15}, 3},
      {{-3, 7}, {10, 15}, 4},
      {{15, 12}, {1, 7}, 5},
      {{-12, 6}, {12, 6}, 2},
      {{13, -12}, {11, 14}, 4},
      {{-3, -12}, {4, 10}, 12},
      {{-14, -13}, {15, 5}, 4},
      {{9, -6}, {13, 7}, 12},
      {{-7, -13}, {7, 4}, 8},
      {{-9, 1}, {1, 9}, 10},
      // trivial
      {{-5, 5}, {-1, -4}, 11},
      {{-6, 4}, {-5, -5}, 9},
      {{10, -4}, {-15, -2}, 2},
      {{0, -13}, {-12, -15}, 6},
      {{10, -10}, {-3, -4}, 10},
      // a single ray
      {{14, 5}, {-1, 0}, 3},
      {{-3, 10}, {0, -11}, 12},
      {{14, 15}, {0, -9}, 5},
  };
  return corpus;
}

}  // namespace propmod::testing
