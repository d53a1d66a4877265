#include "oracles/census.hpp"

namespace oracle {

int polygon_diagonals(int n) {
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j - i != 1 && j - i != n - 1) ++count;
  return count;
}

int punctured_polygon_tagged_arcs(int n) {
  // Plain and notched arcs to the puncture.
  int count = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // The arc is boundary-parallel when the puncture-free side holds only
      // one boundary segment.
      int ccw = j - i, cw = n - ccw;
      if (cw >= 2) ++count;   // puncture on the ccw side
      if (ccw >= 2) ++count;  // puncture on the cw side
    }
  // Loops around the puncture cut out a once-punctured monogon and do not count.
  return count;
}

}  // namespace oracle
