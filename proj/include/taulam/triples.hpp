// H-triples and K-triples between two words over a skewed-gentle quiver,
// enumerated up to equivalence as common walks of H(x) and H(y).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taulam/admissible.hpp"
#include "taulam/winding.hpp"

namespace taulam {

enum class BoundaryType { I = 1, II = 2, III = 3, IV = 4 };
const char* boundary_type_name(BoundaryType t);

struct TripleClass {
  HereditaryShape shape = HereditaryShape::Invalid;
  // Types of the polarized boundary vertices, sorted.
  std::vector<BoundaryType> boundary;
  // Canonical form: consecutive (vertex of H(x), vertex of H(y)) pairs.
  std::vector<std::pair<int, int>> walk;
  // Slot through which the walk leaves its first vertex; 0 for one vertex.
  int first_slot = 0;

  friend bool operator==(const TripleClass&, const TripleClass&) = default;
};

enum class TripleKind { H, K };

// x and y are strings or bands over sq.hat. Results are sorted by
// (shape, walk).
std::vector<TripleClass> enumerate_triples(const SkewedQuiver& sq, const Word& x, const Word& y,
                                           TripleKind kind = TripleKind::K);

inline std::vector<TripleClass> enumerate_K_triples(const SkewedQuiver& sq, const Word& x,
                                                    const Word& y) {
  return enumerate_triples(sq, x, y, TripleKind::K);
}

int count_shape(const std::vector<TripleClass>& ts, HereditaryShape shape);

}  // namespace taulam
