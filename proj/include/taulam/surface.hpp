// Marked surfaces and signature-zero tagged triangulations as combinatorial
// records; the polarized quiver with fringing they induce, the associated
// ideal triangulation and the exchange matrix.
#pragma once

#include <string>
#include <vector>

#include "taulam/admissible.hpp"
#include "taulam/mutation.hpp"
#include "taulam/quiver.hpp"

namespace taulam {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MarkedSurface {
  int genus = 0;
  std::vector<int> marked_per_component;
  std::vector<std::string> punctures;

  int boundary_components() const { return static_cast<int>(marked_per_component.size()); }
  int num_marked() const;
};

// 6(g-1) + 3(b + |P|) + |M|.
int rank(const MarkedSurface& s);

struct TaggedArc {
  std::string id;
  std::string from, to;  // endpoints in the direction of the orientation
  int tag_from = 1, tag_to = 1;
  int orientation = 1;  // -1 reverses from/to
};

// One side of a triangle. `left` says whether the triangle lies to the left
// of the arc as listed; ignored for boundary segments and punctured sides.
struct TriangleSide {
  std::string id;
  bool left = true;
};

// Sides in clockwise order. A self-folded triangle lists (fold, fold, loop),
// where the fold is the plain arc to the puncture and the loop is named by the
// notched arc. In other triangles the notched arc stands for the loop, i.e.
// for the puncture as a vertex of Q(T).
struct Triangle {
  std::vector<TriangleSide> sides;
  bool self_folded = false;
  std::string puncture;
};

struct Triangulation {
  MarkedSurface surface;
  std::vector<std::string> boundary_segments;
  std::vector<TaggedArc> arcs;
  std::vector<Triangle> triangles;
};

ValidationReport validate_triangulation(const Triangulation& t);

struct SurfaceQuiver {
  Fringing fringing;
  // Tagged arc id for each entry of gabriel_vertices(fringing.base).
  std::vector<std::string> arc_of_gabriel;
};

// Throws SurfaceError listing every problem if t is invalid.
SurfaceQuiver quiver_of_triangulation(const Triangulation& t);

struct SelfFolded {
  std::string puncture, fold, loop;
};

// T°: the notched arcs become enclosing loops; arcs are listed plain first.
struct IdealTriangulation {
  std::vector<std::string> arcs;
  std::vector<SelfFolded> self_folded;
  std::vector<Triangle> triangles;
};
IdealTriangulation ideal_triangulation(const Triangulation& t);

// B_FST(T), indexed as arc_of_gabriel: b_ij counts arrows i -> j of the
// cluster quiver minus arrows j -> i, the puncture vertex doubled.
IntMatrix exchange_matrix(const Triangulation& t);

// Seed with beta = -B_FST(T) and no rows.
Seed seed_of_triangulation(const Triangulation& t);

}  // namespace taulam
