// Hereditary polarized quivers mapped into a skewed-gentle quiver, and the
// winding H(x) -> Q attached to a string or band.
#pragma once

#include <vector>

#include "taulam/admissible.hpp"
#include "taulam/quiver.hpp"

namespace taulam {

struct HArrow {
  int from = -1;
  int from_sign = 1;
  int to = -1;
  int to_sign = 1;
  bool loop = false;
  int image = -1;  // arrow index in the target quiver

  friend bool operator==(const HArrow&, const HArrow&) = default;
  friend auto operator<=>(const HArrow&, const HArrow&) = default;
};

// A hereditary polarized quiver together with a homomorphism into a fixed
// target; vertex k maps to image[k].
class Winding {
 public:
  Winding() = default;
  Winding(std::vector<int> image, std::vector<HArrow> arrows, HereditaryShape shape);

  int num_vertices() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  const std::vector<HArrow>& arrows() const { return arrows_; }
  HereditaryShape shape() const { return shape_; }

  // Arrow index with source (resp. target) slot (v, sign), or -1.
  int arrow_from(int v, int sign) const { return from_[key(v, sign)]; }
  int arrow_to(int v, int sign) const { return to_[key(v, sign)]; }
  int loop_at(int v) const { return loop_[v]; }
  bool has_loop(int v) const { return loop_[v] >= 0; }
  int degree(int v) const { return degree_[v]; }

  bool is_boundary_slot(int v, int sign) const;
  bool is_boundary_vertex(int v) const;
  // Ordinary arrows only.
  bool ordinary_target_at(int v, int sign) const;
  bool ordinary_source_at(int v, int sign) const;

  PolarizedQuiver as_quiver() const;

 private:
  std::vector<int> image_;
  std::vector<HArrow> arrows_;
  HereditaryShape shape_ = HereditaryShape::Invalid;
  std::vector<int> from_, to_, loop_, degree_;
  static int key(int v, int sign) { return 2 * v + (sign > 0 ? 1 : 0); }
};

// x is a string or band over sq.hat; the result maps into sq.base.
Winding winding_of_word(const SkewedQuiver& sq, const Word& x);

// Checks the homomorphism conditions of w into q.
bool is_homomorphism(const Winding& w, const PolarizedQuiver& q);

}  // namespace taulam
