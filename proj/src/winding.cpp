#include "taulam/winding.hpp"

namespace taulam {

Winding::Winding(std::vector<int> image, std::vector<HArrow> arrows, HereditaryShape shape)
    : image_(std::move(image)), arrows_(std::move(arrows)), shape_(shape) {
  int n = num_vertices();
  from_.assign(2 * n, -1);
  to_.assign(2 * n, -1);
  loop_.assign(n, -1);
  degree_.assign(n, 0);
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
    const auto& ar = arrows_[a];
    from_[key(ar.from, ar.from_sign)] = a;
    to_[key(ar.to, ar.to_sign)] = a;
    if (ar.loop) loop_[ar.from] = a;
    ++degree_[ar.from];
    if (!ar.loop) ++degree_[ar.to];
  }
}

bool Winding::is_boundary_slot(int v, int sign) const {
  return degree_[v] <= 1 && arrow_from(v, sign) < 0 && arrow_to(v, sign) < 0;
}

bool Winding::is_boundary_vertex(int v) const {
  return is_boundary_slot(v, 1) || is_boundary_slot(v, -1);
}

bool Winding::ordinary_target_at(int v, int sign) const {
  int a = arrow_to(v, sign);
  return a >= 0 && !arrows_[a].loop;
}

bool Winding::ordinary_source_at(int v, int sign) const {
  int a = arrow_from(v, sign);
  return a >= 0 && !arrows_[a].loop;
}

PolarizedQuiver Winding::as_quiver() const {
  std::vector<Vertex> vs;
  auto vid = [](int v) {
    std::string s = std::to_string(v);
    return std::string(6 - std::min<size_t>(6, s.size()), '0') + s;
  };
  for (int v = 0; v < num_vertices(); ++v) vs.push_back({vid(v), has_loop(v)});
  std::vector<ArrowSpec> specs;
  for (size_t a = 0; a < arrows_.size(); ++a) {
    const auto& ar = arrows_[a];
    specs.push_back({"h" + vid(static_cast<int>(a)), ar.loop, vid(ar.from), ar.from_sign,
                     vid(ar.to), ar.to_sign});
  }
  return PolarizedQuiver(vs, specs);
}

Winding winding_of_word(const SkewedQuiver& sq, const Word& x) {
  const auto& q = sq.base;
  std::vector<int> image;
  std::vector<HArrow> arrows;
  auto edge = [&](Letter l, int left, int right) {
    const Arrow& a = q.arrow(l.idx);
    HArrow h;
    h.image = l.idx;
    h.from_sign = a.from.sign;
    h.to_sign = a.to.sign;
    // A direct letter points from the right vertex to the left one.
    if (l.kind == LetterKind::Direct) {
      h.from = right;
      h.to = left;
    } else {
      h.from = left;
      h.to = right;
    }
    arrows.push_back(h);
  };
  auto loop = [&](int v) {
    int p = image[v];
    HArrow h{v, -1, v, -1, true, q.loop_at(p)};
    arrows.push_back(h);
  };
  if (type_of(sq, x) == WordType::B) {
    int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) image.push_back(target(sq.hat, x[i])->v);
    for (int i = 0; i < n; ++i) edge(x[i], i, (i + 1) % n);
    return Winding(std::move(image), std::move(arrows), HereditaryShape::Atilde);
  }
  int n = static_cast<int>(x.size()) - 1;
  for (int i = 1; i <= n; ++i) image.push_back(target(sq.hat, x[i])->v);
  for (int i = 1; i < n; ++i) edge(x[i], i - 1, i);
  int loops = 0;
  if (is_punctured(sq, x.front())) loop(0), ++loops;
  if (is_punctured(sq, x.back())) loop(n - 1), ++loops;
  HereditaryShape shape =
      loops == 0 ? HereditaryShape::A : loops == 1 ? HereditaryShape::Dprime : HereditaryShape::Dtilde;
  return Winding(std::move(image), std::move(arrows), shape);
}

bool is_homomorphism(const Winding& w, const PolarizedQuiver& q) {
  for (const auto& a : w.arrows()) {
    if (a.image < 0 || a.image >= q.num_arrows()) return false;
    const Arrow& t = q.arrow(a.image);
    if (a.loop && !t.special) return false;
    if (t.from != Slot{w.image()[a.from], a.from_sign}) return false;
    if (t.to != Slot{w.image()[a.to], a.to_sign}) return false;
  }
  return true;
}

}  // namespace taulam
