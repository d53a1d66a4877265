#include "taulam/invariants.hpp"

#include "taulam/triples.hpp"
#include "taulam/winding.hpp"

namespace taulam {

int d2(int a, int b) {
  if (a == 0 && b == 0) return 2;
  if (a == 0 || b == 0) return 1;
  return a == b ? 1 : 0;
}

int d3(const Decoration& s, const Decoration& t) {
  return s.kind == Decoration::Kind::Pair && s == t ? 1 : 0;
}

int set_A(const FringedQuiver& fq, const Word& x, const Word& y) {
  Word tx = tau_f(fq, x), ty = tau_f(fq, y);
  const auto& sq = fq.fringed;
  return count_shape(enumerate_K_triples(sq, tx, ty), HereditaryShape::A) +
         count_shape(enumerate_K_triples(sq, ty, tx), HereditaryShape::A);
}

namespace {

// Special loop under eta_0 and eta_1 of H(x), or -1 where absent.
std::pair<int, int> end_loops(const SkewedQuiver& sq, const Word& x) {
  if (type_of(sq, x) == WordType::B) return {-1, -1};
  int l0 = is_punctured(sq, x.front()) ? sq.base.loop_at(x.front().idx) : -1;
  int l1 = is_punctured(sq, x.back()) ? sq.base.loop_at(x.back().idx) : -1;
  return {l0, l1};
}

int gabriel_pos(const PolarizedQuiver& q, const std::vector<GabrielVertex>& gv, int v, int sign) {
  if (!q.is_special_vertex(v)) return gabriel_index(gv, v, GabrielTag::Ordinary);
  return gabriel_index(gv, v, sign > 0 ? GabrielTag::Plus : GabrielTag::Minus);
}

DecoratedWord canonical_or_self(const SkewedQuiver& sq, const DecoratedWord& d) {
  return d.negative ? canonical_class(sq, d) : d;
}

}  // namespace

std::vector<std::pair<int, int>> set_P(const SkewedQuiver& sq, const Word& x, const Word& y) {
  auto [x0, x1] = end_loops(sq, x);
  auto [y0, y1] = end_loops(sq, y);
  int lx[2] = {x0, x1}, ly[2] = {y0, y1};
  bool strings = type_of(sq, x) != WordType::B && type_of(sq, y) != WordType::B;
  bool same = strings && x == y;
  bool opposite = strings && x == inverse(y);
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      if (ly[j] < 0 || ly[j] != lx[i]) continue;
      if (same && i == j) continue;
      if (opposite && i != j) continue;
      out.push_back({j, i});
    }
  return out;
}

int diag_b(const SkewedQuiver& sq, const Word& x, const Word& y) {
  if (type_of(sq, x) != WordType::B || type_of(sq, y) != WordType::B) return 0;
  Word kx = rotation_key(x);
  if (kx == rotation_key(y)) return 1;
  if (kx == rotation_key(inverse(y))) return -1;
  return 0;
}

IntVector dim_vector(const SkewedQuiver& sq, const DecoratedWord& dw) {
  const auto& q = sq.base;
  auto gv = gabriel_vertices(q);
  IntVector twice(gv.size(), 0);
  if (dw.negative) return twice;
  const Word& x = dw.x;
  Winding h = winding_of_word(sq, x);
  for (int v : h.image()) {
    if (q.is_special_vertex(v)) {
      twice[gabriel_pos(q, gv, v, 1)] += 1;
      twice[gabriel_pos(q, gv, v, -1)] += 1;
    } else {
      twice[gabriel_pos(q, gv, v, 1)] += 2;
    }
  }
  WordType t = type_of(sq, x);
  if (dw.s.kind == Decoration::Kind::StarStar) {
    for (auto& e : twice) e *= 2;
  } else if (t != WordType::B && t != WordType::UU) {
    // Signed half vectors at the punctured ends.
    auto half = [&](int vertex, int sgn) {
      twice[gabriel_pos(q, gv, vertex, 1)] += sgn;
      twice[gabriel_pos(q, gv, vertex, -1)] -= sgn;
    };
    int n = h.num_vertices();
    if (t == WordType::PU || t == WordType::PP) half(h.image()[0], dw.s.s1);
    if (t == WordType::UP || t == WordType::PP) half(h.image()[n - 1], dw.s.s2);
  }
  IntVector out(gv.size());
  for (size_t k = 0; k < gv.size(); ++k) {
    if (twice[k] % 2 != 0 || twice[k] < 0)
      throw InvariantError("dimension vector of " + format_decorated(sq, dw) +
                           " is not a non-negative integer vector");
    out[k] = twice[k] / 2;
  }
  return out;
}

int e_Q(const FringedQuiver& fq, const DecoratedWord& a0, const DecoratedWord& b0) {
  const auto& sq = fq.base;
  DecoratedWord a = canonical_or_self(sq, a0), b = canonical_or_self(sq, b0);
  if (a.negative && b.negative) return 0;
  if (a.negative) std::swap(a, b);
  if (b.negative) {
    auto gv = gabriel_vertices(sq.base);
    GabrielVertex g = q_tilde(sq, b);
    return dim_vector(sq, a)[gabriel_index(gv, g.vertex, g.tag)];
  }
  const Word &x = a.x, &y = b.x;
  const Decoration &s = a.s, &t = b.s;
  int e = set_A(fq, x, y) * weight(s) * weight(t);
  Decoration tc = chi(t);
  for (auto [j, i] : set_P(sq, x, y)) e += d2(component(s, i + 1), component(tc, j + 1));
  int db = diag_b(sq, x, y);
  Decoration sp = db == -1 ? iota(s) : s;
  e += 2 * std::abs(db) * d3(sp, tc);
  return e;
}

SourceSinkData source_sink_data(const FringedQuiver& fq, const Word& x) {
  const auto& base = fq.base.base;
  const auto& fr = fq.fringed.base;
  int nb = base.num_vertices();
  SourceSinkData out;
  out.a_plus.assign(nb, 0);
  out.a_minus.assign(nb, 0);
  out.d_plus.assign(nb, {});
  out.d_minus.assign(nb, {});
  Word tx = tau_f(fq, x);
  Winding h = winding_of_word(fq.fringed, tx);
  int n = h.num_vertices();
  std::vector<int> starts(n, 0), ends(n, 0);
  for (const auto& a : h.arrows()) {
    if (a.loop) continue;
    ++starts[a.from];
    ++ends[a.to];
  }
  auto to_base = [&](int v) -> int {
    auto b = base.find_vertex(fr.vertex(v).id);
    return b ? *b : -1;
  };
  for (int v = 0; v < n; ++v) {
    int i = to_base(h.image()[v]);
    if (i < 0) continue;
    if (starts[v] == 2) ++out.a_plus[i];
    if (ends[v] == 2) ++out.a_minus[i];
  }
  if (type_of(fq.fringed, tx) != WordType::B) {
    // eta_0 sits at the first vertex, eta_1 at the last.
    for (int j = 0; j < 2; ++j) {
      Letter l = j == 0 ? tx.front() : tx.back();
      if (!is_punctured(fq.fringed, l)) continue;
      int v = j == 0 ? 0 : n - 1;
      int i = to_base(h.image()[v]);
      if (ends[v] == 0) out.d_plus[i].push_back(j);
      if (starts[v] == 0) out.d_minus[i].push_back(j);
    }
  }
  return out;
}

IntVector g_Q(const FringedQuiver& fq, const DecoratedWord& d0) {
  const auto& q = fq.base.base;
  auto gv = gabriel_vertices(q);
  IntVector g(gv.size(), 0);
  DecoratedWord d = canonical_or_self(fq.base, d0);
  if (d.negative) {
    GabrielVertex t = q_tilde(fq.base, d);
    g[gabriel_index(gv, t.vertex, t.tag)] = 1;
    return g;
  }
  SourceSinkData sd = source_sink_data(fq, d.x);
  int wt = weight(d.s);
  for (size_t k = 0; k < gv.size(); ++k) {
    int i = gv[k].vertex;
    int rho = gv[k].tag == GabrielTag::Minus ? -1 : 1;
    int val = (sd.a_minus[i] - sd.a_plus[i]) * wt;
    for (int j : sd.d_minus[i]) val += d2(rho, -component(d.s, j + 1));
    for (int j : sd.d_plus[i]) val -= d2(component(d.s, j + 1), rho);
    g[k] = val;
  }
  return g;
}

bool is_tau_generic(const FringedQuiver& fq, const DecoratedWord& d) { return e_Q(fq, d, d) == 0; }

}  // namespace taulam
