#include "taulam/triples.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace taulam {

const char* boundary_type_name(BoundaryType t) {
  switch (t) {
    case BoundaryType::I: return "I";
    case BoundaryType::II: return "II";
    case BoundaryType::III: return "III";
    case BoundaryType::IV: return "IV";
  }
  return "?";
}

int count_shape(const std::vector<TripleClass>& ts, HereditaryShape shape) {
  return static_cast<int>(std::count_if(ts.begin(), ts.end(),
                                        [&](const TripleClass& t) { return t.shape == shape; }));
}

namespace {

struct Step {
  int arrow;
  bool out;
  int next;
  int attach;  // slot of the arrow at `next`
};

std::optional<Step> step(const Winding& h, int u, int sign) {
  int a = h.arrow_from(u, sign);
  if (a >= 0 && !h.arrows()[a].loop) return Step{a, true, h.arrows()[a].to, h.arrows()[a].to_sign};
  a = h.arrow_to(u, sign);
  if (a >= 0 && !h.arrows()[a].loop)
    return Step{a, false, h.arrows()[a].from, h.arrows()[a].from_sign};
  return std::nullopt;
}

struct Matcher {
  const SkewedQuiver& sq;
  const Winding& hx;
  const Winding& hy;

  std::optional<std::pair<Step, Step>> match(int u, int v, int sign) const {
    auto sx = step(hx, u, sign);
    auto sy = step(hy, v, sign);
    if (!sx || !sy || sx->out != sy->out) return std::nullopt;
    if (hx.arrows()[sx->arrow].image != hy.arrows()[sy->arrow].image) return std::nullopt;
    return std::make_pair(*sx, *sy);
  }

  bool both_loops(int u, int v, int sign) const {
    return sign < 0 && hx.has_loop(u) && hy.has_loop(v);
  }

  std::optional<BoundaryType> type_at(int u, int v, int sign) const {
    int mu = hx.arrow_from(u, sign);
    int nu = hy.arrow_to(v, sign);
    if (mu < 0 || nu < 0) return std::nullopt;
    bool mu_loop = hx.arrows()[mu].loop;
    bool nu_loop = hy.arrows()[nu].loop;
    if (mu_loop && nu_loop) return std::nullopt;
    if (mu_loop) return BoundaryType::IV;
    if (nu_loop) return BoundaryType::III;
    bool sp = sq.base.arrow(hx.arrows()[mu].image).special;
    return sp ? BoundaryType::II : BoundaryType::I;
  }
};

struct Walk {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> exits;  // exits[j]: slot leaving pairs[j] toward pairs[j+1]
  std::vector<int> entries;  // entries[j]: slot at pairs[j+1] where that arrow lands
  int start_slot = 0;  // free slot at pairs.front()
  int end_slot = 0;    // free slot at pairs.back()
};

using Key = std::tuple<std::vector<std::pair<int, int>>, int>;

Key key_of(const Walk& w) {
  Key fwd{w.pairs, w.exits.empty() ? 0 : w.exits.front()};
  if (w.exits.empty()) return fwd;
  auto rev = w.pairs;
  std::reverse(rev.begin(), rev.end());
  Key bwd{rev, w.entries.back()};
  return std::min(fwd, bwd);
}

}  // namespace

std::vector<TripleClass> enumerate_triples(const SkewedQuiver& sq, const Word& x, const Word& y,
                                           TripleKind kind) {
  Winding hx = winding_of_word(sq, x);
  Winding hy = winding_of_word(sq, y);
  Matcher m{sq, hx, hy};
  const int cap = hx.num_vertices() + hy.num_vertices() + 2;
  std::vector<TripleClass> out;
  std::set<Key> seen;

  for (int u = 0; u < hx.num_vertices(); ++u) {
    for (int v = 0; v < hy.num_vertices(); ++v) {
      if (hx.image()[u] != hy.image()[v]) continue;
      for (int free : {1, -1}) {
        if (m.match(u, v, free)) continue;
        Walk w;
        w.pairs.push_back({u, v});
        w.start_slot = free;
        int cu = u, cv = v, sign = -free;
        bool runaway = false;
        while (auto st = m.match(cu, cv, sign)) {
          w.exits.push_back(sign);
          w.entries.push_back(st->first.attach);
          cu = st->first.next;
          cv = st->second.next;
          sign = -st->first.attach;
          w.pairs.push_back({cu, cv});
          if (static_cast<int>(w.pairs.size()) > cap) {
            runaway = true;
            break;
          }
        }
        if (runaway) continue;
        w.end_slot = sign;
        Key k = key_of(w);
        if (!seen.insert(k).second) continue;

        bool loop0 = m.both_loops(w.pairs.front().first, w.pairs.front().second, w.start_slot);
        bool loop1 = m.both_loops(w.pairs.back().first, w.pairs.back().second, w.end_slot);
        int n = static_cast<int>(w.pairs.size());
        if (n == 1 && loop0 && loop1) continue;

        bool ok = true;
        // Joint-special condition on vertices without a loop in the source.
        for (int j = 0; j < n && ok; ++j) {
          bool has_loop = (j == 0 && loop0) || (j == n - 1 && loop1);
          if (!has_loop && hx.has_loop(w.pairs[j].first) && hy.has_loop(w.pairs[j].second))
            ok = false;
        }
        std::vector<BoundaryType> types;
        auto free_end = [&](int j, int slot) {
          auto [a, b] = w.pairs[j];
          if (hx.ordinary_target_at(a, slot)) ok = false;  // (q)
          if (hy.ordinary_source_at(b, slot)) ok = false;  // (s)
          if (kind == TripleKind::K && (hx.is_boundary_vertex(a) || hy.is_boundary_vertex(b)))
            ok = false;  // (k)
          if (auto t = m.type_at(a, b, slot)) types.push_back(*t);
        };
        if (!loop0) free_end(0, w.start_slot);
        if (!loop1) free_end(n - 1, w.end_slot);
        if (!ok) continue;

        TripleClass tc;
        int loops = int(loop0) + int(loop1);
        tc.shape = loops == 0   ? HereditaryShape::A
                   : loops == 1 ? HereditaryShape::Dprime
                                : HereditaryShape::Dtilde;
        std::sort(types.begin(), types.end());
        tc.boundary = std::move(types);
        tc.walk = std::get<0>(k);
        tc.first_slot = std::get<1>(k);
        out.push_back(std::move(tc));
      }
    }
  }

  // Cyclic windings: isomorphisms of H(x) onto H(y) over the base quiver.
  if (hx.shape() == HereditaryShape::Atilde && hy.shape() == HereditaryShape::Atilde &&
      hx.num_vertices() == hy.num_vertices()) {
    int n = hx.num_vertices();
    const HArrow& e0 = hx.arrows().front();
    int exit0 = e0.from == 0 ? e0.from_sign : e0.to_sign;
    for (int v = 0; v < n; ++v) {
      if (hx.image()[0] != hy.image()[v]) continue;
      std::vector<std::pair<int, int>> pairs{{0, v}};
      int cu = 0, cv = v, sign = exit0;
      bool closed = false;
      for (int s = 0; s < n; ++s) {
        auto st = m.match(cu, cv, sign);
        if (!st) break;
        cu = st->first.next;
        cv = st->second.next;
        sign = -st->first.attach;
        if (s + 1 == n) {
          closed = cu == 0 && cv == v && sign == exit0;
        } else {
          pairs.push_back({cu, cv});
        }
      }
      if (!closed) continue;
      std::set<int> ys;
      for (auto& p : pairs) ys.insert(p.second);
      if (static_cast<int>(ys.size()) != n) continue;
      TripleClass tc;
      tc.shape = HereditaryShape::Atilde;
      tc.walk = std::move(pairs);
      tc.first_slot = exit0;
      out.push_back(std::move(tc));
    }
  }

  std::sort(out.begin(), out.end(), [](const TripleClass& a, const TripleClass& b) {
    return std::tie(a.shape, a.walk, a.first_slot) < std::tie(b.shape, b.walk, b.first_slot);
  });
  return out;
}

}  // namespace taulam
