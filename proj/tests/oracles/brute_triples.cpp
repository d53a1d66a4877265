#include "oracles/brute_triples.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace oracle {

using namespace taulam;

namespace {

struct Edge {
  int from, fs, to, ts;
  bool loop;
  int q;  // arrow of the base quiver
};

struct Graph {
  std::vector<int> img;
  std::vector<Edge> edges;
  int n() const { return static_cast<int>(img.size()); }

  int find(int v, int sign, bool as_source, bool want_loop) const {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const Edge& e = edges[i];
      if (e.loop != want_loop) continue;
      if (as_source && e.from == v && e.fs == sign) return i;
      if (!as_source && e.to == v && e.ts == sign) return i;
    }
    return -1;
  }
  bool has_loop(int v) const { return find(v, -1, true, true) >= 0; }
  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) d += (e.from == v) + (!e.loop && e.to == v);
    return d;
  }
  bool slot_used(int v, int sign) const {
    for (const Edge& e : edges)
      if ((e.from == v && e.fs == sign) || (e.to == v && e.ts == sign)) return true;
    return false;
  }
  bool boundary_slot(int v, int sign) const { return degree(v) <= 1 && !slot_used(v, sign); }
  bool boundary_vertex(int v) const { return boundary_slot(v, 1) || boundary_slot(v, -1); }
};

// H(x) straight from the letters: letter x_i joins its target end (vertex of
// x_i) and its source end (vertex of x_{i+1}).
Graph build(const SkewedQuiver& sq, const Word& x) {
  Graph g;
  const auto& hat = sq.hat;
  bool band = x.front().kind != LetterKind::TrivialInv;
  int first = band ? 0 : 1;
  int last = static_cast<int>(x.size()) - 1;
  for (int i = first; i <= last; ++i) g.img.push_back(target(hat, x[i])->v);
  int n = g.n();
  int nedges = band ? n : n - 1;
  for (int k = 0; k < nedges; ++k) {
    Letter l = x[first + k];
    Slot t = *target(hat, l), s = *source(hat, l);
    int tv = k, sv = (k + 1) % n;
    if (l.kind == LetterKind::Direct)
      g.edges.push_back({sv, s.sign, tv, t.sign, false, l.idx});
    else
      g.edges.push_back({tv, t.sign, sv, s.sign, false, l.idx});
  }
  if (!band) {
    auto punct = [&](Letter l) { return l.sign < 0 && sq.base.is_special_vertex(l.idx); };
    if (punct(x.front())) g.edges.push_back({0, -1, 0, -1, true, sq.base.loop_at(g.img[0])});
    if (punct(x.back()))
      g.edges.push_back({n - 1, -1, n - 1, -1, true, sq.base.loop_at(g.img[n - 1])});
  }
  return g;
}

// A source quiver together with both vertex and arrow maps.
struct Candidate {
  Graph src;
  std::vector<int> vq, vs;  // vertex maps
  std::vector<int> aq, as;  // arrow maps
  bool cyclic = false;
};

// Checks the most recently added edge against the others: injective source
// and target slots, and opposite slots where two ordinary edges compose.
bool last_edge_ok(const Graph& g) {
  const Edge& n = g.edges.back();
  for (size_t i = 0; i + 1 < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.from == n.from && e.fs == n.fs) return false;
    if (e.to == n.to && e.ts == n.ts) return false;
    if (e.loop || n.loop) continue;
    if (e.from == n.to && e.fs == n.ts) return false;
    if (n.from == e.to && n.fs == e.ts) return false;
  }
  return true;
}

// Every homomorphism of a path or cycle into `target`, built edge by edge.
void grow(const Graph& target, Candidate& c, int m, bool cyclic, std::vector<Candidate>& out) {
  int built = c.src.n();
  int need_edges = cyclic ? m : m - 1;
  int have = static_cast<int>(c.aq.size());
  if (have == need_edges) {
    if (built == m) out.push_back(c);
    return;
  }
  int j = built - 1;
  int u = c.vq[j];
  for (int a = 0; a < static_cast<int>(target.edges.size()); ++a) {
    const Edge& e = target.edges[a];
    if (e.loop) continue;
    for (bool leave_by_source : {true, false}) {
      if (leave_by_source ? e.from != u : e.to != u) continue;
      int w = leave_by_source ? e.to : e.from;
      bool closing = cyclic && have == m - 1;
      int next = closing ? 0 : built;
      if (closing && c.vq[0] != w) continue;
      Candidate d = c;
      if (!closing) {
        d.src.img.push_back(target.img[w]);
        d.vq.push_back(w);
      }
      Edge ne = leave_by_source ? Edge{j, e.fs, next, e.ts, false, e.q}
                                : Edge{next, e.fs, j, e.ts, false, e.q};
      d.src.edges.push_back(ne);
      d.aq.push_back(a);
      if (!last_edge_ok(d.src)) continue;
      grow(target, d, m, cyclic, out);
    }
  }
}

// The unique compatible map into `target` starting at v0, if any.
bool map_into(const Graph& target, Candidate& c, int v0) {
  int m = c.src.n();
  c.vs.assign(m, -1);
  c.as.assign(c.src.edges.size(), -1);
  c.vs[0] = v0;
  if (target.img[v0] != c.src.img[0]) return false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < static_cast<int>(c.src.edges.size()); ++i) {
      if (c.as[i] >= 0) continue;
      const Edge& e = c.src.edges[i];
      int known = c.vs[e.from] >= 0 ? e.from : (c.vs[e.to] >= 0 ? e.to : -1);
      if (known < 0) continue;
      int hit = -1;
      for (int a = 0; a < static_cast<int>(target.edges.size()); ++a) {
        const Edge& t = target.edges[a];
        if (t.loop != e.loop || t.q != e.q || t.fs != e.fs || t.ts != e.ts) continue;
        if (known == e.from && t.from != c.vs[e.from]) continue;
        if (known == e.to && t.to != c.vs[e.to]) continue;
        hit = a;
      }
      if (hit < 0) return false;
      const Edge& t = target.edges[hit];
      for (auto [sv, tv] : {std::pair{e.from, t.from}, std::pair{e.to, t.to}}) {
        if (c.vs[sv] >= 0 && c.vs[sv] != tv) return false;
        c.vs[sv] = tv;
        if (target.img[tv] != c.src.img[sv]) return false;
      }
      c.as[i] = hit;
      progress = true;
    }
  }
  return std::find(c.vs.begin(), c.vs.end(), -1) == c.vs.end();
}

using Serial = std::tuple<std::vector<std::tuple<int, int, bool>>,
                          std::vector<std::tuple<int, int, int, int, bool, int, int>>>;

Serial serialize(const Candidate& c, const std::vector<int>& perm) {
  int m = c.src.n();
  std::vector<std::tuple<int, int, bool>> vs(m);
  for (int j = 0; j < m; ++j) vs[perm[j]] = {c.vq[j], c.vs[j], c.src.has_loop(j)};
  std::vector<std::tuple<int, int, int, int, bool, int, int>> es;
  for (size_t i = 0; i < c.src.edges.size(); ++i) {
    const Edge& e = c.src.edges[i];
    es.push_back({perm[e.from], e.fs, perm[e.to], e.ts, e.loop, c.aq[i], c.as[i]});
  }
  std::sort(es.begin(), es.end());
  return {vs, es};
}

Serial canonical(const Candidate& c) {
  int m = c.src.n();
  std::vector<std::vector<int>> perms;
  if (c.cyclic) {
    for (int r = 0; r < m; ++r)
      for (int dir : {1, -1}) {
        std::vector<int> p(m);
        for (int j = 0; j < m; ++j) p[j] = ((dir * j + r) % m + m) % m;
        perms.push_back(p);
      }
  } else {
    std::vector<int> id(m), rev(m);
    for (int j = 0; j < m; ++j) id[j] = j, rev[j] = m - 1 - j;
    perms = {id, rev};
  }
  Serial best = serialize(c, perms[0]);
  for (auto& p : perms) best = std::min(best, serialize(c, p));
  return best;
}

// A cyclic labelled source admits no proper quotient.
bool primitive_cycle(const Candidate& c) {
  int m = c.src.n();
  auto label = [&](int j) {
    // Edge leaving vertex j towards j+1 in construction order.
    const Edge& e = c.src.edges[j];
    return std::tuple{c.src.img[j], e.q, e.from == j};
  };
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    bool same = true;
    for (int j = 0; j < m && same; ++j) same = label(j) == label((j + d) % m);
    if (same) return false;
  }
  return true;
}

}  // namespace

std::vector<BruteTriple> brute_force_triples(const SkewedQuiver& sq, const Word& x, const Word& y,
                                             bool require_k) {
  Graph hx = build(sq, x), hy = build(sq, y);
  int bound = hx.n() + hy.n();
  std::set<Serial> seen;
  std::vector<BruteTriple> out;

  for (bool cyclic : {false, true}) {
    for (int m = 1; m <= bound; ++m) {
      std::vector<Candidate> paths;
      for (int u = 0; u < hx.n(); ++u) {
        Candidate c;
        c.cyclic = cyclic;
        c.src.img.push_back(hx.img[u]);
        c.vq.push_back(u);
        grow(hx, c, m, cyclic, paths);
      }
      for (Candidate base : paths) {
        // End loops: none, at the first vertex, or at both ends.
        std::vector<std::pair<bool, bool>> loop_sets{{false, false}};
        if (!cyclic) loop_sets.insert(loop_sets.end(), {{true, false}, {true, true}});
        for (auto [l0, l1] : loop_sets) {
          if (l1 && m < 2) continue;
          Candidate c = base;
          bool ok = true;
          for (auto [flag, j] : {std::pair{l0, 0}, std::pair{l1, m - 1}}) {
            if (!flag) continue;
            int a = hx.find(c.vq[j], -1, true, true);
            if (a < 0) ok = false;
            else {
              c.src.edges.push_back({j, -1, j, -1, true, hx.edges[a].q});
              c.aq.push_back(a);
              if (!last_edge_ok(c.src)) ok = false;
            }
          }
          if (!ok) continue;
          for (int v0 = 0; v0 < hy.n(); ++v0) {
            Candidate d = c;
            if (!map_into(hy, d, v0)) continue;
            if (cyclic && !primitive_cycle(d)) continue;
            const Graph& g = d.src;
            bool good = true;
            std::vector<BoundaryType> types;
            for (int j = 0; j < g.n() && good; ++j) {
              if (hx.has_loop(d.vq[j]) && hy.has_loop(d.vs[j]) && !g.has_loop(j)) good = false;
              if (require_k && g.boundary_vertex(j) &&
                  (hx.boundary_vertex(d.vq[j]) || hy.boundary_vertex(d.vs[j])))
                good = false;
              for (int rho : {1, -1}) {
                if (!g.boundary_slot(j, rho)) continue;
                if (hx.find(d.vq[j], rho, false, false) >= 0) good = false;  // (q)
                if (hy.find(d.vs[j], rho, true, false) >= 0) good = false;   // (s)
                int mu = hx.find(d.vq[j], rho, true, false);
                bool mu_loop = false;
                if (mu < 0 && rho < 0 && hx.has_loop(d.vq[j])) mu_loop = true;
                int nu = hy.find(d.vs[j], rho, false, false);
                bool nu_loop = false;
                if (nu < 0 && rho < 0 && hy.has_loop(d.vs[j])) nu_loop = true;
                if ((mu >= 0 || mu_loop) && (nu >= 0 || nu_loop) && !(mu_loop && nu_loop)) {
                  if (mu_loop) types.push_back(BoundaryType::IV);
                  else if (nu_loop) types.push_back(BoundaryType::III);
                  else if (sq.base.arrow(hx.edges[mu].q).special) types.push_back(BoundaryType::II);
                  else types.push_back(BoundaryType::I);
                }
              }
            }
            if (!good) continue;
            if (!seen.insert(canonical(d)).second) continue;
            int loops = int(l0) + int(l1);
            HereditaryShape shape = cyclic       ? HereditaryShape::Atilde
                                    : loops == 0 ? HereditaryShape::A
                                    : loops == 1 ? HereditaryShape::Dprime
                                                 : HereditaryShape::Dtilde;
            std::sort(types.begin(), types.end());
            out.push_back({shape, types});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BruteTriple& a, const BruteTriple& b) {
    return std::tie(a.shape, a.boundary) < std::tie(b.shape, b.boundary);
  });
  return out;
}

}  // namespace oracle
