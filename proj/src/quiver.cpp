#include "taulam/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace taulam {

PolarizedQuiver::PolarizedQuiver(std::vector<Vertex> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i].id == vertices_[i - 1].id)
      throw QuiverError("duplicate vertex id '" + vertices_[i].id + "'");
  std::vector<ArrowSpec> sorted = arrows;
  std::sort(sorted.begin(), sorted.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
  for (const auto& s : sorted) {
    if (!arrows_.empty() && arrows_.back().id == s.id)
      throw QuiverError("duplicate arrow id '" + s.id + "'");
    if (std::abs(s.from_sign) != 1 || std::abs(s.to_sign) != 1)
      throw QuiverError("arrow '" + s.id + "': polarization must be +1 or -1");
    Arrow a;
    a.id = s.id;
    a.special = s.special;
    a.from = {vertex_index(s.from_v), s.from_sign};
    a.to = {vertex_index(s.to_v), s.to_sign};
    arrows_.push_back(a);
  }
  index();
}

void PolarizedQuiver::index() {
  from_slot_.assign(2 * vertices_.size(), -1);
  to_slot_.assign(2 * vertices_.size(), -1);
  loop_.assign(vertices_.size(), -1);
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow& ar = arrows_[a];
    // First writer wins; validate() reports collisions.
    if (from_slot_[slot_key(ar.from)] < 0) from_slot_[slot_key(ar.from)] = a;
    if (to_slot_[slot_key(ar.to)] < 0) to_slot_[slot_key(ar.to)] = a;
    if (ar.special && loop_[ar.from.v] < 0) loop_[ar.from.v] = a;
  }
}

std::optional<int> PolarizedQuiver::find_vertex(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, const std::string& k) { return v.id < k; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> PolarizedQuiver::find_arrow(const std::string& id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, const std::string& k) { return a.id < k; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - arrows_.begin());
}

int PolarizedQuiver::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw QuiverError("unknown vertex '" + id + "'");
  return *v;
}

int PolarizedQuiver::arrow_index(const std::string& id) const {
  auto a = find_arrow(id);
  if (!a) throw QuiverError("unknown arrow '" + id + "'");
  return *a;
}

int PolarizedQuiver::arrow_from(Slot s) const {
  if (s.v < 0 || s.v >= num_vertices()) return -1;
  return from_slot_[slot_key(s)];
}

int PolarizedQuiver::arrow_to(Slot s) const {
  if (s.v < 0 || s.v >= num_vertices()) return -1;
  return to_slot_[slot_key(s)];
}

int PolarizedQuiver::loop_at(int v) const { return loop_.at(v); }

bool PolarizedQuiver::has_trivial(Slot s) const {
  int a = arrow_from(s);
  return a < 0 || !arrows_[a].special;
}

ValidationReport PolarizedQuiver::validate() const {
  ValidationReport r;
  std::map<Slot, std::vector<std::string>> src, tgt;
  for (const auto& a : arrows_) {
    src[a.from].push_back(a.id);
    tgt[a.to].push_back(a.id);
  }
  auto slot_str = [&](Slot s) {
    return "(" + vertices_[s.v].id + "," + (s.sign > 0 ? "+1" : "-1") + ")";
  };
  for (const auto& [s, ids] : src)
    if (ids.size() > 1) r.problems.push_back("source map not injective at slot " + slot_str(s));
  for (const auto& [s, ids] : tgt)
    if (ids.size() > 1) r.problems.push_back("target map not injective at slot " + slot_str(s));
  for (const auto& a : arrows_) {
    if (!a.special) continue;
    if (a.from != a.to || a.from.sign != -1)
      r.problems.push_back("special loop '" + a.id + "' must have source = target = (v,-1)");
    if (!vertices_[a.from.v].special)
      r.problems.push_back("special loop '" + a.id + "' sits at ordinary vertex '" +
                           vertices_[a.from.v].id + "'");
  }
  std::vector<int> loops(vertices_.size(), 0);
  for (const auto& a : arrows_)
    if (a.special) ++loops[a.from.v];
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].special && loops[v] != 1)
      r.problems.push_back("special vertex '" + vertices_[v].id +
                           "' must carry exactly one special loop");
  // a may follow b iff s(b) = -t(a); a cycle means unbounded paths.
  int n = num_arrows();
  std::vector<std::vector<int>> next(n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (arrows_[b].from == arrows_[a].to.negated()) next[b].push_back(a);
  std::vector<int> color(n, 0);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int u) {
    color[u] = 1;
    for (int w : next[u]) {
      if (color[w] == 1) cyclic = true;
      else if (color[w] == 0) dfs(w);
    }
    color[u] = 2;
  };
  for (int u = 0; u < n && !cyclic; ++u)
    if (color[u] == 0) dfs(u);
  if (cyclic) r.problems.push_back("composition relation is cyclic: paths are unbounded");
  return r;
}

std::vector<ArrowSpec> PolarizedQuiver::arrow_specs() const {
  std::vector<ArrowSpec> out;
  for (const auto& a : arrows_)
    out.push_back({a.id, a.special, vertices_[a.from.v].id, a.from.sign, vertices_[a.to.v].id,
                   a.to.sign});
  return out;
}

void require_valid(const PolarizedQuiver& q) {
  auto r = q.validate();
  if (r.ok()) return;
  std::ostringstream os;
  os << "invalid polarized quiver:";
  for (const auto& p : r.problems) os << "\n  " << p;
  throw QuiverError(os.str());
}

PolarizedQuiver hat(const PolarizedQuiver& q) {
  require_valid(q);
  std::vector<Vertex> vs = q.vertices();
  for (auto& v : vs) v.special = false;
  auto specs = q.arrow_specs();
  for (auto& s : specs) s.special = false;
  return PolarizedQuiver(vs, specs);
}

std::vector<GabrielVertex> gabriel_vertices(const PolarizedQuiver& q) {
  require_valid(q);
  std::vector<GabrielVertex> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (q.is_special_vertex(v)) {
      out.push_back({v, GabrielTag::Plus});
      out.push_back({v, GabrielTag::Minus});
    } else {
      out.push_back({v, GabrielTag::Ordinary});
    }
  }
  return out;
}

std::string format_gabriel(const PolarizedQuiver& q, const GabrielVertex& g) {
  const char* t = g.tag == GabrielTag::Plus ? "+" : g.tag == GabrielTag::Minus ? "-" : "o";
  return "(" + q.vertex(g.vertex).id + "," + t + ")";
}

int gabriel_index(const std::vector<GabrielVertex>& gv, int vertex, GabrielTag tag) {
  for (size_t i = 0; i < gv.size(); ++i)
    if (gv[i].vertex == vertex && gv[i].tag == tag) return static_cast<int>(i);
  return -1;
}

ValidationReport validate_fringing(const Fringing& f) {
  ValidationReport r = f.base.validate();
  auto rf = f.fringed.validate();
  for (auto& p : rf.problems) r.problems.push_back("fringed: " + p);
  std::set<std::string> base_ids, fringe_ids(f.fringe_vertices.begin(), f.fringe_vertices.end());
  for (const auto& v : f.base.vertices()) base_ids.insert(v.id);
  for (const auto& v : f.fringed.vertices()) {
    bool in_base = base_ids.count(v.id) > 0;
    if (in_base == (fringe_ids.count(v.id) > 0))
      r.problems.push_back("vertex '" + v.id + "' must be either interior or fringe");
    if (in_base) {
      auto bv = f.base.find_vertex(v.id);
      if (f.base.vertex(*bv).special != v.special)
        r.problems.push_back("vertex '" + v.id + "' changes its special flag");
    }
  }
  for (const auto& id : base_ids)
    if (!f.fringed.find_vertex(id)) r.problems.push_back("base vertex '" + id + "' missing");
  // Induced subquiver: base arrows are exactly the fringed arrows between base vertices.
  for (const auto& a : f.fringed.arrows()) {
    bool s_in = base_ids.count(f.fringed.vertex(a.from.v).id) > 0;
    bool t_in = base_ids.count(f.fringed.vertex(a.to.v).id) > 0;
    auto ba = f.base.find_arrow(a.id);
    if (s_in && t_in) {
      if (!ba) {
        r.problems.push_back("arrow '" + a.id + "' between interior vertices missing in base");
        continue;
      }
      const Arrow& b = f.base.arrow(*ba);
      if (f.base.vertex(b.from.v).id != f.fringed.vertex(a.from.v).id ||
          f.base.vertex(b.to.v).id != f.fringed.vertex(a.to.v).id || b.from.sign != a.from.sign ||
          b.to.sign != a.to.sign || b.special != a.special)
        r.problems.push_back("arrow '" + a.id + "' differs between base and fringed");
      continue;
    }
    if (ba) r.problems.push_back("base arrow '" + a.id + "' leaves the base");
    if (s_in == t_in) {
      r.problems.push_back("fringe arrow '" + a.id + "' must join a fringe and an interior vertex");
    } else if (s_in) {
      if (a.to.sign != 1)
        r.problems.push_back("fringe arrow '" + a.id + "' needs polarization +1 at its fringe end");
    } else if (a.from.sign != 1) {
      r.problems.push_back("fringe arrow '" + a.id + "' needs polarization +1 at its fringe end");
    }
  }
  for (const auto& b : f.base.arrows())
    if (!f.fringed.find_arrow(b.id)) r.problems.push_back("base arrow '" + b.id + "' missing");
  for (int v = 0; v < f.fringed.num_vertices(); ++v) {
    if (!base_ids.count(f.fringed.vertex(v).id)) continue;
    int val = 0;
    for (const auto& a : f.fringed.arrows()) {
      if (a.from.v == v) ++val;
      if (a.to.v == v) ++val;
    }
    if (val != 4)
      r.problems.push_back("interior vertex '" + f.fringed.vertex(v).id + "' has valency " +
                           std::to_string(val) + ", expected 4");
  }
  return r;
}

const char* shape_name(HereditaryShape s) {
  switch (s) {
    case HereditaryShape::A: return "A";
    case HereditaryShape::Dprime: return "D'";
    case HereditaryShape::Atilde: return "A~";
    case HereditaryShape::Dtilde: return "D~'";
    default: return "invalid";
  }
}

HereditaryShape classify_hereditary(const PolarizedQuiver& h) {
  if (!h.validate().ok()) return HereditaryShape::Invalid;
  int n = h.num_vertices();
  if (n == 0) return HereditaryShape::Invalid;
  std::vector<int> deg(n, 0), loops(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : h.arrows()) {
    if (a.from.v == a.to.v) {
      if (!a.special) return HereditaryShape::Invalid;
      ++loops[a.from.v];
      continue;
    }
    ++deg[a.from.v];
    ++deg[a.to.v];
    adj[a.from.v].push_back(a.to.v);
    adj[a.to.v].push_back(a.from.v);
  }
  for (const auto& a : h.arrows())
    for (const auto& b : h.arrows())
      if (a.from.v == b.to.v && !(a.from == b.to.negated()) && &a != &b)
        if (!(a.special && &a == &b)) return HereditaryShape::Invalid;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++cnt;
    for (int w : adj[u])
      if (!seen[w]) seen[w] = true, stack.push_back(w);
  }
  if (cnt != n) return HereditaryShape::Invalid;
  int edges = 0, nloops = 0;
  for (int v = 0; v < n; ++v) {
    edges += deg[v];
    nloops += loops[v];
    if (deg[v] + 2 * loops[v] > 2 && !(n == 1 && loops[v] <= 1)) return HereditaryShape::Invalid;
  }
  edges /= 2;
  if (edges == n) return nloops == 0 ? HereditaryShape::Atilde : HereditaryShape::Invalid;
  if (edges != n - 1) return HereditaryShape::Invalid;
  for (int v = 0; v < n; ++v)
    if (loops[v] && n > 1 && deg[v] != 1) return HereditaryShape::Invalid;
  if (nloops == 0) return HereditaryShape::A;
  if (nloops == 1) return HereditaryShape::Dprime;
  if (nloops == 2 && n > 1) return HereditaryShape::Dtilde;
  return HereditaryShape::Invalid;
}

}  // namespace taulam
