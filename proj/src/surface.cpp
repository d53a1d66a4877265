#include "taulam/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace taulam {

int MarkedSurface::num_marked() const {
  int m = 0;
  for (int k : marked_per_component) m += k;
  return m;
}

int rank(const MarkedSurface& s) {
  int n = 6 * (s.genus - 1) + 3 * (s.boundary_components() + static_cast<int>(s.punctures.size())) +
          s.num_marked();
  if (n < 1) throw SurfaceError("surface has non-positive rank " + std::to_string(n));
  return n;
}

namespace {

enum class ArcRole { Ordinary, Plain, Notched };

struct Index {
  std::map<std::string, const TaggedArc*> arcs;
  std::map<std::string, ArcRole> role;
  std::map<std::string, std::string> puncture_of;  // plain/notched arc -> puncture
  std::map<std::string, std::string> plain, notched;  // puncture -> arc
  std::set<std::string> boundary, punctures;
};

Index build_index(const Triangulation& t, std::vector<std::string>& problems) {
  Index ix;
  for (const auto& p : t.surface.punctures)
    if (!ix.punctures.insert(p).second) problems.push_back("duplicate puncture '" + p + "'");
  for (const auto& b : t.boundary_segments)
    if (!ix.boundary.insert(b).second) problems.push_back("duplicate boundary segment '" + b + "'");
  for (const auto& a : t.arcs) {
    if (ix.arcs.count(a.id) || ix.boundary.count(a.id) || ix.punctures.count(a.id)) {
      problems.push_back("duplicate id '" + a.id + "'");
      continue;
    }
    ix.arcs[a.id] = &a;
    if (a.orientation != 1 && a.orientation != -1)
      problems.push_back("arc '" + a.id + "': orientation must be 1 or -1");
    bool pf = ix.punctures.count(a.from) > 0, pt = ix.punctures.count(a.to) > 0;
    if (pf && pt) {
      problems.push_back("arc '" + a.id + "' joins two punctures");
      continue;
    }
    if (!pf && !pt) {
      if (a.tag_from != 1 || a.tag_to != 1)
        problems.push_back("arc '" + a.id + "' between marked points must be plain");
      ix.role[a.id] = ArcRole::Ordinary;
      continue;
    }
    std::string p = pf ? a.from : a.to;
    int tag_m = pf ? a.tag_to : a.tag_from;
    int tag_p = pf ? a.tag_from : a.tag_to;
    if (tag_m != 1) problems.push_back("arc '" + a.id + "' is notched at a marked point");
    auto& slot = tag_p == 1 ? ix.plain[p] : ix.notched[p];
    if (!slot.empty()) problems.push_back("puncture '" + p + "' has two arcs with the same tag");
    slot = a.id;
    ix.role[a.id] = tag_p == 1 ? ArcRole::Plain : ArcRole::Notched;
    ix.puncture_of[a.id] = p;
  }
  for (const auto& p : t.surface.punctures) {
    if (ix.plain[p].empty() || ix.notched[p].empty()) {
      problems.push_back("puncture '" + p + "' lacks a plain/notched pair");
      continue;
    }
    const TaggedArc* a = ix.arcs[ix.plain[p]];
    const TaggedArc* b = ix.arcs[ix.notched[p]];
    auto other = [&](const TaggedArc* x) { return x->from == p ? x->to : x->from; };
    if (other(a) != other(b))
      problems.push_back("puncture '" + p + "': plain and notched arcs differ at the other end");
  }
  return ix;
}

}  // namespace

ValidationReport validate_triangulation(const Triangulation& t) {
  ValidationReport r;
  auto& pr = r.problems;
  if (t.surface.genus < 0) pr.push_back("genus must be non-negative");
  if (t.surface.marked_per_component.empty()) pr.push_back("surface needs a boundary component");
  for (int m : t.surface.marked_per_component)
    if (m < 1) pr.push_back("every boundary component needs a marked point");
  int n = 6 * (t.surface.genus - 1) +
          3 * (t.surface.boundary_components() + static_cast<int>(t.surface.punctures.size())) +
          t.surface.num_marked();
  if (n < 1) pr.push_back("rank " + std::to_string(n) + " is not positive");
  if (static_cast<int>(t.boundary_segments.size()) != t.surface.num_marked())
    pr.push_back("expected " + std::to_string(t.surface.num_marked()) + " boundary segments, got " +
                 std::to_string(t.boundary_segments.size()));
  if (static_cast<int>(t.arcs.size()) != n)
    pr.push_back("expected " + std::to_string(n) + " tagged arcs, got " +
                 std::to_string(t.arcs.size()));
  Index ix = build_index(t, pr);

  std::map<std::string, int> left, right, uses;
  std::set<std::string> folded;
  for (size_t k = 0; k < t.triangles.size(); ++k) {
    const Triangle& tr = t.triangles[k];
    std::string where = "triangle " + std::to_string(k);
    if (tr.sides.size() != 3) {
      pr.push_back(where + " must have three sides");
      continue;
    }
    if (tr.self_folded) {
      const std::string& p = tr.puncture;
      if (!ix.punctures.count(p)) {
        pr.push_back(where + ": unknown puncture '" + p + "'");
        continue;
      }
      if (!folded.insert(p).second) pr.push_back("puncture '" + p + "' has two self-folded triangles");
      if (tr.sides[0].id != ix.plain[p] || tr.sides[1].id != ix.plain[p] ||
          tr.sides[2].id != ix.notched[p])
        pr.push_back(where + " must list (plain, plain, notched) arcs of '" + p + "'");
      continue;
    }
    std::set<std::string> distinct;
    for (const auto& s : tr.sides) {
      distinct.insert(s.id);
      if (ix.boundary.count(s.id)) {
        ++uses[s.id];
      } else if (ix.arcs.count(s.id)) {
        ArcRole role = ix.role[s.id];
        if (role == ArcRole::Plain)
          pr.push_back(where + ": plain arc '" + s.id + "' belongs to a self-folded triangle only");
        else if (role == ArcRole::Notched)
          ++uses[s.id];
        else
          ++(s.left ? left : right)[s.id];
      } else {
        pr.push_back(where + ": unknown side '" + s.id + "'");
      }
    }
    if (distinct.size() != 3) pr.push_back(where + " has a repeated side (ambiguous gluing)");
  }
  for (const auto& p : t.surface.punctures)
    if (!folded.count(p)) pr.push_back("puncture '" + p + "' has no self-folded triangle");
  for (const auto& b : t.boundary_segments)
    if (uses[b] != 1) pr.push_back("boundary segment '" + b + "' must lie in exactly one triangle");
  for (const auto& [id, role] : ix.role) {
    if (role == ArcRole::Ordinary && (left[id] != 1 || right[id] != 1))
      pr.push_back("arc '" + id + "' must have one triangle on each side");
    if (role == ArcRole::Notched && uses[id] != 1)
      pr.push_back("loop of '" + id + "' must bound exactly one other triangle");
  }
  return r;
}

SurfaceQuiver quiver_of_triangulation(const Triangulation& t) {
  auto rep = validate_triangulation(t);
  auto fail = [](const std::string& head, const std::vector<std::string>& ps) {
    std::ostringstream os;
    os << head;
    for (const auto& p : ps) os << "\n  " << p;
    throw SurfaceError(os.str());
  };
  if (!rep.ok()) fail("invalid triangulation:", rep.problems);
  std::vector<std::string> scratch;
  Index ix = build_index(t, scratch);

  std::vector<Vertex> base_vs, fringed_vs;
  for (const auto& a : t.arcs)
    if (ix.role[a.id] == ArcRole::Ordinary) base_vs.push_back({a.id, false});
  for (const auto& p : t.surface.punctures) base_vs.push_back({p, true});
  fringed_vs = base_vs;
  for (const auto& b : t.boundary_segments) fringed_vs.push_back({b, false});

  std::vector<ArrowSpec> base_as, fringed_as;
  for (const auto& p : t.surface.punctures) {
    ArrowSpec eps{"eps." + p, true, p, -1, p, -1};
    base_as.push_back(eps);
    fringed_as.push_back(eps);
  }
  // Vertex and polarization of a side inside its triangle.
  auto end_of = [&](const TriangleSide& s) -> std::pair<std::string, int> {
    if (ix.boundary.count(s.id)) return {s.id, 1};
    if (ix.role[s.id] == ArcRole::Notched) return {ix.puncture_of[s.id], 1};
    return {s.id, (s.left ? 1 : -1) * ix.arcs[s.id]->orientation};
  };
  for (size_t k = 0; k < t.triangles.size(); ++k) {
    const Triangle& tr = t.triangles[k];
    if (tr.self_folded) continue;
    for (int j = 0; j < 3; ++j) {
      const auto& a = tr.sides[j];
      const auto& b = tr.sides[(j + 1) % 3];
      bool fa = ix.boundary.count(a.id) > 0, fb = ix.boundary.count(b.id) > 0;
      if (fa && fb) continue;  // fringe-fringe arrows are not part of the fringing
      auto [va, sa] = end_of(a);
      auto [vb, sb] = end_of(b);
      ArrowSpec spec{"t" + std::to_string(k) + "." + std::to_string(j), false, va, sa, vb, sb};
      fringed_as.push_back(spec);
      if (!fa && !fb) base_as.push_back(spec);
    }
  }
  SurfaceQuiver out;
  out.fringing.base = PolarizedQuiver(base_vs, base_as);
  out.fringing.fringed = PolarizedQuiver(fringed_vs, fringed_as);
  out.fringing.fringe_vertices = t.boundary_segments;
  auto vb = out.fringing.base.validate();
  if (!vb.ok()) fail("triangulation yields an invalid quiver:", vb.problems);
  auto vf = validate_fringing(out.fringing);
  if (!vf.ok()) fail("triangulation yields an invalid fringing:", vf.problems);
  const auto& q = out.fringing.base;
  for (const auto& g : gabriel_vertices(q)) {
    const std::string& id = q.vertex(g.vertex).id;
    if (g.tag == GabrielTag::Ordinary) out.arc_of_gabriel.push_back(id);
    else out.arc_of_gabriel.push_back(g.tag == GabrielTag::Plus ? ix.plain[id] : ix.notched[id]);
  }
  return out;
}

IdealTriangulation ideal_triangulation(const Triangulation& t) {
  IdealTriangulation out;
  std::vector<std::string> scratch;
  Index ix = build_index(t, scratch);
  for (const auto& a : t.arcs) out.arcs.push_back(a.id);
  for (const auto& p : t.surface.punctures) out.self_folded.push_back({p, ix.plain[p], ix.notched[p]});
  out.triangles = t.triangles;
  return out;
}

IntMatrix exchange_matrix(const Triangulation& t) {
  SurfaceQuiver sqv = quiver_of_triangulation(t);
  const auto& q = sqv.fringing.base;
  auto gv = gabriel_vertices(q);
  size_t n = gv.size();
  IntMatrix b(n, std::vector<int>(n, 0));
  auto copies = [&](int v) {
    std::vector<size_t> out;
    for (size_t k = 0; k < n; ++k)
      if (gv[k].vertex == v) out.push_back(k);
    return out;
  };
  for (const auto& a : q.arrows()) {
    if (a.special) continue;
    for (size_t i : copies(a.from.v))
      for (size_t j : copies(a.to.v)) {
        b[i][j] += 1;
        b[j][i] -= 1;
      }
  }
  return b;
}

Seed seed_of_triangulation(const Triangulation& t) {
  Seed s;
  s.index = quiver_of_triangulation(t).arc_of_gabriel;
  s.beta = beta_from_fst(exchange_matrix(t));
  return s;
}

}  // namespace taulam
