// Fixture loading and small triangulation generators shared by the tests.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "taulam/json_io.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(TAULAM_DATA_DIR) + "/" + name + ".json"; }

inline taulam::Fringing quiver_fixture(const std::string& name) {
  return *taulam::quiver_from_json(taulam::read_json_file(data(name))).fringing;
}

inline taulam::Triangulation triangulation(const std::string& name) {
  return taulam::triangulation_from_json(taulam::read_json_file(data(name)));
}

inline taulam::Fringing surface_fringing(const std::string& name) {
  return taulam::quiver_of_triangulation(triangulation(name)).fringing;
}

// Fills the polygon with corners `poly` (counterclockwise) by random ears.
// side(a, b) names the edge between corners a < b (positions in `poly`).
template <class Side>
void fill_polygon(std::vector<int> poly, std::mt19937& rng, taulam::Triangulation& t, Side side) {
  if (poly.size() < 3) return;
  // Triangle on the first and last corner, apex chosen at random.
  size_t k = 1 + rng() % (poly.size() - 2);
  int a = poly.front(), b = poly[k], c = poly.back();
  taulam::Triangle tr;
  // Counterclockwise sides ab, bc, ca; listed clockwise.
  tr.sides = {side(a, c, b), side(b, c, a), side(a, b, c)};
  t.triangles.push_back(tr);
  fill_polygon(std::vector<int>(poly.begin(), poly.begin() + k + 1), rng, t, side);
  fill_polygon(std::vector<int>(poly.begin() + k, poly.end()), rng, t, side);
}

// A random triangulation of the n-gon with corners m0..m(n-1); boundary
// segment i joins corners i and i+1. Arc orientations are random.
inline taulam::Triangulation random_polygon(int n, unsigned seed) {
  std::mt19937 rng(seed);
  taulam::Triangulation t;
  t.surface.marked_per_component = {n};
  for (int i = 0; i < n; ++i) t.boundary_segments.push_back("b" + std::to_string(i));
  std::map<std::string, int> orient;
  auto side = [&](int a, int b, int apex) -> taulam::TriangleSide {
    if (b - a == 1) return {"b" + std::to_string(a), true};
    if (a == 0 && b == n - 1) return {"b" + std::to_string(n - 1), true};
    std::string id = "d" + std::to_string(a) + "_" + std::to_string(b);
    if (!orient.count(id)) {
      orient[id] = rng() % 2 ? 1 : -1;
      t.arcs.push_back({id, "m" + std::to_string(a), "m" + std::to_string(b), 1, 1, orient[id]});
    }
    // Corners strictly between a and b lie to the right of a -> b.
    return {id, !(a < apex && apex < b)};
  };
  std::vector<int> poly(n);
  for (int i = 0; i < n; ++i) poly[i] = i;
  fill_polygon(poly, rng, t, side);
  return t;
}

// A random signature-zero triangulation of the once-punctured n-gon: the
// puncture sits in a self-folded triangle at m0, the rest is a random
// triangulation of the (n+1)-gon m0, m1, ..., m(n-1), m0' whose last edge is
// the enclosing loop.
inline taulam::Triangulation random_punctured_polygon(int n, unsigned seed) {
  std::mt19937 rng(seed);
  taulam::Triangulation t;
  t.surface.marked_per_component = {n};
  t.surface.punctures = {"p"};
  for (int i = 0; i < n; ++i) t.boundary_segments.push_back("b" + std::to_string(i));
  t.arcs.push_back({"tp", "m0", "p", 1, 1, 1});
  t.arcs.push_back({"tpn", "m0", "p", 1, -1, 1});
  t.triangles.push_back({{{"tp", true}, {"tp", true}, {"tpn", true}}, true, "p"});
  auto corner = [&](int a) { return "m" + std::to_string(a == n ? 0 : a); };
  auto side = [&](int a, int b, int apex) -> taulam::TriangleSide {
    if (a == 0 && b == n) return {"tpn", true};
    if (b - a == 1) return {"b" + std::to_string(a), true};
    std::string id = "d" + std::to_string(a) + "_" + std::to_string(b);
    if (std::none_of(t.arcs.begin(), t.arcs.end(), [&](const auto& x) { return x.id == id; }))
      t.arcs.push_back({id, corner(a), corner(b), 1, 1, 1});
    return {id, !(a < apex && apex < b)};
  };
  std::vector<int> poly(n + 1);
  for (int i = 0; i <= n; ++i) poly[i] = i;
  fill_polygon(poly, rng, t, side);
  return t;
}

}  // namespace fixtures
