// Skewed-gentle polarized quivers, their fringings, the gentle quiver Q-hat
// and the vertex set of the Gabriel quiver.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taulam {

struct Slot {
  int v = -1;
  int sign = 1;

  Slot negated() const { return {v, -sign}; }
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Vertex {
  std::string id;
  bool special = false;
};

struct Arrow {
  std::string id;
  bool special = false;
  Slot from;
  Slot to;
};

// Input record before id resolution; vertex references are by id.
struct ArrowSpec {
  std::string id;
  bool special = false;
  std::string from_v;
  int from_sign = 1;
  std::string to_v;
  int to_sign = 1;
};

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Vertices and arrows are stored sorted by id; indices into those vectors are
// the handles used throughout the library.
class PolarizedQuiver {
 public:
  PolarizedQuiver() = default;
  PolarizedQuiver(std::vector<Vertex> vertices, const std::vector<ArrowSpec>& arrows);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  // Arrow index whose source (resp. target) slot is s, or -1.
  int arrow_from(Slot s) const;
  int arrow_to(Slot s) const;
  // Special loop at v, or -1.
  int loop_at(int v) const;
  bool is_special_vertex(int v) const { return vertices_.at(v).special; }

  // Whether the trivial letter at s exists: s is not the source slot of a
  // special loop.
  bool has_trivial(Slot s) const;

  ValidationReport validate() const;

  std::vector<ArrowSpec> arrow_specs() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> from_slot_;
  std::vector<int> to_slot_;
  std::vector<int> loop_;
  void index();
  int slot_key(Slot s) const { return 2 * s.v + (s.sign > 0 ? 1 : 0); }
};

// Throws QuiverError listing all problems if the quiver is invalid.
void require_valid(const PolarizedQuiver& q);

// The associated gentle quiver: same vertices, arrows and slots, with every
// special loop reclassified as ordinary.
PolarizedQuiver hat(const PolarizedQuiver& q);

enum class GabrielTag { Plus, Minus, Ordinary };

struct GabrielVertex {
  int vertex = -1;
  GabrielTag tag = GabrielTag::Ordinary;
  friend bool operator==(const GabrielVertex&, const GabrielVertex&) = default;
};

std::vector<GabrielVertex> gabriel_vertices(const PolarizedQuiver& q);
std::string format_gabriel(const PolarizedQuiver& q, const GabrielVertex& g);
// Position of (v, tag) in gabriel_vertices(q); tag Ordinary for ordinary v.
int gabriel_index(const std::vector<GabrielVertex>& gv, int vertex, GabrielTag tag);

struct Fringing {
  PolarizedQuiver base;
  PolarizedQuiver fringed;
  std::vector<std::string> fringe_vertices;
};

ValidationReport validate_fringing(const Fringing& f);

enum class HereditaryShape { A, Dprime, Atilde, Dtilde, Invalid };
const char* shape_name(HereditaryShape s);

// Classifies the underlying graph of a connected hereditary polarized quiver.
HereditaryShape classify_hereditary(const PolarizedQuiver& h);

}  // namespace taulam
