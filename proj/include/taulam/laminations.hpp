// Laminations over a fixed signature-zero triangulation: the partial
// KRS-monoid of tau-generic decorated classes under e_Q, shear coordinates at
// the base and their transport along flip sequences.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taulam/admissible.hpp"
#include "taulam/invariants.hpp"
#include "taulam/krs.hpp"
#include "taulam/mutation.hpp"
#include "taulam/surface.hpp"

namespace taulam {

class LaminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The base triangulation with everything derived from it. Coordinate
// vectors are indexed by `arcs` (= gabriel order of the base quiver).
struct LaminationBase {
  Triangulation triangulation;
  SurfaceQuiver surface_quiver;
  FringedQuiver fq;
  Seed seed;
  std::vector<std::string> arcs;

  explicit LaminationBase(const Triangulation& t);
};

// Components are keyed by format_decorated of the canonical class.
struct Lamination {
  KRSElement components;
};

// The tau-generic classes of word length <= max_len and the monoid they
// generate. e_Q values between classes are cached.
class LaminationSpace {
 public:
  LaminationSpace(const LaminationBase& base, int max_len);
  LaminationSpace(const LaminationSpace&) = delete;
  LaminationSpace& operator=(const LaminationSpace&) = delete;

  const LaminationBase& base() const { return *base_; }
  const std::vector<DecoratedWord>& classes() const { return classes_; }
  const std::vector<std::string>& keys() const { return keys_; }
  const KRSMonoid& monoid() const { return *monoid_; }
  // Position of a class key, or -1.
  int find(const std::string& key) const;
  std::string key_of(const DecoratedWord& d) const;
  const DecoratedWord& decode(const std::string& key) const;

  bool is_lamination(const Lamination& l) const;
  Lamination from_multiplicities(const std::map<std::string, int>& m) const;
  Lamination unit(const std::string& key, int m = 1) const;
  // The negative simple lamination of a tagged arc of the base.
  Lamination arc_lamination(const std::string& arc) const;

  // Symmetric, non-negative; equals e_Q.
  int marked_intersection(const DecoratedWord& a, const DecoratedWord& b) const;
  IntVector g_of(const std::string& key) const;
  IntVector shear_at_base(const Lamination& l) const;
  IntVector shear_at(const Lamination& l, const std::vector<int>& path) const;

 private:
  const LaminationBase* base_;
  std::vector<DecoratedWord> classes_;
  std::vector<std::string> keys_;
  std::map<std::string, int> pos_;
  std::vector<std::vector<int>> e_;
  std::vector<IntVector> g_;
  std::optional<KRSMonoid> monoid_;
};

struct CheckLine {
  explicit CheckLine(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  long checked = 0;
  std::vector<std::string> failures;  // capped
};

struct IsomorphismReport {
  int max_len = 0;
  int decorated_classes = 0;
  int tau_generic_classes = 0;
  std::vector<CheckLine> checks;
  bool passed() const;
};

IsomorphismReport krs_isomorphism_check(const LaminationBase& base, int max_len);

}  // namespace taulam
