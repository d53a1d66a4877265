// The tame partial KRS-monoid KRS(C, e) of finitely supported, pairwise
// orthogonal multiplicity functions on a ground set of opaque class keys.
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taulam {

class KRSError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KRSElement {
  std::map<std::string, int> mult;  // positive multiplicities only

  static KRSElement zero() { return {}; }
  static KRSElement delta(const std::string& c, int m = 1);
  int total() const;
  friend bool operator==(const KRSElement&, const KRSElement&) = default;
  friend auto operator<=>(const KRSElement&, const KRSElement&) = default;
};

class KRSMonoid {
 public:
  using Pairing = std::function<int(const std::string&, const std::string&)>;

  KRSMonoid(std::vector<std::string> ground, Pairing e);

  const std::vector<std::string>& ground() const { return ground_; }
  bool in_ground(const std::string& c) const;
  int e(const std::string& c, const std::string& d) const { return e_(c, d); }

  // Support inside the ground set, positive multiplicities, pairwise orthogonal.
  bool is_element(const KRSElement& f) const;
  int pairing(const KRSElement& f, const KRSElement& g) const;
  bool summable(const KRSElement& f, const KRSElement& g) const { return pairing(f, g) == 0; }
  KRSElement direct_sum(const KRSElement& f, const KRSElement& g) const;
  std::vector<std::pair<std::string, int>> indecomposables(const KRSElement& f) const;
  bool is_indecomposable(const KRSElement& f) const;

  std::vector<int> framing_value(const KRSElement& f,
                                 const std::function<std::vector<int>(const std::string&)>& g,
                                 size_t dim) const;

 private:
  std::vector<std::string> ground_;
  Pairing e_;
};

// Checks symmetry, tameness and axioms (s), (0), (d), (a) over all pairs and
// triples of the sample. Returns one line per violation.
std::vector<std::string> check_partial_monoid_axioms(const KRSMonoid& m,
                                                     const std::vector<KRSElement>& sample);

// Number of ways to write f as an unordered sum of indecomposables, where
// indecomposability is decided from the definition over the sub-elements of f.
long count_decompositions(const KRSMonoid& m, const KRSElement& f);

// Framing additivity on every summable pair of the sample.
std::vector<std::string> check_framing_additivity(
    const KRSMonoid& m, const std::vector<KRSElement>& sample,
    const std::function<std::vector<int>(const std::string&)>& g, size_t dim);

}  // namespace taulam
