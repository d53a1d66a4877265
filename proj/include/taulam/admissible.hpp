// The projection F from the gentle quiver Q-hat, completion, A(w),
// admissibility, decorations and the operator tau_f.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taulam/quiver.hpp"
#include "taulam/word.hpp"

namespace taulam {

// A skewed-gentle quiver together with its gentle hat. Vertex and arrow
// indices agree between the two, so words move between them unchanged
// except for the letter kinds touched by F.
struct SkewedQuiver {
  PolarizedQuiver base;
  PolarizedQuiver hat;

  SkewedQuiver() = default;
  explicit SkewedQuiver(PolarizedQuiver q);
};

// A fringing with both levels prepared. fringe_flag[v] marks fringe vertices
// of the fringed quiver.
struct FringedQuiver {
  SkewedQuiver base;
  SkewedQuiver fringed;
  std::vector<bool> fringe_flag;

  FringedQuiver() = default;
  explicit FringedQuiver(const Fringing& f);
};

Letter project_letter(const SkewedQuiver& sq, Letter l);
Word project_F(const SkewedQuiver& sq, const Word& x);

// Trivial letters 1_{i,-1}^{+-1} with i special.
bool is_punctured(const SkewedQuiver& sq, Letter l);

enum class WordType { UU, UP, PU, PP, B };
const char* type_name(WordType t);
WordType type_of(const SkewedQuiver& sq, const Word& x);

Word completion(const SkewedQuiver& sq, const Word& x);

// x over the hat; F-equality of the two readings counts as a tie.
bool is_admissible(const SkewedQuiver& sq, const Word& x);
bool is_weakly_admissible(const SkewedQuiver& sq, const Word& x);

// w is a string or a standard-form primitive band over the base.
Word build_A(const SkewedQuiver& sq, const Word& w);

// 1_{i,+}^-1 1_{i,-} over the hat, which is A of the simple string of i.
Word simple_string(const SkewedQuiver& sq, int i);

// Admissible strings, and admissible bands as rotation-minimal
// representatives (both orientations listed), of length <= max_len.
struct AdmissibleSet {
  std::vector<Word> strings;
  std::vector<Word> bands;
};
AdmissibleSet enumerate_admissible(const SkewedQuiver& sq, int max_len);

// Minimal rotation of a band (orientation kept).
Word rotation_key(const Word& w);

// tau_f on an admissible word over base.hat; result lies over fringed.hat.
Word tau_f(const FringedQuiver& fq, const Word& x);
// The string q_i^(f) over fringed.hat standing in for tau_f(-s_i).
Word q_f(const FringedQuiver& fq, int i);
// Maximal inverse-free right inextensible word whose first letter ends at slot.
Word direct_path_to(const PolarizedQuiver& hat, Slot slot);

// Element of S = {+-1}^2 u {*, (*,*)}.
struct Decoration {
  enum class Kind { Pair, Star, StarStar };
  Kind kind = Kind::Pair;
  int s1 = 1;
  int s2 = 1;

  static Decoration pair(int a, int b) { return {Kind::Pair, a, b}; }
  static Decoration star() { return {Kind::Star, 0, 0}; }
  static Decoration star_star() { return {Kind::StarStar, 0, 0}; }

  friend bool operator==(const Decoration&, const Decoration&) = default;
  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

// Component 1 or 2 as a value in {-1, 1, 0}, with 0 standing for *.
int component(const Decoration& s, int j);
int weight(const Decoration& s);
Decoration iota(const Decoration& s);
Decoration chi(const Decoration& s);
std::vector<Decoration> decorations_for(WordType t);
std::string format_decoration(const Decoration& s);
Decoration parse_decoration(const std::string& text);

// Either an admissible word over base.hat or a negative simple -s_i^{+-1}.
struct DecoratedWord {
  bool negative = false;
  int ns_vertex = -1;
  bool ns_inverse = false;
  Word x;
  Decoration s;

  friend bool operator==(const DecoratedWord&, const DecoratedWord&) = default;
};

DecoratedWord negative_simple(int i, Decoration s, bool inverted = false);
WordType negative_simple_type(const SkewedQuiver& sq, int i, bool inverted);
bool is_valid_decorated(const SkewedQuiver& sq, const DecoratedWord& d);
DecoratedWord canonical_class(const SkewedQuiver& sq, const DecoratedWord& d);
bool decorated_less(const DecoratedWord& a, const DecoratedWord& b);
std::string format_decorated(const SkewedQuiver& sq, const DecoratedWord& d);
DecoratedWord parse_decorated(const SkewedQuiver& sq, const std::string& text);

// Gabriel vertex of q~(-s_i, s) for the canonical representative.
GabrielVertex q_tilde(const SkewedQuiver& sq, const DecoratedWord& d);

// All canonical decorated classes: admissible strings and bands of length
// <= max_len with every decoration, plus all negative simples.
std::vector<DecoratedWord> enumerate_decorated_classes(const SkewedQuiver& sq, int max_len);

}  // namespace taulam
