// Letters, words, strings and bands over a polarized quiver.
#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taulam/quiver.hpp"

namespace taulam {

enum class LetterKind : unsigned char { Direct, Inverse, Special, Trivial, TrivialInv };

// idx is an arrow index for Direct/Inverse/Special and a vertex index for the
// two trivial kinds; sign is only meaningful for trivial letters.
struct Letter {
  LetterKind kind = LetterKind::Direct;
  int idx = 0;
  int sign = 0;

  static Letter direct(int a) { return {LetterKind::Direct, a, 0}; }
  static Letter inverse_of(int a) { return {LetterKind::Inverse, a, 0}; }
  static Letter special(int a) { return {LetterKind::Special, a, 0}; }
  static Letter trivial(int v, int s) { return {LetterKind::Trivial, v, s}; }
  static Letter trivial_inv(int v, int s) { return {LetterKind::TrivialInv, v, s}; }

  bool is_trivial() const { return kind == LetterKind::Trivial || kind == LetterKind::TrivialInv; }
  bool is_arrow() const { return kind == LetterKind::Direct || kind == LetterKind::Inverse; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text parser; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int column)
      : std::runtime_error("column " + std::to_string(column) + ": " + msg), column(column) {}
  int column;
};

Letter inverse(Letter l);
Word inverse(const Word& w);

std::optional<Slot> source(const PolarizedQuiver& q, Letter l);
std::optional<Slot> target(const PolarizedQuiver& q, Letter l);

// Whether l is a letter of q at all (kind agrees with the arrow, trivial slot allowed).
bool letter_exists(const PolarizedQuiver& q, Letter l);
// Whether the pair ab may appear consecutively: s(a) = -t(b).
bool composable(const PolarizedQuiver& q, Letter a, Letter b);

struct LetterInfo {
  Letter letter;
  std::optional<Slot> s;
  std::optional<Slot> t;
  Letter inv;
};
std::vector<LetterInfo> letters(const PolarizedQuiver& q);

// Nonempty description of the first defect, or nullopt for a valid word.
std::optional<std::string> word_problem(const PolarizedQuiver& q, const Word& w);
bool is_word(const PolarizedQuiver& q, const Word& w);
Word concat(const PolarizedQuiver& q, const Word& w, const Word& v);

// Position of a letter inside its slot set L_(i,rho): arrow < trivial < inverse.
int letter_rank(Letter l);

enum class Order { Less, Equal, Greater, Incomparable };
Order lex_compare(const PolarizedQuiver& q, const Word& u, const Word& v);

bool is_string(const PolarizedQuiver& q, const Word& w);
bool is_band(const PolarizedQuiver& q, const Word& w);
bool is_primitive(const Word& w);
bool is_primitive_band(const PolarizedQuiver& q, const Word& w);
bool is_symmetric_string(const PolarizedQuiver& q, const Word& w);
// For a primitive band: w^-1 is a rotation of w.
bool is_symmetric_band(const PolarizedQuiver& q, const Word& w);
// Shape eps* v zeta* v^-1.
bool is_standard_symmetric(const Word& w);

Word rotate(const Word& w, int k);
std::vector<Word> rotations(const Word& w);
// Canonical class representative: the minimal rotation of w or w^-1, or for a
// symmetric band the minimal rotation of shape eps* v zeta* v^-1.
Word standard_form(const PolarizedQuiver& q, const Word& w);
// Minimal element of the rotation and inversion class, without the standard-shape rule.
Word band_class_key(const Word& w);

// Complete duplicate-free lists, ordered by length and then letterwise.
std::vector<Word> enumerate_strings(const PolarizedQuiver& q, int max_len);
std::vector<Word> enumerate_bands(const PolarizedQuiver& q, int max_len);

std::string format_letter(const PolarizedQuiver& q, Letter l);
std::string format_word(const PolarizedQuiver& q, const Word& w);
// Parses the text grammar; letters must exist in q and be composable.
Word parse_word(const PolarizedQuiver& q, const std::string& text);

// Re-indexes a word between two quivers that share the relevant ids.
Word transport(const PolarizedQuiver& from, const PolarizedQuiver& to, const Word& w);
bool word_less(const Word& a, const Word& b);

}  // namespace taulam
