#include "taulam/admissible.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace taulam {

SkewedQuiver::SkewedQuiver(PolarizedQuiver q) : base(std::move(q)), hat(taulam::hat(base)) {}

FringedQuiver::FringedQuiver(const Fringing& f) : base(f.base), fringed(f.fringed) {
  auto r = validate_fringing(f);
  if (!r.ok()) {
    std::ostringstream os;
    os << "invalid fringing:";
    for (const auto& p : r.problems) os << "\n  " << p;
    throw QuiverError(os.str());
  }
  fringe_flag.assign(fringed.base.num_vertices(), false);
  for (const auto& id : f.fringe_vertices) fringe_flag[fringed.base.vertex_index(id)] = true;
}

Letter project_letter(const SkewedQuiver& sq, Letter l) {
  if (l.is_arrow() && sq.base.arrow(l.idx).special) return Letter::special(l.idx);
  if (l.is_trivial() && l.sign == -1 && sq.base.is_special_vertex(l.idx))
    return Letter::special(sq.base.loop_at(l.idx));
  return l;
}

Word project_F(const SkewedQuiver& sq, const Word& x) {
  Word out;
  out.reserve(x.size());
  for (auto l : x) out.push_back(project_letter(sq, l));
  return out;
}

bool is_punctured(const SkewedQuiver& sq, Letter l) {
  return l.is_trivial() && l.sign == -1 && sq.base.is_special_vertex(l.idx);
}

const char* type_name(WordType t) {
  switch (t) {
    case WordType::UU: return "(u,u)";
    case WordType::UP: return "(u,p)";
    case WordType::PU: return "(p,u)";
    case WordType::PP: return "(p,p)";
    case WordType::B: return "(b)";
  }
  return "?";
}

WordType type_of(const SkewedQuiver& sq, const Word& x) {
  if (x.empty() || x.front().kind != LetterKind::TrivialInv) return WordType::B;
  bool a = is_punctured(sq, x.front());
  bool b = is_punctured(sq, x.back());
  if (a && b) return WordType::PP;
  if (a) return WordType::PU;
  if (b) return WordType::UP;
  return WordType::UU;
}

namespace {

Word slice(const Word& w, size_t from, size_t to) { return Word(w.begin() + from, w.begin() + to); }

Word append(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Backward and forward cyclic readings of length n-1 around position k.
std::pair<Word, Word> cyclic_readings(const Word& w, size_t k) {
  size_t n = w.size();
  Word l, r;
  for (size_t j = 1; j < n; ++j) {
    l.push_back(inverse(w[(k + n - j) % n]));
    r.push_back(w[(k + j) % n]);
  }
  return {l, r};
}

// Orientation test shared by (s1)/(b1) and their weak forms. Returns
// 1 if fine, 0 on an orientation violation, -1 on a tie.
int check_position(const SkewedQuiver& sq, Letter xk, const Word& l, const Word& r) {
  if (project_F(sq, l) == project_F(sq, r)) return -1;
  Order o = lex_compare(sq.hat, l, r);
  if (o == Order::Equal || o == Order::Incomparable) return 0;
  bool direct = xk.kind == LetterKind::Direct;
  return direct == (o == Order::Greater) ? 1 : 0;
}

bool orientation_ok(const SkewedQuiver& sq, const Word& x, bool weak) {
  bool band = type_of(sq, x) == WordType::B;
  size_t n = x.size();
  size_t lo = band ? 0 : 1;
  size_t hi = band ? n : n - 1;
  for (size_t k = lo; k < hi; ++k) {
    if (!x[k].is_arrow() || !sq.base.arrow(x[k].idx).special) continue;
    Word l, r;
    if (band) {
      std::tie(l, r) = cyclic_readings(x, k);
    } else {
      l = inverse(slice(x, 0, k));
      r = slice(x, k + 1, n);
    }
    int c = check_position(sq, x[k], l, r);
    if (c == 0) return false;
    if (c == -1 && !weak) return false;
  }
  return true;
}

}  // namespace

Word completion(const SkewedQuiver& sq, const Word& x) {
  size_t l = x.size() - 1;
  switch (type_of(sq, x)) {
    case WordType::UU:
    case WordType::B: return project_F(sq, x);
    case WordType::UP: return append(project_F(sq, x), project_F(sq, inverse(slice(x, 0, l))));
    case WordType::PU: return append(project_F(sq, inverse(slice(x, 1, l + 1))), project_F(sq, x));
    case WordType::PP: return append(project_F(sq, x), project_F(sq, inverse(slice(x, 1, l))));
  }
  return x;
}

bool is_admissible(const SkewedQuiver& sq, const Word& x) {
  WordType t = type_of(sq, x);
  if (t == WordType::B) {
    if (!is_primitive_band(sq.hat, x)) return false;
    if (!orientation_ok(sq, x, false)) return false;
    return is_primitive(project_F(sq, x));
  }
  if (!is_string(sq.hat, x)) return false;
  if (!orientation_ok(sq, x, false)) return false;
  if (t == WordType::PP) return is_primitive(completion(sq, x));
  return true;
}

bool is_weakly_admissible(const SkewedQuiver& sq, const Word& x) {
  if (type_of(sq, x) == WordType::B) {
    if (!is_primitive_band(sq.hat, x)) return false;
  } else if (!is_string(sq.hat, x)) {
    return false;
  }
  return orientation_ok(sq, x, true);
}

namespace {

Letter resolve(const SkewedQuiver& sq, Letter l, const Word& left, const Word& right) {
  if (l.kind != LetterKind::Special) return l;
  Order o = lex_compare(sq.base, left, right);
  if (o == Order::Greater) return Letter::direct(l.idx);
  if (o == Order::Less) return Letter::inverse_of(l.idx);
  throw WordError("build_A: readings around a special letter are not comparable");
}

}  // namespace

Word build_A(const SkewedQuiver& sq, const Word& w) {
  const auto& q = sq.base;
  size_t n = w.size();
  Word out;
  if (is_string(q, w)) {
    if (inverse(w) == w) {
      size_t m = (n - 1) / 2;
      for (size_t i = 0; i < m; ++i)
        out.push_back(resolve(sq, w[i], inverse(slice(w, 0, i)), slice(w, i + 1, n)));
      out.push_back(Letter::trivial(q.arrow(w[m].idx).from.v, -1));
      return out;
    }
    for (size_t i = 0; i < n; ++i)
      out.push_back(resolve(sq, w[i], inverse(slice(w, 0, i)), slice(w, i + 1, n)));
    return out;
  }
  if (!is_primitive_band(q, w)) throw WordError("build_A: neither a string nor a primitive band");
  if (is_symmetric_band(q, w)) {
    if (!is_standard_symmetric(w)) throw WordError("build_A: symmetric band not in standard form");
    size_t m = n / 2;
    out.push_back(Letter::trivial_inv(q.arrow(w[0].idx).from.v, -1));
    for (size_t i = 1; i < m; ++i) {
      auto [l, r] = cyclic_readings(w, i);
      out.push_back(resolve(sq, w[i], l, r));
    }
    out.push_back(Letter::trivial(q.arrow(w[m].idx).from.v, -1));
    return out;
  }
  for (size_t i = 0; i < n; ++i) {
    auto [l, r] = cyclic_readings(w, i);
    out.push_back(resolve(sq, w[i], l, r));
  }
  return out;
}

Word simple_string(const SkewedQuiver&, int i) {
  return {Letter::trivial_inv(i, 1), Letter::trivial(i, -1)};
}

Word rotation_key(const Word& w) {
  Word best = w;
  for (size_t k = 1; k < w.size(); ++k) {
    Word r = rotate(w, static_cast<int>(k));
    if (r < best) best = r;
  }
  return best;
}

AdmissibleSet enumerate_admissible(const SkewedQuiver& sq, int max_len) {
  AdmissibleSet out;
  for (auto& x : enumerate_strings(sq.hat, max_len))
    if (is_admissible(sq, x)) out.strings.push_back(std::move(x));
  for (auto& b : enumerate_bands(sq.hat, max_len)) {
    if (!is_admissible(sq, b)) continue;
    out.bands.push_back(rotation_key(b));
    out.bands.push_back(rotation_key(inverse(b)));
  }
  std::sort(out.bands.begin(), out.bands.end(), word_less);
  return out;
}

Word direct_path_to(const PolarizedQuiver& hat, Slot slot) {
  Word out;
  Slot cur = slot;
  for (int guard = 0; guard <= hat.num_arrows(); ++guard) {
    int a = hat.arrow_to(cur);
    if (a < 0) {
      out.push_back(Letter::trivial(cur.v, cur.sign));
      return out;
    }
    out.push_back(Letter::direct(a));
    cur = hat.arrow(a).from.negated();
  }
  throw WordError("direct path does not terminate");
}

Word tau_f(const FringedQuiver& fq, const Word& x) {
  Word y = transport(fq.base.hat, fq.fringed.hat, x);
  if (type_of(fq.base, x) == WordType::B) return y;
  // Punctured ends are recognised on the base word; transport keeps letters aligned.
  auto ext = [&](const Word& w, const Word& wbase) {
    if (is_punctured(fq.base, wbase.back())) return w;
    Slot s{w.back().idx, w.back().sign};
    const auto& fh = fq.fringed.hat;
    int alpha = fh.arrow_from(s);
    if (alpha < 0) throw WordError("tau_f: fringing has no arrow starting at the end slot");
    Word out(w.begin(), w.end() - 1);
    out.push_back(Letter::inverse_of(alpha));
    Word h = direct_path_to(fh, fh.arrow(alpha).to.negated());
    out.insert(out.end(), h.begin(), h.end());
    return out;
  };
  Word right = ext(y, x);
  Word both = ext(inverse(right), inverse(x));
  return inverse(both);
}

Word q_f(const FringedQuiver& fq, int i) {
  const auto& fh = fq.fringed.hat;
  int v = fh.vertex_index(fq.base.base.vertex(i).id);
  Word minus = direct_path_to(fh, {v, 1});
  if (fq.base.base.is_special_vertex(i)) {
    Word out{Letter::trivial_inv(v, -1)};
    out.insert(out.end(), minus.begin(), minus.end());
    return out;
  }
  Word plus = direct_path_to(fh, {v, -1});
  Word out = inverse(plus);
  out.insert(out.end(), minus.begin(), minus.end());
  return out;
}

int component(const Decoration& s, int j) {
  if (s.kind != Decoration::Kind::Pair) return 0;
  return j == 1 ? s.s1 : s.s2;
}

int weight(const Decoration& s) { return s.kind == Decoration::Kind::StarStar ? 2 : 1; }

Decoration iota(const Decoration& s) {
  if (s.kind != Decoration::Kind::Pair) return s;
  return Decoration::pair(s.s2, s.s1);
}

Decoration chi(const Decoration& s) {
  if (s.kind != Decoration::Kind::Pair) return s;
  return Decoration::pair(-s.s1, -s.s2);
}

std::vector<Decoration> decorations_for(WordType t) {
  switch (t) {
    case WordType::UU: return {Decoration::pair(1, 1)};
    case WordType::UP: return {Decoration::pair(1, -1), Decoration::pair(1, 1)};
    case WordType::PU: return {Decoration::pair(-1, 1), Decoration::pair(1, 1)};
    case WordType::PP:
      return {Decoration::pair(-1, -1), Decoration::pair(-1, 1), Decoration::pair(1, -1),
              Decoration::pair(1, 1), Decoration::star_star()};
    case WordType::B: return {Decoration::star()};
  }
  return {};
}

std::string format_decoration(const Decoration& s) {
  switch (s.kind) {
    case Decoration::Kind::Star: return "*";
    case Decoration::Kind::StarStar: return "(*,*)";
    case Decoration::Kind::Pair:
      return std::string("(") + (s.s1 > 0 ? "+" : "-") + "," + (s.s2 > 0 ? "+" : "-") + ")";
  }
  return "?";
}

Decoration parse_decoration(const std::string& text) {
  if (text == "*") return Decoration::star();
  if (text == "(*,*)") return Decoration::star_star();
  if (text.size() == 5 && text[0] == '(' && text[2] == ',' && text[4] == ')') {
    auto sg = [&](char c) {
      if (c == '+') return 1;
      if (c == '-') return -1;
      throw ParseError("decoration signs must be + or -", 1);
    };
    return Decoration::pair(sg(text[1]), sg(text[3]));
  }
  throw ParseError("malformed decoration '" + text + "'", 1);
}

DecoratedWord negative_simple(int i, Decoration s, bool inverted) {
  DecoratedWord d;
  d.negative = true;
  d.ns_vertex = i;
  d.ns_inverse = inverted;
  d.s = s;
  return d;
}

WordType negative_simple_type(const SkewedQuiver& sq, int i, bool inverted) {
  WordType t = type_of(sq, simple_string(sq, i));
  if (!inverted) return t;
  return t == WordType::UP ? WordType::PU : t;
}

bool is_valid_decorated(const SkewedQuiver& sq, const DecoratedWord& d) {
  if (d.negative) {
    if (d.ns_vertex < 0 || d.ns_vertex >= sq.base.num_vertices()) return false;
    auto ok = decorations_for(negative_simple_type(sq, d.ns_vertex, d.ns_inverse));
    return std::find(ok.begin(), ok.end(), d.s) != ok.end();
  }
  if (!is_admissible(sq, d.x)) return false;
  auto ok = decorations_for(type_of(sq, d.x));
  return std::find(ok.begin(), ok.end(), d.s) != ok.end();
}

namespace {

int decorated_rank(const DecoratedWord& d) { return d.negative ? 0 : 1; }

}  // namespace

bool decorated_less(const DecoratedWord& a, const DecoratedWord& b) {
  if (decorated_rank(a) != decorated_rank(b)) return decorated_rank(a) < decorated_rank(b);
  if (a.negative) {
    if (a.ns_vertex != b.ns_vertex) return a.ns_vertex < b.ns_vertex;
    if (a.ns_inverse != b.ns_inverse) return !a.ns_inverse;
    return a.s < b.s;
  }
  if (a.x != b.x) return word_less(a.x, b.x);
  return a.s < b.s;
}

DecoratedWord canonical_class(const SkewedQuiver& sq, const DecoratedWord& d) {
  if (d.negative) {
    if (!d.ns_inverse) return d;
    return negative_simple(d.ns_vertex, iota(d.s), false);
  }
  DecoratedWord a = d, b = d;
  b.x = inverse(d.x);
  b.s = iota(d.s);
  if (type_of(sq, d.x) == WordType::B) {
    a.x = rotation_key(a.x);
    b.x = rotation_key(b.x);
  }
  return decorated_less(b, a) ? b : a;
}

std::string format_decorated(const SkewedQuiver& sq, const DecoratedWord& d) {
  std::string body;
  if (d.negative) {
    body = "-s(" + sq.base.vertex(d.ns_vertex).id + ")" + (d.ns_inverse ? "^-1" : "");
  } else {
    body = format_word(sq.hat, d.x);
  }
  return body + " | " + format_decoration(d.s);
}

DecoratedWord parse_decorated(const SkewedQuiver& sq, const std::string& text) {
  auto bar = text.find(" | ");
  if (bar == std::string::npos) throw ParseError("expected 'word | decoration'", 1);
  std::string body = text.substr(0, bar);
  Decoration s;
  try {
    s = parse_decoration(text.substr(bar + 3));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), static_cast<int>(bar) + 4);
  }
  DecoratedWord d;
  if (body.size() > 3 && body.compare(0, 3, "-s(") == 0) {
    bool inv = body.size() > 3 && body.size() >= 4 && body.compare(body.size() - 3, 3, "^-1") == 0;
    std::string core = inv ? body.substr(0, body.size() - 3) : body;
    if (core.back() != ')') throw ParseError("malformed negative simple", 1);
    std::string vid = core.substr(3, core.size() - 4);
    auto v = sq.base.find_vertex(vid);
    if (!v) throw ParseError("unknown vertex '" + vid + "'", 4);
    d = negative_simple(*v, s, inv);
  } else {
    d.x = parse_word(sq.hat, body);
    d.s = s;
  }
  if (!is_valid_decorated(sq, d))
    throw ParseError("decorated word is not admissible or its decoration is not allowed", 1);
  return d;
}

GabrielVertex q_tilde(const SkewedQuiver& sq, const DecoratedWord& d) {
  DecoratedWord c = canonical_class(sq, d);
  int i = c.ns_vertex;
  if (!sq.base.is_special_vertex(i)) return {i, GabrielTag::Ordinary};
  return {i, c.s.s2 > 0 ? GabrielTag::Plus : GabrielTag::Minus};
}

std::vector<DecoratedWord> enumerate_decorated_classes(const SkewedQuiver& sq, int max_len) {
  std::vector<DecoratedWord> out;
  for (int i = 0; i < sq.base.num_vertices(); ++i)
    for (auto s : decorations_for(negative_simple_type(sq, i, false)))
      out.push_back(negative_simple(i, s, false));
  auto adm = enumerate_admissible(sq, max_len);
  std::set<std::pair<Word, Decoration>> seen;
  auto add = [&](const Word& x) {
    for (auto s : decorations_for(type_of(sq, x))) {
      DecoratedWord d;
      d.x = x;
      d.s = s;
      DecoratedWord c = canonical_class(sq, d);
      if (seen.insert({c.x, c.s}).second) out.push_back(c);
    }
  };
  for (const auto& x : adm.strings) add(x);
  for (const auto& b : adm.bands) add(b);
  std::stable_sort(out.begin(), out.end(), decorated_less);
  return out;
}

}  // namespace taulam
