#include "taulam/word.hpp"

#include <algorithm>
#include <functional>

namespace taulam {

Letter inverse(Letter l) {
  switch (l.kind) {
    case LetterKind::Direct: return Letter::inverse_of(l.idx);
    case LetterKind::Inverse: return Letter::direct(l.idx);
    case LetterKind::Special: return l;
    case LetterKind::Trivial: return Letter::trivial_inv(l.idx, l.sign);
    case LetterKind::TrivialInv: return Letter::trivial(l.idx, l.sign);
  }
  return l;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::optional<Slot> source(const PolarizedQuiver& q, Letter l) {
  switch (l.kind) {
    case LetterKind::Direct:
    case LetterKind::Special: return q.arrow(l.idx).from;
    case LetterKind::Inverse: return q.arrow(l.idx).to;
    case LetterKind::TrivialInv: return Slot{l.idx, l.sign};
    case LetterKind::Trivial: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Slot> target(const PolarizedQuiver& q, Letter l) {
  switch (l.kind) {
    case LetterKind::Direct:
    case LetterKind::Special: return q.arrow(l.idx).to;
    case LetterKind::Inverse: return q.arrow(l.idx).from;
    case LetterKind::Trivial: return Slot{l.idx, l.sign};
    case LetterKind::TrivialInv: return std::nullopt;
  }
  return std::nullopt;
}

bool letter_exists(const PolarizedQuiver& q, Letter l) {
  switch (l.kind) {
    case LetterKind::Direct:
    case LetterKind::Inverse:
      return l.idx >= 0 && l.idx < q.num_arrows() && !q.arrow(l.idx).special;
    case LetterKind::Special:
      return l.idx >= 0 && l.idx < q.num_arrows() && q.arrow(l.idx).special;
    case LetterKind::Trivial:
    case LetterKind::TrivialInv:
      return l.idx >= 0 && l.idx < q.num_vertices() && (l.sign == 1 || l.sign == -1) &&
             q.has_trivial({l.idx, l.sign});
  }
  return false;
}

bool composable(const PolarizedQuiver& q, Letter a, Letter b) {
  auto s = source(q, a);
  auto t = target(q, b);
  return s && t && *s == t->negated();
}

std::vector<LetterInfo> letters(const PolarizedQuiver& q) {
  std::vector<LetterInfo> out;
  auto add = [&](Letter l) { out.push_back({l, source(q, l), target(q, l), inverse(l)}); };
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (q.arrow(a).special) {
      add(Letter::special(a));
    } else {
      add(Letter::direct(a));
      add(Letter::inverse_of(a));
    }
  }
  for (int v = 0; v < q.num_vertices(); ++v)
    for (int s : {1, -1})
      if (q.has_trivial({v, s})) {
        add(Letter::trivial(v, s));
        add(Letter::trivial_inv(v, s));
      }
  return out;
}

std::optional<std::string> word_problem(const PolarizedQuiver& q, const Word& w) {
  if (w.empty()) return "empty word";
  for (size_t i = 0; i < w.size(); ++i) {
    if (!letter_exists(q, w[i])) return "letter " + std::to_string(i + 1) + " does not exist";
    if (i + 1 < w.size() && !composable(q, w[i], w[i + 1]))
      return "letters " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
             " are not composable";
  }
  return std::nullopt;
}

bool is_word(const PolarizedQuiver& q, const Word& w) { return !word_problem(q, w); }

Word concat(const PolarizedQuiver& q, const Word& w, const Word& v) {
  if (w.empty()) return v;
  if (v.empty()) return w;
  if (!composable(q, w.back(), v.front())) throw WordError("concat: words are not composable");
  Word out = w;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

int letter_rank(Letter l) {
  switch (l.kind) {
    case LetterKind::Direct: return 0;
    case LetterKind::Inverse: return 2;
    default: return 1;
  }
}

Order lex_compare(const PolarizedQuiver& q, const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    if (u[i] == v[i]) continue;
    if (target(q, u[i]) != target(q, v[i])) return Order::Incomparable;
    return letter_rank(u[i]) < letter_rank(v[i]) ? Order::Less : Order::Greater;
  }
  if (u.size() == v.size()) return Order::Equal;
  // The shorter word behaves as if continued by a trivial letter.
  bool u_longer = u.size() > v.size();
  int r = letter_rank(u_longer ? u[n] : v[n]);
  if (r == 1) return Order::Incomparable;
  bool longer_less = r == 0;
  return (longer_less == u_longer) ? Order::Less : Order::Greater;
}

bool is_string(const PolarizedQuiver& q, const Word& w) {
  return w.size() >= 2 && is_word(q, w) && w.front().kind == LetterKind::TrivialInv &&
         w.back().kind == LetterKind::Trivial;
}

bool is_band(const PolarizedQuiver& q, const Word& w) {
  if (w.empty() || !is_word(q, w)) return false;
  for (auto l : w)
    if (l.is_trivial()) return false;
  return composable(q, w.back(), w.front());
}

bool is_primitive(const Word& w) {
  size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

bool is_primitive_band(const PolarizedQuiver& q, const Word& w) {
  return is_band(q, w) && is_primitive(w);
}

bool is_symmetric_string(const PolarizedQuiver& q, const Word& w) {
  return is_string(q, w) && inverse(w) == w;
}

Word rotate(const Word& w, int k) {
  Word out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, static_cast<int>(k)));
  return out;
}

bool is_symmetric_band(const PolarizedQuiver& q, const Word& w) {
  if (!is_band(q, w)) return false;
  Word wi = inverse(w);
  for (size_t k = 0; k < w.size(); ++k)
    if (rotate(w, static_cast<int>(k)) == wi) return true;
  return false;
}

bool is_standard_symmetric(const Word& w) {
  size_t n = w.size();
  if (n < 2 || n % 2) return false;
  size_t m = n / 2;
  if (w[0].kind != LetterKind::Special || w[m].kind != LetterKind::Special) return false;
  for (size_t i = 1; i < m; ++i)
    if (w[i] != inverse(w[n - i])) return false;
  return true;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word band_class_key(const Word& w) {
  Word best = w;
  Word wi = inverse(w);
  for (size_t k = 0; k < w.size(); ++k) {
    Word r = rotate(w, static_cast<int>(k));
    if (r < best) best = r;
    Word ri = rotate(wi, static_cast<int>(k));
    if (ri < best) best = ri;
  }
  return best;
}

Word standard_form(const PolarizedQuiver& q, const Word& w) {
  if (!is_primitive_band(q, w)) throw WordError("standard_form: not a primitive band");
  if (!is_symmetric_band(q, w)) return band_class_key(w);
  std::optional<Word> best;
  for (const auto& r : rotations(w))
    if (is_standard_symmetric(r) && (!best || r < *best)) best = r;
  if (!best) throw WordError("standard_form: symmetric band without standard rotation");
  return *best;
}

std::vector<Word> enumerate_strings(const PolarizedQuiver& q, int max_len) {
  auto lets = letters(q);
  std::vector<Word> out;
  Word cur;
  std::function<void()> extend = [&]() {
    if (cur.back().kind == LetterKind::Trivial) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (const auto& li : lets) {
      if (li.letter.kind == LetterKind::TrivialInv) continue;
      if (!composable(q, cur.back(), li.letter)) continue;
      cur.push_back(li.letter);
      extend();
      cur.pop_back();
    }
  };
  for (const auto& li : lets) {
    if (li.letter.kind != LetterKind::TrivialInv) continue;
    cur = {li.letter};
    extend();
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<Word> enumerate_bands(const PolarizedQuiver& q, int max_len) {
  std::vector<Letter> lets;
  for (const auto& li : letters(q))
    if (!li.letter.is_trivial()) lets.push_back(li.letter);
  std::vector<Word> out;
  Word cur;
  std::function<void()> extend = [&]() {
    if (composable(q, cur.back(), cur.front()) && is_primitive(cur) &&
        standard_form(q, cur) == cur)
      out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (auto l : lets) {
      if (!composable(q, cur.back(), l)) continue;
      cur.push_back(l);
      extend();
      cur.pop_back();
    }
  };
  for (auto l : lets) {
    cur = {l};
    extend();
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::string format_letter(const PolarizedQuiver& q, Letter l) {
  auto triv = [&](Letter t) {
    return "1(" + q.vertex(t.idx).id + "," + (t.sign > 0 ? "+" : "-") + ")";
  };
  switch (l.kind) {
    case LetterKind::Direct: return q.arrow(l.idx).id;
    case LetterKind::Inverse: return q.arrow(l.idx).id + "^-1";
    case LetterKind::Special: return q.arrow(l.idx).id + "*";
    case LetterKind::Trivial: return triv(l);
    case LetterKind::TrivialInv: return triv(l) + "^-1";
  }
  return "?";
}

std::string format_word(const PolarizedQuiver& q, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(q, w[i]);
  }
  return out;
}

namespace {

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

Letter parse_letter(const PolarizedQuiver& q, const std::string& tok, int col) {
  std::string body = tok;
  bool inv = false;
  if (ends_with(body, "^-1")) {
    inv = true;
    body.resize(body.size() - 3);
  }
  if (body.size() >= 2 && body.compare(0, 2, "1(") == 0 && body.back() == ')') {
    std::string inner = body.substr(2, body.size() - 3);
    auto comma = inner.rfind(',');
    if (comma == std::string::npos) throw ParseError("malformed trivial letter '" + tok + "'", col);
    std::string vid = inner.substr(0, comma);
    std::string sg = inner.substr(comma + 1);
    if (sg != "+" && sg != "-") throw ParseError("trivial letter sign must be + or -", col);
    auto v = q.find_vertex(vid);
    if (!v) throw ParseError("unknown vertex '" + vid + "'", col);
    int sign = sg == "+" ? 1 : -1;
    Letter l = inv ? Letter::trivial_inv(*v, sign) : Letter::trivial(*v, sign);
    if (!letter_exists(q, l))
      throw ParseError("trivial letter '" + tok + "' does not exist at a special loop slot", col);
    return l;
  }
  if (!body.empty() && body.back() == '*') {
    if (inv) throw ParseError("special letters are self-inverse; drop '^-1'", col);
    std::string id = body.substr(0, body.size() - 1);
    auto a = q.find_arrow(id);
    if (!a) throw ParseError("unknown arrow '" + id + "'", col);
    if (!q.arrow(*a).special) throw ParseError("arrow '" + id + "' is not a special loop", col);
    return Letter::special(*a);
  }
  if (body.empty()) throw ParseError("empty letter", col);
  auto a = q.find_arrow(body);
  if (!a) throw ParseError("unknown arrow '" + body + "'", col);
  if (q.arrow(*a).special)
    throw ParseError("special loop '" + body + "' must be written '" + body + "*'", col);
  return inv ? Letter::inverse_of(*a) : Letter::direct(*a);
}

}  // namespace

Word parse_word(const PolarizedQuiver& q, const std::string& text) {
  if (text.empty()) throw ParseError("empty word", 1);
  Word w;
  std::vector<int> cols;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    int col = static_cast<int>(pos) + 1;
    if (end == pos) throw ParseError("letters must be separated by single spaces", col);
    w.push_back(parse_letter(q, text.substr(pos, end - pos), col));
    cols.push_back(col);
    if (w.size() >= 2 && !composable(q, w[w.size() - 2], w.back()))
      throw ParseError("letter does not compose with its predecessor", col);
    pos = end + 1;
    if (end == text.size()) break;
  }
  return w;
}

Word transport(const PolarizedQuiver& from, const PolarizedQuiver& to, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto l : w) {
    Letter m = l;
    if (l.is_trivial()) {
      auto v = to.find_vertex(from.vertex(l.idx).id);
      if (!v) throw WordError("transport: vertex '" + from.vertex(l.idx).id + "' missing");
      m.idx = *v;
    } else {
      auto a = to.find_arrow(from.arrow(l.idx).id);
      if (!a) throw WordError("transport: arrow '" + from.arrow(l.idx).id + "' missing");
      m.idx = *a;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace taulam
