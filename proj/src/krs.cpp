#include "taulam/krs.hpp"

#include <algorithm>
#include <sstream>

namespace taulam {

KRSElement KRSElement::delta(const std::string& c, int m) {
  KRSElement f;
  if (m > 0) f.mult[c] = m;
  return f;
}

int KRSElement::total() const {
  int t = 0;
  for (const auto& [c, m] : mult) t += m;
  return t;
}

KRSMonoid::KRSMonoid(std::vector<std::string> ground, Pairing e)
    : ground_(std::move(ground)), e_(std::move(e)) {
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
}

bool KRSMonoid::in_ground(const std::string& c) const {
  return std::binary_search(ground_.begin(), ground_.end(), c);
}

bool KRSMonoid::is_element(const KRSElement& f) const {
  for (const auto& [c, m] : f.mult) {
    if (m <= 0 || !in_ground(c)) return false;
    for (const auto& [d, n] : f.mult)
      if (e_(c, d) != 0) return false;
  }
  return true;
}

int KRSMonoid::pairing(const KRSElement& f, const KRSElement& g) const {
  int s = 0;
  for (const auto& [c, m] : f.mult)
    for (const auto& [d, n] : g.mult) s += m * n * e_(c, d);
  return s;
}

KRSElement KRSMonoid::direct_sum(const KRSElement& f, const KRSElement& g) const {
  if (!summable(f, g)) throw KRSError("direct sum of non-orthogonal elements");
  KRSElement h = f;
  for (const auto& [d, n] : g.mult) h.mult[d] += n;
  return h;
}

std::vector<std::pair<std::string, int>> KRSMonoid::indecomposables(const KRSElement& f) const {
  return {f.mult.begin(), f.mult.end()};
}

bool KRSMonoid::is_indecomposable(const KRSElement& f) const { return f.total() == 1; }

std::vector<int> KRSMonoid::framing_value(
    const KRSElement& f, const std::function<std::vector<int>(const std::string&)>& g,
    size_t dim) const {
  std::vector<int> out(dim, 0);
  for (const auto& [c, m] : f.mult) {
    auto v = g(c);
    for (size_t k = 0; k < dim; ++k) out[k] += m * v.at(k);
  }
  return out;
}

namespace {

std::string show(const KRSElement& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [c, m] : f.mult) {
    os << (first ? "" : ", ") << c << ":" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

// All sub-elements g <= f, including 0 and f.
std::vector<KRSElement> sub_elements(const KRSElement& f) {
  std::vector<KRSElement> out{KRSElement{}};
  for (const auto& [c, m] : f.mult) {
    std::vector<KRSElement> next;
    for (const auto& g : out)
      for (int k = 0; k <= m; ++k) {
        KRSElement h = g;
        if (k > 0) h.mult[c] = k;
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

KRSElement minus(const KRSElement& f, const KRSElement& g) {
  KRSElement h = f;
  for (const auto& [c, m] : g.mult) {
    h.mult[c] -= m;
    if (h.mult[c] == 0) h.mult.erase(c);
  }
  return h;
}

}  // namespace

std::vector<std::string> check_partial_monoid_axioms(const KRSMonoid& m,
                                                     const std::vector<KRSElement>& sample) {
  std::vector<std::string> bad;
  const KRSElement zero;
  for (const auto& x : sample) {
    if (!m.is_element(x)) bad.push_back("not an element: " + show(x));
    if (m.pairing(x, x) != 0) bad.push_back("not tame at " + show(x));
    if (m.pairing(zero, x) != 0 || m.direct_sum(zero, x) != x)
      bad.push_back("(0) fails at " + show(x));
  }
  // Uniqueness of 0 among the sample.
  for (const auto& z : sample) {
    if (z == zero) continue;
    bool neutral = std::all_of(sample.begin(), sample.end(), [&](const KRSElement& x) {
      return m.pairing(z, x) == 0 && m.direct_sum(z, x) == x;
    });
    if (neutral) bad.push_back("(0) second neutral element " + show(z));
  }
  for (const auto& x : sample)
    for (const auto& y : sample) {
      if (m.pairing(x, y) != m.pairing(y, x)) bad.push_back("e not symmetric");
      if (!m.summable(x, y)) continue;
      KRSElement xy = m.direct_sum(x, y);
      if (!m.summable(y, x) || xy != m.direct_sum(y, x)) {
        bad.push_back("(s) fails at " + show(x) + ", " + show(y));
        continue;
      }
      for (const auto& z : sample) {
        // (d) with the roles y, z of the axiom played by x, y here.
        if (m.pairing(z, xy) != m.pairing(z, x) + m.pairing(z, y))
          bad.push_back("(d) fails at " + show(z) + "; " + show(x) + ", " + show(y));
        bool left = m.summable(xy, z);
        bool right = m.summable(y, z) && m.summable(x, m.direct_sum(y, z));
        if (left != right) {
          bad.push_back("(a) definedness differs at " + show(x) + ", " + show(y) + ", " + show(z));
        } else if (left && m.direct_sum(xy, z) != m.direct_sum(x, m.direct_sum(y, z))) {
          bad.push_back("(a) fails at " + show(x) + ", " + show(y) + ", " + show(z));
        }
      }
    }
  return bad;
}

long count_decompositions(const KRSMonoid& m, const KRSElement& f) {
  auto subs = sub_elements(f);
  // Indecomposable by definition: nonzero, and every split has a zero part.
  std::vector<KRSElement> ind;
  for (const auto& y : subs) {
    if (y.mult.empty()) continue;
    bool split = false;
    for (const auto& a : sub_elements(y)) {
      KRSElement b = minus(y, a);
      if (a.mult.empty() || b.mult.empty()) continue;
      if (m.summable(a, b)) split = true;
    }
    if (!split) ind.push_back(y);
  }
  std::sort(ind.begin(), ind.end());
  // Multisets of indecomposables summing to f, counted with a non-decreasing index.
  std::function<long(const KRSElement&, size_t)> count = [&](const KRSElement& rest,
                                                             size_t from) -> long {
    if (rest.mult.empty()) return 1;
    long total = 0;
    for (size_t k = from; k < ind.size(); ++k) {
      const auto& y = ind[k];
      bool fits = std::all_of(y.mult.begin(), y.mult.end(), [&](const auto& cm) {
        auto it = rest.mult.find(cm.first);
        return it != rest.mult.end() && it->second >= cm.second;
      });
      if (!fits) continue;
      total += count(minus(rest, y), k);
    }
    return total;
  };
  return count(f, 0);
}

std::vector<std::string> check_framing_additivity(
    const KRSMonoid& m, const std::vector<KRSElement>& sample,
    const std::function<std::vector<int>(const std::string&)>& g, size_t dim) {
  std::vector<std::string> bad;
  for (const auto& x : sample)
    for (const auto& y : sample) {
      if (!m.summable(x, y)) continue;
      auto lhs = m.framing_value(m.direct_sum(x, y), g, dim);
      auto gx = m.framing_value(x, g, dim), gy = m.framing_value(y, g, dim);
      for (size_t k = 0; k < dim; ++k) gx[k] += gy[k];
      if (lhs != gx) bad.push_back("framing not additive at " + show(x) + ", " + show(y));
    }
  return bad;
}

}  // namespace taulam
