#include "taulam/laminations.hpp"

#include <algorithm>
#include <set>

namespace taulam {

LaminationBase::LaminationBase(const Triangulation& t)
    : triangulation(t),
      surface_quiver(quiver_of_triangulation(t)),
      fq(surface_quiver.fringing),
      seed(seed_of_triangulation(t)),
      arcs(surface_quiver.arc_of_gabriel) {}

LaminationSpace::LaminationSpace(const LaminationBase& base, int max_len) : base_(&base) {
  if (max_len < 2) throw LaminationError("max_len must be at least 2");
  for (const auto& d : enumerate_decorated_classes(base.fq.base, max_len))
    if (is_tau_generic(base.fq, d)) classes_.push_back(d);
  for (const auto& d : classes_) keys_.push_back(format_decorated(base.fq.base, d));
  for (size_t i = 0; i < keys_.size(); ++i) pos_[keys_[i]] = static_cast<int>(i);
  size_t n = classes_.size();
  e_.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) e_[i][j] = e_Q(base.fq, classes_[i], classes_[j]);
  for (const auto& d : classes_) g_.push_back(g_Q(base.fq, d));
  monoid_.emplace(keys_, [this](const std::string& a, const std::string& b) {
    return e_[pos_.at(a)][pos_.at(b)];
  });
}

int LaminationSpace::find(const std::string& key) const {
  auto it = pos_.find(key);
  return it == pos_.end() ? -1 : it->second;
}

std::string LaminationSpace::key_of(const DecoratedWord& d) const {
  return format_decorated(base_->fq.base, canonical_class(base_->fq.base, d));
}

const DecoratedWord& LaminationSpace::decode(const std::string& key) const {
  int i = find(key);
  if (i < 0) throw LaminationError("not a tau-generic class within the bound: '" + key + "'");
  return classes_[i];
}

bool LaminationSpace::is_lamination(const Lamination& l) const {
  for (const auto& [k, m] : l.components.mult)
    if (find(k) < 0) return false;
  return monoid_->is_element(l.components);
}

Lamination LaminationSpace::from_multiplicities(const std::map<std::string, int>& m) const {
  Lamination l;
  for (const auto& [text, mult] : m) {
    if (mult == 0) continue;
    std::string key = key_of(parse_decorated(base_->fq.base, text));
    decode(key);
    l.components.mult[key] += mult;
  }
  if (!is_lamination(l)) throw LaminationError("components are not pairwise e_Q-orthogonal");
  return l;
}

Lamination LaminationSpace::unit(const std::string& key, int m) const {
  decode(key);
  return {KRSElement::delta(key, m)};
}

Lamination LaminationSpace::arc_lamination(const std::string& arc) const {
  auto it = std::find(base_->arcs.begin(), base_->arcs.end(), arc);
  if (it == base_->arcs.end()) throw LaminationError("unknown tagged arc '" + arc + "'");
  auto gv = gabriel_vertices(base_->fq.base.base);
  const GabrielVertex& target = gv[it - base_->arcs.begin()];
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].negative && q_tilde(base_->fq.base, classes_[i]) == target) return unit(keys_[i]);
  throw LaminationError("no negative simple for arc '" + arc + "'");
}

int LaminationSpace::marked_intersection(const DecoratedWord& a, const DecoratedWord& b) const {
  return e_Q(base_->fq, a, b);
}

IntVector LaminationSpace::g_of(const std::string& key) const {
  int i = find(key);
  if (i < 0) throw LaminationError("unknown class '" + key + "'");
  return g_[i];
}

IntVector LaminationSpace::shear_at_base(const Lamination& l) const {
  return monoid_->framing_value(
      l.components, [this](const std::string& k) { return g_of(k); }, base_->arcs.size());
}

IntVector LaminationSpace::shear_at(const Lamination& l, const std::vector<int>& path) const {
  Seed s = base_->seed;
  s.rows["l"] = shear_at_base(l);
  return transport(s, path).rows.at("l");
}

bool IsomorphismReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

namespace {

void fail(CheckLine& c, const std::string& msg) {
  c.passed = false;
  if (c.failures.size() < 20) c.failures.push_back(msg);
}

void absorb(CheckLine& c, const std::vector<std::string>& bad) {
  for (const auto& b : bad) fail(c, b);
}

// Zero, every class, and orthogonal pairs (a few hundred at most).
std::vector<KRSElement> sample_elements(const LaminationSpace& sp, size_t cap) {
  const auto& m = sp.monoid();
  std::vector<KRSElement> out{KRSElement::zero()};
  for (const auto& k : sp.keys()) out.push_back(KRSElement::delta(k));
  for (const auto& k : sp.keys()) {
    if (out.size() >= cap) break;
    out.push_back(KRSElement::delta(k, 2));
  }
  const auto& ks = sp.keys();
  for (size_t i = 0; i < ks.size() && out.size() < cap; ++i)
    for (size_t j = i + 1; j < ks.size() && out.size() < cap; ++j)
      if (m.e(ks[i], ks[j]) == 0) out.push_back(m.direct_sum(KRSElement::delta(ks[i]), KRSElement::delta(ks[j])));
  return out;
}

}  // namespace

IsomorphismReport krs_isomorphism_check(const LaminationBase& base, int max_len) {
  IsomorphismReport r;
  r.max_len = max_len;
  const SkewedQuiver& sq = base.fq.base;
  auto all = enumerate_decorated_classes(sq, max_len);
  r.decorated_classes = static_cast<int>(all.size());
  LaminationSpace sp(base, max_len);
  r.tau_generic_classes = static_cast<int>(sp.classes().size());
  const auto& cs = sp.classes();

  // The partner (x^-1, s^iota) of a class, bands rotated by one step.
  auto partner = [&](const DecoratedWord& d) {
    DecoratedWord p = d;
    if (d.negative) {
      p.ns_inverse = !d.ns_inverse;
      p.s = iota(d.s);
      return p;
    }
    p.x = inverse(d.x);
    p.s = iota(d.s);
    if (type_of(sq, d.x) == WordType::B && p.x.size() > 1) p.x = rotate(p.x, 1);
    return p;
  };

  CheckLine sym{"e_Q symmetric and invariant under the class relation"};
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) {
      ++sym.checked;
      int v = sp.monoid().e(sp.keys()[i], sp.keys()[j]);
      if (v != sp.monoid().e(sp.keys()[j], sp.keys()[i]))
        fail(sym, "asymmetric at " + sp.keys()[i] + " ; " + sp.keys()[j]);
      if (v < 0) fail(sym, "negative at " + sp.keys()[i] + " ; " + sp.keys()[j]);
      if (e_Q(base.fq, partner(cs[i]), cs[j]) != v)
        fail(sym, "not invariant at " + sp.keys()[i] + " ; " + sp.keys()[j]);
    }
  r.checks.push_back(sym);

  CheckLine inj{"g_Q injective on classes"};
  std::map<IntVector, std::string> seen;
  for (const auto& k : sp.keys()) {
    ++inj.checked;
    auto [it, fresh] = seen.emplace(sp.g_of(k), k);
    if (!fresh) fail(inj, "same g-vector for " + it->second + " and " + k);
  }
  r.checks.push_back(inj);

  CheckLine units{"negative simples are the classes with a positive unit g-vector"};
  for (size_t i = 0; i < cs.size(); ++i) {
    ++units.checked;
    const auto& g = sp.g_of(sp.keys()[i]);
    bool unit = std::count(g.begin(), g.end(), 0) + 1 == static_cast<long>(g.size()) &&
                std::count(g.begin(), g.end(), 1) == 1;
    if (unit != cs[i].negative) fail(units, "mismatch at " + sp.keys()[i]);
  }
  r.checks.push_back(units);

  auto sample = sample_elements(sp, 60);
  CheckLine axioms{"KRS axioms and unique decomposition"};
  axioms.checked = static_cast<long>(sample.size());
  absorb(axioms, check_partial_monoid_axioms(sp.monoid(), sample));
  for (const auto& f : sample) {
    long n = count_decompositions(sp.monoid(), f);
    if (n != 1) fail(axioms, "element with " + std::to_string(n) + " decompositions");
  }
  r.checks.push_back(axioms);

  CheckLine frame{"shear framing additive and injective"};
  frame.checked = static_cast<long>(sample.size());
  absorb(frame, check_framing_additivity(
                    sp.monoid(), sample, [&](const std::string& k) { return sp.g_of(k); },
                    base.arcs.size()));
  std::set<IntVector> values;
  for (const auto& f : sample)
    if (!values.insert(sp.shear_at_base({f})).second) fail(frame, "framing not injective on sample");
  r.checks.push_back(frame);
  return r;
}

}  // namespace taulam
