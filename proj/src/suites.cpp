#include "taulam/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace taulam {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

Json report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"failures", c.failures}});
  return j;
}

namespace {

void fail(CheckLine& c, const std::string& msg) {
  c.passed = false;
  if (c.failures.size() < 20) c.failures.push_back(msg);
}

// Elements supported on pairwise orthogonal subsets, multiplicities 1..max_mult.
std::vector<KRSElement> orthogonal_elements(const KRSMonoid& m, int max_mult, size_t max_support) {
  const auto& g = m.ground();
  std::vector<KRSElement> out{KRSElement::zero()};
  std::vector<size_t> pick;
  std::function<void(size_t)> rec = [&](size_t from) {
    for (size_t i = from; i < g.size(); ++i) {
      bool ok = std::all_of(pick.begin(), pick.end(), [&](size_t p) { return m.e(g[p], g[i]) == 0; });
      if (!ok || m.e(g[i], g[i]) != 0) continue;
      pick.push_back(i);
      // Every multiplicity pattern over the picked support.
      std::vector<int> mult(pick.size(), 1);
      while (true) {
        KRSElement f;
        for (size_t k = 0; k < pick.size(); ++k) f.mult[g[pick[k]]] = mult[k];
        out.push_back(f);
        size_t k = 0;
        while (k < mult.size() && mult[k] == max_mult) mult[k++] = 1;
        if (k == mult.size()) break;
        ++mult[k];
      }
      if (pick.size() < max_support) rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

SuiteReport krs_suite(std::uint64_t seed, int ground_sets) {
  SuiteReport r{"krs", {}};
  CheckLine ax("partial monoid axioms (s), (0), (d), (a)");
  CheckLine uniq("unique decomposition into indecomposables");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < ground_sets; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::string> ground;
    for (int i = 0; i < n; ++i) ground.push_back("c" + std::to_string(i));
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // Mostly orthogonal so that sums exist.
        int v = rng() % 3 == 0 ? 1 + static_cast<int>(rng() % 3) : 0;
        e[i][j] = e[j][i] = v;
      }
    KRSMonoid m(ground, [e](const std::string& a, const std::string& b) {
      return e[std::stoi(a.substr(1))][std::stoi(b.substr(1))];
    });
    auto small = orthogonal_elements(m, 2, 2);
    if (small.size() > 40) small.resize(40);
    ++ax.checked;
    for (const auto& b : check_partial_monoid_axioms(m, small))
      fail(ax, "ground set " + std::to_string(t) + ": " + b);
    for (const auto& f : orthogonal_elements(m, 2, 4)) {
      ++uniq.checked;
      long c = count_decompositions(m, f);
      // Indecomposables by definition are exactly the unit elements.
      bool units_ok = true;
      for (const auto& [k, mult] : f.mult) units_ok = units_ok && m.is_indecomposable(KRSElement::delta(k));
      if (c != 1 || !units_ok)
        fail(uniq, "ground set " + std::to_string(t) + ": " + std::to_string(c) + " decompositions");
    }
  }
  r.checks = {ax, uniq};
  return r;
}

SuiteReport hansper_suite(const SkewedQuiver& sq, int max_len) {
  SuiteReport r{"hansper", {}};
  CheckLine fwd("A(w) admissible with completion w");
  CheckLine back("every admissible word is A(w) or its inverse");
  const auto& q = sq.base;
  std::vector<Word> ws = enumerate_strings(q, max_len);
  auto bands = enumerate_bands(q, max_len);
  ws.insert(ws.end(), bands.begin(), bands.end());
  for (const auto& w : ws) {
    ++fwd.checked;
    std::string what = format_word(q, w);
    try {
      Word a = build_A(sq, w);
      bool band = type_of(sq, a) == WordType::B;
      if (!is_admissible(sq, a)) fail(fwd, "not admissible: A(" + what + ")");
      Word c = completion(sq, a);
      if (band ? standard_form(q, c) != w : c != w) fail(fwd, "completion differs for " + what);
    } catch (const std::exception& e) {
      fail(fwd, what + ": " + e.what());
    }
  }
  auto adm = enumerate_admissible(sq, max_len);
  std::vector<Word> xs = adm.strings;
  xs.insert(xs.end(), adm.bands.begin(), adm.bands.end());
  for (const auto& x : xs) {
    ++back.checked;
    std::string what = format_word(sq.hat, x);
    try {
      bool band = type_of(sq, x) == WordType::B;
      Word w = completion(sq, x);
      if (band) w = standard_form(q, w);
      Word a = build_A(sq, w);
      bool hit = band ? rotation_key(x) == rotation_key(a) || rotation_key(x) == rotation_key(inverse(a))
                      : x == a || x == inverse(a);
      if (!hit) fail(back, "no preimage for " + what);
    } catch (const std::exception& e) {
      fail(back, what + ": " + e.what());
    }
  }
  r.checks = {fwd, back};
  return r;
}

int rank2_period(int b21) {
  Seed s;
  s.index = {"1", "2"};
  s.beta = {{0, b21 == 0 ? 0 : 1}, {b21, 0}};
  s.rows = {{"e1", {1, 0}}, {"e2", {0, 1}}};
  return alternating_period(s);
}

SuiteReport mutation_suite() {
  SuiteReport r{"mutation", {}};
  CheckLine inv("matrix mutation is an involution");
  CheckLine dbl("seed double mutation is the identity");
  CheckLine forms("gamma_k agrees with the row rule");
  CheckLine per("rank-2 periods 4, 5, 6, 8");

  std::vector<IntMatrix> grid;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      if ((a > 0 && b < 0) || (a < 0 && b > 0) || (a == 0 && b == 0)) grid.push_back({{0, a}, {b, 0}});
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) grid.push_back({{0, a, b}, {-a, 0, c}, {-b, -c, 0}});

  for (const auto& beta : grid) {
    int n = static_cast<int>(beta.size());
    IntMatrix bt(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) bt[i][j] = beta[j][i];
    std::vector<int> row(n, -5);
    while (true) {
      for (int k = 0; k < n; ++k) {
        Seed s{std::vector<std::string>(n, ""), beta, {{"r", row}}};
        for (int i = 0; i < n; ++i) s.index[i] = std::to_string(i + 1);
        ++dbl.checked;
        if (mutate_seed(mutate_seed(s, k), k) != s) fail(dbl, "seed " + Json(beta).dump());
        ++forms.checked;
        if (gamma_k(bt, k, row) != mutate_row(beta, k, row)) fail(forms, "row " + Json(row).dump());
      }
      int i = 0;
      while (i < n && row[i] == 5) row[i++] = -5;
      if (i == n) break;
      ++row[i];
    }
    for (int k = 0; k < n; ++k) {
      ++inv.checked;
      if (mutate_matrix(mutate_matrix(beta, k), k) != beta) fail(inv, "matrix " + Json(beta).dump());
    }
  }
  const std::vector<std::pair<int, int>> expected{{0, 4}, {-1, 5}, {-2, 6}, {-3, 8}};
  for (auto [b21, p] : expected) {
    ++per.checked;
    int got = rank2_period(b21);
    if (got != p)
      fail(per, "b12*b21 = " + std::to_string(b21) + ": period " + std::to_string(got) + ", expected " +
                    std::to_string(p));
  }
  r.checks = {inv, dbl, forms, per};
  return r;
}

SuiteReport shear_suite(const LaminationBase& base, int max_len) {
  SuiteReport r{"shear", {}};
  LaminationSpace sp(base, max_len);
  size_t n = base.arcs.size();

  CheckLine units("arc laminations have unit shear coordinates");
  for (size_t i = 0; i < n; ++i) {
    ++units.checked;
    IntVector e(n, 0);
    e[i] = 1;
    if (sp.shear_at_base(sp.arc_lamination(base.arcs[i])) != e) fail(units, "arc " + base.arcs[i]);
  }
  r.checks.push_back(units);

  // Written out from the recursion with beta = -B_FST.
  const IntMatrix& beta = base.seed.beta;
  auto recursion = [&](const IntVector& sh, size_t k) {
    IntVector out = sh;
    for (size_t g = 0; g < n; ++g) {
      if (g == k) {
        out[g] = -sh[g];
        continue;
      }
      int t = sh[k] * beta[k][g];
      out[g] = sh[g] + (sh[k] > 0 ? 1 : sh[k] < 0 ? -1 : 0) * std::max(t, 0);
    }
    return out;
  };
  CheckLine flips("single flips follow the recursion, double flips are trivial");
  std::vector<Lamination> lams{Lamination{}};
  for (const auto& k : sp.keys()) lams.push_back(sp.unit(k));
  for (size_t i = 0; i < sp.keys().size(); ++i)
    for (size_t j = i + 1; j < sp.keys().size(); ++j)
      if (sp.monoid().e(sp.keys()[i], sp.keys()[j]) == 0)
        lams.push_back({sp.monoid().direct_sum(KRSElement::delta(sp.keys()[i]),
                                               KRSElement::delta(sp.keys()[j]))});
  for (const auto& l : lams) {
    IntVector sh = sp.shear_at_base(l);
    for (size_t k = 0; k < n; ++k) {
      ++flips.checked;
      int ki = static_cast<int>(k);
      if (sp.shear_at(l, {ki}) != recursion(sh, k)) fail(flips, "flip " + std::to_string(k + 1));
      if (sp.shear_at(l, {ki, ki}) != sh) fail(flips, "double flip " + std::to_string(k + 1));
    }
  }
  r.checks.push_back(flips);
  auto iso = krs_isomorphism_check(base, max_len);
  r.checks.insert(r.checks.end(), iso.checks.begin(), iso.checks.end());
  return r;
}

}  // namespace taulam
