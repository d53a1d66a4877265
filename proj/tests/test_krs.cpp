#include <random>

#include "doctest.h"
#include "taulam/krs.hpp"
#include "taulam/suites.hpp"

using namespace taulam;

namespace {

// a and b cross twice; c is orthogonal to both.
KRSMonoid small() {
  return KRSMonoid({"a", "b", "c"}, [](const std::string& x, const std::string& y) {
    return (x == "a" && y == "b") || (x == "b" && y == "a") ? 2 : 0;
  });
}

std::vector<int> g_of(const std::string& c) {
  if (c == "a") return {1, 0};
  if (c == "b") return {0, 1};
  return {-1, 1};
}

}  // namespace

TEST_CASE("pairing") {
  auto m = small();
  auto a = KRSElement::delta("a"), b = KRSElement::delta("b");
  CHECK(m.pairing(KRSElement::zero(), a) == 0);
  CHECK(m.pairing(a, b) == 2);
  CHECK(m.pairing(KRSElement::delta("a", 2), KRSElement::delta("b", 3)) == 12);
  CHECK(m.pairing(b, a) == m.pairing(a, b));
}

TEST_CASE("direct sums") {
  auto m = small();
  auto a = KRSElement::delta("a"), c = KRSElement::delta("c");
  CHECK(m.direct_sum(a, a) == KRSElement::delta("a", 2));
  CHECK(m.direct_sum(a, KRSElement::zero()) == a);
  CHECK(m.direct_sum(a, c) == m.direct_sum(c, a));
  CHECK_THROWS_AS(m.direct_sum(a, KRSElement::delta("b")), KRSError);
  CHECK(m.is_element(m.direct_sum(a, c)));
  KRSElement bad;
  bad.mult = {{"a", 1}, {"b", 1}};
  CHECK_FALSE(m.is_element(bad));
  CHECK_FALSE(m.is_element(KRSElement::delta("z")));
}

TEST_CASE("indecomposables and framing") {
  auto m = small();
  auto f = m.direct_sum(KRSElement::delta("a", 2), KRSElement::delta("c"));
  auto parts = m.indecomposables(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair<std::string, int>{"a", 2});
  CHECK(parts[1] == std::pair<std::string, int>{"c", 1});
  CHECK(m.is_indecomposable(KRSElement::delta("c")));
  CHECK_FALSE(m.is_indecomposable(f));
  CHECK(count_decompositions(m, f) == 1);
  CHECK(m.framing_value(f, g_of, 2) == std::vector<int>{1, 1});
  auto h = KRSElement::delta("a");
  auto k = KRSElement::delta("c", 3);
  auto fh = m.framing_value(h, g_of, 2), fk = m.framing_value(k, g_of, 2);
  CHECK(m.framing_value(m.direct_sum(h, k), g_of, 2) == std::vector<int>{fh[0] + fk[0], fh[1] + fk[1]});
  std::vector<KRSElement> sample = {KRSElement::zero(), h, k, f, KRSElement::delta("b")};
  CHECK(check_framing_additivity(m, sample, g_of, 2).empty());
}

TEST_CASE("axioms on random ground sets") {
  std::mt19937 rng(5);
  for (int round = 0; round < 30; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::string> ground;
    for (int i = 0; i < n; ++i) ground.push_back("c" + std::to_string(i));
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e[i][j] = e[j][i] = rng() % 3 == 0 ? 1 + static_cast<int>(rng() % 3) : 0;
    KRSMonoid m(ground, [&](const std::string& x, const std::string& y) {
      return e[std::stoi(x.substr(1))][std::stoi(y.substr(1))];
    });
    std::vector<KRSElement> sample = {KRSElement::zero()};
    for (const auto& c : ground) {
      sample.push_back(KRSElement::delta(c));
      sample.push_back(KRSElement::delta(c, 2));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (e[i][j] == 0) sample.push_back(m.direct_sum(KRSElement::delta(ground[i]), KRSElement::delta(ground[j])));
    CHECK(check_partial_monoid_axioms(m, sample).empty());
    for (const auto& x : sample) {
      CHECK(m.pairing(x, x) == 0);
      CHECK(count_decompositions(m, x) == 1);
      for (const auto& y : sample)
        for (const auto& z : sample)
          if (m.summable(y, z))
            CHECK(m.pairing(x, m.direct_sum(y, z)) == m.pairing(x, y) + m.pairing(x, z));
    }
  }
}

TEST_CASE("axiom checker reports an asymmetric pairing") {
  KRSMonoid m({"a", "b"}, [](const std::string& x, const std::string& y) { return x == "a" && y == "b" ? 1 : 0; });
  std::vector<KRSElement> sample = {KRSElement::zero(), KRSElement::delta("a"), KRSElement::delta("b")};
  CHECK_FALSE(check_partial_monoid_axioms(m, sample).empty());
}

TEST_CASE("krs suite") {
  auto r = krs_suite(20240601, 100);
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.passed);
    CHECK(c.checked > 0);
  }
}
