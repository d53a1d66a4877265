#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "taulam/admissible.hpp"

using namespace taulam;

namespace {

SkewedQuiver qd3() { return SkewedQuiver(fixtures::quiver_fixture("qd3").base); }

bool same_up_to_inverse(const Word& a, const Word& b) { return a == b || a == inverse(b); }

}  // namespace

TEST_CASE("projection F") {
  auto sq = qd3();
  auto sp = parse_word(sq.hat, "1(p,-)^-1 1(p,+)");
  CHECK(format_word(sq.base, project_F(sq, sp)) == "eps* 1(p,+)");
  for (const auto& w : enumerate_strings(sq.hat, 7))
    CHECK(project_F(sq, inverse(w)) == inverse(project_F(sq, w)));
  auto a3 = SkewedQuiver(fixtures::quiver_fixture("a3").base);
  for (const auto& w : enumerate_strings(a3.hat, 7)) CHECK(project_F(a3, w) == w);
}

TEST_CASE("types of simple strings and inverses") {
  auto sq = qd3();
  int one = sq.base.vertex_index("1"), p = sq.base.vertex_index("p");
  CHECK(type_of(sq, simple_string(sq, one)) == WordType::UU);
  CHECK(type_of(sq, simple_string(sq, p)) == WordType::UP);
  CHECK(type_of(sq, inverse(simple_string(sq, p))) == WordType::PU);
  auto ann = SkewedQuiver(fixtures::surface_fringing("annulus").base);
  for (const auto& b : enumerate_bands(ann.hat, 6)) CHECK(type_of(ann, b) == WordType::B);
}

TEST_CASE("completion of simple strings gives the symmetric simple strings") {
  auto sq = qd3();
  CHECK(same_up_to_inverse(completion(sq, simple_string(sq, sq.base.vertex_index("1"))),
                           parse_word(sq.base, "1(1,+)^-1 1(1,-)")));
  CHECK(completion(sq, simple_string(sq, sq.base.vertex_index("p"))) ==
        parse_word(sq.base, "1(p,+)^-1 eps* 1(p,+)"));
  auto two = SkewedQuiver(fixtures::surface_fringing("digon2").base);
  for (int i = 0; i < two.base.num_vertices(); ++i) {
    auto c = completion(two, simple_string(two, i));
    CHECK(is_string(two.base, c));
    CHECK(is_symmetric_string(two.base, c) == two.base.is_special_vertex(i));
  }
}

TEST_CASE("type (p,p) strings complete to bands") {
  auto sq = SkewedQuiver(fixtures::surface_fringing("digon2").base);
  int seen = 0;
  for (const auto& x : enumerate_strings(sq.hat, 7)) {
    if (type_of(sq, x) != WordType::PP) continue;
    ++seen;
    auto c = completion(sq, x);
    CHECK(is_band(sq.base, c));
    if (!is_primitive(c)) CHECK_FALSE(is_admissible(sq, x));
  }
  CHECK(seen > 0);
}

TEST_CASE("A(w) on simple strings") {
  auto sq = qd3();
  CHECK(format_word(sq.hat, build_A(sq, parse_word(sq.base, "1(1,+)^-1 1(1,-)"))) ==
        "1(1,+)^-1 1(1,-)");
  CHECK(format_word(sq.hat, build_A(sq, parse_word(sq.base, "1(p,+)^-1 eps* 1(p,+)"))) ==
        "1(p,+)^-1 1(p,-)");
  CHECK(format_word(sq.hat, build_A(sq, parse_word(sq.base, "1(1,-)^-1 a eps* a^-1 1(1,-)"))) ==
        "1(1,-)^-1 a 1(p,-)");
  for (const auto& w : enumerate_strings(sq.base, 7)) {
    auto x = build_A(sq, w);
    CHECK(is_admissible(sq, x));
    CHECK(completion(sq, x) == w);
  }
}

TEST_CASE("admissibility") {
  for (const char* name : {"digon2", "annulus", "pentagon"}) {
    auto sq = SkewedQuiver(fixtures::surface_fringing(name).base);
    for (int i = 0; i < sq.base.num_vertices(); ++i) {
      CHECK(is_admissible(sq, simple_string(sq, i)));
      CHECK(is_admissible(sq, inverse(simple_string(sq, i))));
    }
    for (const auto& x : enumerate_strings(sq.hat, 8)) {
      CHECK(is_admissible(sq, x) == is_admissible(sq, inverse(x)));
      if (is_admissible(sq, x)) CHECK(is_weakly_admissible(sq, x));
    }
  }
}

TEST_CASE("completion fibers") {
  auto sq = SkewedQuiver(fixtures::surface_fringing("digon2").base);
  std::map<Word, int> fiber;
  auto adm = enumerate_admissible(sq, 9);
  for (const auto& x : adm.strings)
    if (type_of(sq, x) != WordType::PP) ++fiber[completion(sq, x)];
  REQUIRE_FALSE(fiber.empty());
  for (const auto& [w, n] : fiber) {
    CHECK(n <= 2);
    CHECK((n == 2) == is_symmetric_string(sq.base, w));
  }
}

TEST_CASE("tau_f") {
  auto fq = FringedQuiver(fixtures::quiver_fixture("qd3"));
  auto adm = enumerate_admissible(fq.base, 7);
  std::set<Word> images;
  for (const auto& x : adm.strings) {
    auto y = tau_f(fq, x);
    CHECK(is_admissible(fq.fringed, y));
    if (type_of(fq.base, x) == WordType::PP) CHECK(y == transport(fq.base.hat, fq.fringed.hat, x));
    images.insert(y);
  }
  CHECK(images.size() == adm.strings.size());

  auto ann = FringedQuiver(fixtures::surface_fringing("annulus"));
  auto bands = enumerate_admissible(ann.base, 6).bands;
  REQUIRE_FALSE(bands.empty());
  for (const auto& b : bands) CHECK(tau_f(ann, b) == transport(ann.base.hat, ann.fringed.hat, b));
}

TEST_CASE("decorations") {
  CHECK(decorations_for(WordType::UU).size() == 1);
  CHECK(decorations_for(WordType::PP).size() == 5);
  CHECK(weight(Decoration::star_star()) == 2);
  CHECK(weight(Decoration::pair(1, -1)) == 1);
  for (auto t : {WordType::UU, WordType::UP, WordType::PU, WordType::PP, WordType::B})
    for (const auto& s : decorations_for(t)) {
      CHECK(iota(iota(s)) == s);
      CHECK(parse_decoration(format_decoration(s)) == s);
    }
  CHECK(iota(Decoration::pair(1, -1)) == Decoration::pair(-1, 1));
}

TEST_CASE("canonical classes") {
  auto sq = SkewedQuiver(fixtures::surface_fringing("digon2").base);
  auto classes = enumerate_decorated_classes(sq, 7);
  REQUIRE_FALSE(classes.empty());
  for (const auto& d : classes) {
    CHECK(canonical_class(sq, d) == d);
    CHECK(is_valid_decorated(sq, d));
    CHECK(parse_decorated(sq, format_decorated(sq, d)) == d);
    if (d.negative) continue;
    DecoratedWord e = d;
    e.x = inverse(d.x);
    e.s = iota(d.s);
    CHECK(canonical_class(sq, e) == d);
  }
  auto q = qd3();
  auto x = parse_word(q.hat, "1(1,-)^-1 a 1(p,-)");
  DecoratedWord a{false, -1, false, x, Decoration::pair(1, -1)};
  DecoratedWord b{false, -1, false, inverse(x), Decoration::pair(-1, 1)};
  CHECK(canonical_class(q, a) == canonical_class(q, b));
  CHECK(canonical_class(q, canonical_class(q, b)) == canonical_class(q, b));
}
