#include "doctest.h"

#include <algorithm>

#include "torelli/congruence.hpp"
#include "torelli/mcg.hpp"
#include "torelli/verify.hpp"

using namespace torelli;

namespace {

const Convention kConv{};  // pinned by the convention search: direction -1

Word Ys(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::Ys, {i, j}), std::move(e));
}

Word Gw(int j, Exp e = 1) { return Word::letter(GeneratorSymbol(Family::G, {j}), std::move(e)); }

Word Tw(std::vector<int> idx, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::T, std::move(idx)), std::move(e));
}

std::vector<mpz_class> vec(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("homology action of slides") {
  const int g = 4;
  CHECK(homology_action(Ys(1, 2).pow(2), g, kConv).is_identity());
  CHECK(homology_action(Ys(1, 2), g, kConv).overline() ==
        generator_matrix(GeneratorSymbol(Family::Ym, {1, 2}), g - 1).matrix());

  const auto a41 = homology_action(Ys(4, 1), g, kConv);
  CHECK(a41.images()[3] == HomologyClass::basis(g, 4).negated());
  CHECK(a41.images()[0] == HomologyClass::canonicalize(vec({1, 0, 0, 2})));

  CHECK_THROWS_WITH_AS(homology_action(Word::letter(GeneratorSymbol(Family::U, {1, 2})), g, kConv),
                       doctest::Contains("unsupported symbol"), std::invalid_argument);
  CHECK_THROWS_AS(homology_action(Gw(1), g, kConv), std::invalid_argument);
  CHECK_THROWS_AS(homology_action(Ys(1, 5), g, kConv), std::invalid_argument);
}

TEST_CASE("slide squares and f-compatibility") {
  for (int g = 2; g <= 8; ++g)
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j) {
        if (i == j) continue;
        CHECK(homology_action(Ys(i, j).pow(2), g, kConv).is_identity());
        if (i <= g - 1)
          CHECK(homology_action(Ys(i, j), g, kConv).overline() ==
                generator_matrix(GeneratorSymbol(Family::Ym, {i, j}), g - 1).matrix());
      }
}

TEST_CASE("twists and primed twists act alike") {
  const int g = 5;
  CHECK(homology_action(Tw({1, 3}), g, kConv) ==
        homology_action(Word::letter(GeneratorSymbol(Family::Tp, {1, 3})), g, kConv));
}

TEST_CASE("crosscap pushing map") {
  const int g = 4;
  CHECK(crosscap_push(1, (Gw(3) * Gw(2) * Gw(1)).pow(2), g) ==
        (Ys(1, 2) * Ys(1, 3) * Ys(1, 4)).pow(2));

  CHECK(crosscap_push(5, Gw(1, -1) * Gw(2, -1) * Gw(3, -1) * Gw(4, -1), 5) ==
        Ys(5, 4, -1) * Ys(5, 3, -1) * Ys(5, 2, -1) * Ys(5, 1, -1));

  // anti-homomorphism on an already reduced word
  CHECK(crosscap_push(2, Gw(1).pow(2) * Gw(2) * Gw(2, -1), g) == Ys(2, 1).pow(2));

  verify::SeededRng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Letter> lu, lv;
    for (int q = 0, len = 1 + rng.below(6); q < len; ++q)
      lu.push_back(Letter{GeneratorSymbol(Family::G, {1 + rng.below(g - 1)}), rng.below(5) - 2});
    for (int q = 0, len = 1 + rng.below(6); q < len; ++q)
      lv.push_back(Letter{GeneratorSymbol(Family::G, {1 + rng.below(g - 1)}), rng.below(5) - 2});
    const Word u{std::move(lu)}, v{std::move(lv)};
    const int i = 1 + rng.below(g);
    CHECK(crosscap_push(i, u * v, g) == crosscap_push(i, v, g) * crosscap_push(i, u, g));
  }

  CHECK_THROWS_AS(crosscap_push(5, Gw(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(crosscap_push(1, Gw(4), 4), std::invalid_argument);
  CHECK_THROWS_AS(crosscap_push(1, Ys(1, 2), 4), std::invalid_argument);
}

TEST_CASE("torelli membership") {
  CHECK(is_torelli(Word(), 4, kConv));
  CHECK(is_torelli(Tw({1, 2, 3, 4}, 2) * t2_tail_word(5), 5, kConv));
  CHECK_FALSE(is_torelli(Ys(1, 2), 4, kConv));
}

TEST_CASE("T squares against slide pairs") {
  for (int g = 4; g <= 8; ++g)
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        CHECK(homology_action(Ys(j, i) * Ys(i, j, -1), g, kConv) ==
              homology_action(Tw({i, j}, 2), g, kConv));
}

TEST_CASE("generator lists") {
  const auto cor51 = generator_list(GeneratorListKind::cor51, 4);
  REQUIRE(cor51.size() == 9);
  CHECK(cor51.back() == Tw({1, 2, 3, 4}, 2));  // empty tail at g=4

  CHECK(generator_list(GeneratorListKind::hs, 4).size() == 10);
  CHECK(generator_list(GeneratorListKind::szepietowski, 4).size() == 10);
  CHECK(generator_list(GeneratorListKind::hs, 6).size() == 35);  // C(6,3)+C(6,2)

  const auto prop42 = generator_list(GeneratorListKind::prop42, 5);
  REQUIRE(prop42.size() == 9);
  CHECK(std::find(prop42.begin(), prop42.end(), commutator(Ys(1, 2), Ys(3, 4))) != prop42.end());

  CHECK_THROWS_AS(generator_list(GeneratorListKind::prop41, 3), std::invalid_argument);

  // every prop41/prop42/cor51 word at small genus is Torelli
  for (int g = 4; g <= 5; ++g)
    for (auto kind : {GeneratorListKind::prop41, GeneratorListKind::prop42,
                      GeneratorListKind::cor51})
      for (const auto& w : generator_list(kind, g)) CHECK(is_torelli(w, g, kConv));
}

TEST_CASE("tail word of the quadruple twist generator") {
  CHECK(t2_tail_word(4).empty());
  CHECK(t2_tail_word(5) == Ys(5, 4, -1) * Ys(5, 3, -1) * Ys(5, 2, -1) * Ys(5, 1, -1));
  CHECK(t2_tail_word(6) ==
        Ys(5, 4, -1) * Ys(5, 3, -1) * Ys(5, 2, -1) * Ys(5, 1, -1) * Ys(6, 5, -2) * Ys(6, 4, -1) *
            Ys(6, 3, -1) * Ys(6, 2, -1) * Ys(6, 1, -1));
}

TEST_CASE("slide expansion of Ys[g,i]") {
  // exact instantiation at g=4, i=1
  CHECK(eqII_rhs(4, 1) ==
        Ys(2, 3).pow(2) * Ys(2, 1, -1) * Ys(2, 4) * Ys(2, 1).pow(2) * Ys(3, 1, -1) * Ys(3, 4) *
            Ys(3, 1).pow(2) * Ys(1, 4));

  for (int g = 4; g <= 6; ++g)
    for (int i = 1; i <= g - 1; ++i) {
      const Word rhs = eqII_rhs(g, i);
      REQUIRE_FALSE(rhs.empty());
      CHECK(rhs.letters().back().sym == GeneratorSymbol(Family::Ys, {i, g}));
      CHECK(homology_action(rhs, g, kConv) == homology_action(Ys(g, i), g, kConv));
    }
  CHECK_THROWS_AS(eqII_rhs(5, 5), std::invalid_argument);
}

TEST_CASE("twist-vs-slide lemma cases") {
  const auto cases4 = lemma56_cases(4);
  REQUIRE(cases4.size() == 4);
  CHECK(cases4[0].lhs == Tw({1, 2}, 2));
  CHECK(cases4[0].rhs == Ys(4, 1) * Ys(4, 2) * Ys(4, 3).pow(2) * Ys(3, 1) * Ys(3, 2));
  const auto& c_rhs = cases4[2].rhs.letters();
  REQUIRE(c_rhs.size() >= 2);
  CHECK(c_rhs[c_rhs.size() - 2].sym == GeneratorSymbol(Family::Ys, {2, 3}));
  CHECK(c_rhs[c_rhs.size() - 1].sym == GeneratorSymbol(Family::Ys, {2, 1}));

  for (int g = 4; g <= 6; ++g)
    for (const auto& lc : lemma56_cases(g)) {
      const auto lhs = homology_action(lc.lhs, g, kConv);
      const auto rhs = homology_action(lc.rhs, g, kConv);
      CHECK(lhs == rhs);
      if (lc.expect_identity) CHECK(lhs.is_identity());
    }
}

TEST_CASE("separating twist push expansions") {
  const auto cases = appendixA1_cases(5, 3);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].m == 1);
  CHECK(cases[0].pushword == Gw(2).pow(2) * Gw(1).pow(2));
  CHECK(cases[0].expected == Ys(1, 2).pow(2) * Ys(1, 3).pow(2));
  CHECK(crosscap_push(1, cases[0].pushword, 5) == cases[0].expected);

  // m = h-1 collapses to a single squared slide
  CHECK(cases[1].pushword == Gw(2).pow(2));
  CHECK(cases[1].expected == Ys(2, 3).pow(2));

  for (int g = 2; g <= 6; ++g)
    for (int h = 2; h <= g; ++h) {
      Word product;
      for (const auto& pc : appendixA1_cases(g, h)) {
        CHECK(crosscap_push(pc.m, pc.pushword, g) == pc.expected);
        product = product * pc.expected;
      }
      CHECK(is_torelli(product, g, kConv));
    }
  CHECK_THROWS_AS(appendixA1_cases(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(appendixA1_cases(4, 1), std::invalid_argument);
}

TEST_CASE("slide expansion of the squared twist") {
  // both routes send c1 to -c1 - 2 c2 at g=4
  const auto via_slides = homology_action(Ys(2, 1) * Ys(1, 2, -1), 4, kConv);
  const auto via_twist = homology_action(Tw({1, 2}, 2), 4, kConv);
  const auto want = HomologyClass::canonicalize(vec({-1, -2, 0, 0}));
  CHECK(via_slides.images()[0] == want);
  CHECK(via_twist.images()[0] == want);

  for (int g = 4; g <= 6; ++g)
    for (int i = 1; i <= g - 1; ++i) {
      const Word rhs = exampleA2_rhs(g, i);
      CHECK(homology_action(rhs, g, kConv) == homology_action(Tw({i, g}, 2), g, kConv));
      CHECK(homology_action(rhs, g, kConv) ==
            homology_action(Ys(g, i) * Ys(i, g, -1), g, kConv));
      CHECK(eqII_rhs(g, i) == rhs * Ys(i, g));
    }
}

TEST_CASE("relabeling") {
  CHECK(relabel(Ys(1, 2).pow(2), {{1, 3}, {2, 5}}) == Ys(3, 5).pow(2));
  CHECK(relabel(Tw({1, 2}), {{1, 3}, {2, 2}}) == Tw({2, 3}));
  CHECK_THROWS_AS(relabel(Ys(1, 2), {{1, 3}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(Ys(1, 2), {{1, 3}}), std::invalid_argument);
}

TEST_CASE("template matching") {
  const auto templates = prop42_templates();
  REQUIRE(templates.size() == 8);

  const Word item = (Ys(2, 3) * Ys(2, 4) * Ys(2, 5)).pow(2);
  const auto m = match_template(item, templates);
  REQUIRE(m.has_value());
  CHECK(m->template_index == 6);
  const std::map<int, int> want{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(m->assignment == want);

  for (int g = 4; g <= 6; ++g)
    for (const auto& [family, w] : prop41_items(g)) {
      if (family == 7) continue;
      CHECK(match_template(w, templates).has_value());
    }

  CHECK_FALSE(match_template(Ys(1, 2).pow(3), templates).has_value());
}

TEST_CASE("telescoping chain identity") {
  {
    const auto [lhs, rhs] = bp_chain_identity(1);
    CHECK(lhs == rhs);
    CHECK(lhs == Gw(1) * Gw(2, -1));
  }
  {
    const auto [lhs, rhs] = bp_chain_identity(2);
    CHECK(lhs == rhs);
    CHECK(rhs == Gw(1) * Gw(3, -1));
  }
  {
    const auto [lhs, rhs] = bp_chain_identity(5);
    CHECK(lhs == rhs);
    CHECK(rhs.size() == 2);
  }
  CHECK_THROWS_AS(bp_chain_identity(0), std::invalid_argument);
}

TEST_CASE("presentation push-forward reproduces the displayed list") {
  for (int g = 4; g <= 5; ++g) {
    std::map<GeneratorSymbol, Word> carrier;
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j)
        if (i != j) carrier.emplace(GeneratorSymbol(Family::Ym, {i, j}), Ys(i, j));
    carrier.emplace(GeneratorSymbol(Family::T, {1, 2, 3, 4}), Tw({1, 2, 3, 4}));

    std::vector<Word> relators = relators_y(g);
    relators.push_back(t2_presentation_relator(g));
    CHECK(normal_generators_from_presentation(relators, carrier) ==
          generator_list(GeneratorListKind::prop41, g));
  }
}
