#include "doctest.h"

#include <set>

#include "torelli/congruence.hpp"
#include "torelli/verify.hpp"

using namespace torelli;

namespace {

Word W(Family f, std::vector<int> idx, Exp e = 1) {
  return Word::letter(GeneratorSymbol(f, std::move(idx)), std::move(e));
}

std::vector<mpz_class> vec(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("generator matrices") {
  CHECK(to_string(generator_matrix(GeneratorSymbol(Family::E, {1, 2}), 2).matrix()) ==
        "[[1,2],[0,1]]");
  CHECK(to_string(generator_matrix(GeneratorSymbol(Family::F, {1}), 3).matrix()) ==
        "[[-1,0,0],[0,1,0],[0,0,1]]");
  CHECK(to_string(generator_matrix(GeneratorSymbol(Family::Ym, {1, 2}), 3).matrix()) ==
        "[[-1,2,0],[0,1,0],[0,0,1]]");

  // Ym[i,j] = E_ij F_i for j < g, and F_i for j = g
  const IntMatrix e12f1 = generator_matrix(GeneratorSymbol(Family::E, {1, 2}), 3).matrix() *
                          generator_matrix(GeneratorSymbol(Family::F, {1}), 3).matrix();
  CHECK(generator_matrix(GeneratorSymbol(Family::Ym, {1, 2}), 3).matrix() == e12f1);
  CHECK(generator_matrix(GeneratorSymbol(Family::Ym, {1, 4}), 3).matrix() ==
        generator_matrix(GeneratorSymbol(Family::F, {1}), 3).matrix());

  CHECK_THROWS_AS(generator_matrix(GeneratorSymbol(Family::E, {1, 3}), 2), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(GeneratorSymbol(Family::Ym, {3, 4}), 2), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(GeneratorSymbol(Family::Ys, {1, 2}), 3), std::invalid_argument);
}

TEST_CASE("word evaluation") {
  CHECK(eval_word(Word(), 3).matrix() == IntMatrix::identity(3));
  CHECK(eval_word(parse_word("(F[1]F[2])^2"), 2).matrix() == IntMatrix::identity(2));
  CHECK(eval_word(parse_word("[E[1,2],E[3,1]] E[3,2]^2"), 3).matrix() == IntMatrix::identity(3));
  CHECK_THROWS_AS(eval_word(parse_word("U[1,2]"), 3), std::invalid_argument);

  // composition order: letters multiply left to right
  const Word w = parse_word("E[1,2] F[1]");
  CHECK(eval_word(w, 3).matrix() ==
        generator_matrix(GeneratorSymbol(Family::E, {1, 2}), 3).matrix() *
            generator_matrix(GeneratorSymbol(Family::F, {1}), 3).matrix());
}

TEST_CASE("membership") {
  CHECK(is_member(parse_matrix("[[1,2],[0,1]]")));
  CHECK_FALSE(is_member(parse_matrix("[[1,1],[0,1]]")));
  CHECK(is_member(parse_matrix("[[3,2],[4,3]]")));  // det 1, congruent to I
  CHECK_FALSE(is_member(parse_matrix("[[2,1],[1,1]]")));
  CHECK_THROWS_AS(CongruenceElement{parse_matrix("[[1,1],[0,1]]")}, std::invalid_argument);
}

TEST_CASE("matrix parse and print round trip") {
  const std::string text = "[[3,2],[4,3]]";
  CHECK(to_string(parse_matrix(text)) == text);
  CHECK(to_string(parse_matrix(" [ [ 3 , 2 ] , [ 4 , 3 ] ] ")) == text);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3,x]]"), std::invalid_argument);
}

TEST_CASE("relator lists") {
  const auto r1 = relators_ef(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == W(Family::F, {1}).pow(2));

  const auto y2 = relators_y(2);
  REQUIRE(y2.size() == 1);
  CHECK(y2[0] == W(Family::Ym, {1, 2}).pow(2));

  // hexagon relator of the Y presentation shows up for i,j,k <= g-1
  const auto y5 = relators_y(5);
  const Word hexagon = (W(Family::Ym, {2, 1}) * W(Family::Ym, {1, 2}) * W(Family::Ym, {3, 2}) *
                        W(Family::Ym, {2, 3}) * W(Family::Ym, {1, 3}) * W(Family::Ym, {3, 1}))
                           .pow(2);
  CHECK(std::find(y5.begin(), y5.end(), hexagon) != y5.end());

  for (int n = 1; n <= 4; ++n)
    for (const auto& w : relators_ef(n))
      CHECK(eval_word(w, n).matrix() == IntMatrix::identity(n));
  for (int g = 2; g <= 5; ++g)
    for (const auto& w : relators_y(g))
      CHECK(eval_word(w, g - 1).matrix() == IntMatrix::identity(g - 1));

  // deterministic and duplicate-free
  const auto again = relators_y(5);
  CHECK(again == y5);
  CHECK(std::set<Word>(y5.begin(), y5.end()).size() == y5.size());
}

TEST_CASE("rewriting between generator sets") {
  const int n = 3, g = 4;
  CHECK(ef_to_y(W(Family::F, {1}), n) == W(Family::Ym, {1, g}));
  CHECK(y_to_ef(W(Family::Ym, {1, g}), g) == W(Family::F, {1}));

  const Word w = parse_word("E[1,2]F[1]");
  const Word y = ef_to_y(w, n);
  CHECK(y == W(Family::Ym, {1, 2}) * W(Family::Ym, {1, 4}, 2));
  CHECK(eval_word(y, n) == eval_word(w, n));
  CHECK(eval_word(y_to_ef(y, g), n) == eval_word(w, n));

  CHECK_THROWS_AS(ef_to_y(W(Family::Ym, {1, 2}), n), std::invalid_argument);
  CHECK_THROWS_AS(y_to_ef(W(Family::F, {1}), g), std::invalid_argument);

  verify::SeededRng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Word r = verify::random_ef_word(rng, n, 30);
    CHECK(eval_word(ef_to_y(r, n), n) == eval_word(r, n));
  }
}

TEST_CASE("f and its inverse") {
  const int g = 4;
  const auto id = HomologyAutomorphism::identity(g);
  CHECK(f_map(id).matrix() == IntMatrix::identity(g - 1));
  CHECK(f_inverse(CongruenceElement{IntMatrix::identity(g - 1)}) == id);

  CHECK(f_map(slide_action(1, 2, g)) ==
        generator_matrix(GeneratorSymbol(Family::Ym, {1, 2}), g - 1));
  CHECK(f_map(slide_action(1, 4, g)) ==
        generator_matrix(GeneratorSymbol(Family::Ym, {1, 4}), g - 1));

  const auto lift_e12 = f_inverse(generator_matrix(GeneratorSymbol(Family::E, {1, 2}), 3));
  CHECK(lift_e12.images()[0] == HomologyClass::basis(g, 1));
  CHECK(lift_e12.images()[1] == HomologyClass::canonicalize(vec({2, 1, 0, 0})));
  CHECK(lift_e12.images()[2] == HomologyClass::basis(g, 3));
  CHECK(lift_e12.images()[3] == HomologyClass::canonicalize(vec({-2, 0, 0, 1})));

  const auto lift_f1 = f_inverse(generator_matrix(GeneratorSymbol(Family::F, {1}), 3));
  CHECK(lift_f1.images()[0] == HomologyClass::basis(g, 1).negated());
  CHECK(lift_f1.images()[1] == HomologyClass::basis(g, 2));
  CHECK(lift_f1.images()[2] == HomologyClass::basis(g, 3));
  CHECK(lift_f1.images()[3] == HomologyClass::canonicalize(vec({2, 0, 0, 1})));

  CHECK_THROWS_AS(f_map(twist_action({1, 2}, -1, g)), std::invalid_argument);
}

TEST_CASE("closure under products and inverses") {
  verify::SeededRng rng(13);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + rng.below(4);
    const auto a = eval_word(verify::random_ef_word(rng, n, 30), n);
    const auto b = eval_word(verify::random_ef_word(rng, n, 30), n);
    CHECK(is_member((a * b).matrix()));
    CHECK(is_member(a.inverse().matrix()));
  }
}

TEST_CASE("normal generators from a presentation") {
  // single abstract relator x^2 with x carried to Ys[1,2]
  std::map<GeneratorSymbol, Word> carrier;
  carrier.emplace(GeneratorSymbol(Family::G, {1}), W(Family::Ys, {1, 2}));
  const auto out =
      normal_generators_from_presentation({W(Family::G, {1}).pow(2)}, carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == W(Family::Ys, {1, 2}).pow(2));

  CHECK_THROWS_AS(
      normal_generators_from_presentation({W(Family::G, {2})}, carrier),
      std::invalid_argument);
}
