#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace torelli {

/// Generator families.
///
///   E, F    matrix generators of the level-2 congruence subgroup
///   Ym      matrix-level crosscap-slide images Y_ij
///   Ys      surface-level crosscap slides Y_{i;j}
///   T, Tp   Dehn twists about the standard curves alpha_I / alpha'_I
///   U       crosscap transpositions (word-level only)
///   G       loops gamma_j feeding the crosscap pushing maps
enum class Family { E, F, Ym, Ys, T, Tp, U, G };

std::string_view family_name(Family f);

/// A typed generator symbol. The index tuple is validated against the
/// family: E/Ym/Ys take two distinct indices, F/G one, U an increasing
/// pair, T/Tp a strictly increasing tuple of even length.
class GeneratorSymbol {
public:
  GeneratorSymbol(Family family, std::vector<int> indices);

  Family family() const { return family_; }
  const std::vector<int>& indices() const { return indices_; }

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;

private:
  Family family_;
  std::vector<int> indices_;
};

using Exp = mpz_class;

struct Letter {
  GeneratorSymbol sym;
  Exp exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over typed generator symbols. Adjacent letters never
/// share a symbol and no letter carries exponent zero; the empty word is the
/// identity. Immutable value type.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> raw);  // freely reduces the input

  static Word letter(GeneratorSymbol sym, Exp exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word pow(const Exp& e) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

bool operator<(const Word& a, const Word& b);

/// h * w * h^-1.
Word conjugate(const Word& w, const Word& h);

/// Commutator convention used throughout: [x, y] = x^-1 y^-1 x y.
/// The relator suites silently break under the opposite convention.
Word commutator(const Word& x, const Word& y);

/// Homomorphic image of w under a symbol-to-word mapping. Throws
/// std::invalid_argument naming the first unmapped symbol.
Word substitute(const Word& w, const std::map<GeneratorSymbol, Word>& image);

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message);
  std::size_t position;
};

/// Text grammar:
///   word   := factor*
///   factor := atom ('^' '-'? digits)?
///   atom   := gen | '(' word ')' | '[' word ',' word ']'
///   gen    := NAME '[' digits (',' digits)* ']'
/// A bracket atom denotes the commutator x^-1 y^-1 x y. Whitespace between
/// tokens is ignored.
Word parse_word(std::string_view text);

std::string to_string(const GeneratorSymbol& sym);
std::string to_string(const Word& w);

}  // namespace torelli
