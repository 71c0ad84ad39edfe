#include "torelli/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace torelli {

namespace {

// Cap on letters materialized by Word::pow for multi-letter bases.
constexpr unsigned long kMaxMaterializedLetters = 1u << 20;

void fail_symbol(const std::string& what) {
  throw std::invalid_argument("generator symbol: " + what);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::Ym: return "Ym";
    case Family::Ys: return "Ys";
    case Family::T: return "T";
    case Family::Tp: return "Tp";
    case Family::U: return "U";
    case Family::G: return "G";
  }
  return "?";
}

GeneratorSymbol::GeneratorSymbol(Family family, std::vector<int> indices)
    : family_(family), indices_(std::move(indices)) {
  for (int i : indices_)
    if (i < 1) fail_symbol("indices must be positive");
  switch (family_) {
    case Family::E:
    case Family::Ym:
    case Family::Ys:
      if (indices_.size() != 2) fail_symbol(std::string(family_name(family_)) + " takes two indices");
      if (indices_[0] == indices_[1]) fail_symbol(std::string(family_name(family_)) + " needs distinct indices");
      break;
    case Family::U:
      if (indices_.size() != 2) fail_symbol("U takes two indices");
      if (indices_[0] >= indices_[1]) fail_symbol("U needs i < j");
      break;
    case Family::F:
    case Family::G:
      if (indices_.size() != 1) fail_symbol(std::string(family_name(family_)) + " takes one index");
      break;
    case Family::T:
    case Family::Tp:
      if (indices_.size() < 2 || indices_.size() % 2 != 0)
        fail_symbol(std::string(family_name(family_)) + " needs an even number of indices");
      if (!std::is_sorted(indices_.begin(), indices_.end()) ||
          std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        fail_symbol(std::string(family_name(family_)) + " indices must be strictly increasing");
      break;
  }
}

Word::Word(std::vector<Letter> raw) {
  letters_.reserve(raw.size());
  for (auto& l : raw) push(std::move(l));
}

Word Word::letter(GeneratorSymbol sym, Exp exp) {
  Word w;
  w.push(Letter{std::move(sym), std::move(exp)});
  return w;
}

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().sym == l.sym) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back(std::move(l));
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->sym, -it->exp});
  return w;
}

Word Word::pow(const Exp& e) const {
  if (e == 0 || empty()) return {};
  if (size() == 1) return letter(letters_[0].sym, letters_[0].exp * e);
  const Word base = e < 0 ? inverse() : *this;
  Exp n = abs(e);
  if (!n.fits_ulong_p() || n.get_ui() > kMaxMaterializedLetters / size())
    throw std::overflow_error("Word::pow: exponent too large to materialize");
  Word out;
  for (unsigned long i = 0, reps = n.get_ui(); i < reps; ++i) out = out * base;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters_ = a.letters_;
  for (const auto& l : b.letters_) w.push(l);
  return w;
}

bool operator<(const Word& a, const Word& b) {
  const auto& x = a.letters();
  const auto& y = b.letters();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].sym <=> y[i].sym; c != 0) return c < 0;
    if (int c = cmp(x[i].exp, y[i].exp); c != 0) return c < 0;
  }
  return x.size() < y.size();
}

Word conjugate(const Word& w, const Word& h) { return h * w * h.inverse(); }

Word commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

Word substitute(const Word& w, const std::map<GeneratorSymbol, Word>& image) {
  Word out;
  for (const auto& l : w.letters()) {
    auto it = image.find(l.sym);
    if (it == image.end())
      throw std::invalid_argument("substitute: unmapped symbol " + to_string(l.sym));
    out = out * it->second.pow(l.exp);
  }
  return out;
}

ParseError::ParseError(std::size_t pos, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + message),
      position(pos) {}

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word parse_all() {
    Word w = parse_sequence();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Reads factors until end of input or a closing token (')', ']', ',').
  Word parse_sequence() {
    Word w;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == ')' || c == ']' || c == ',') break;
      w = w * parse_factor();
    }
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return atom.pow(parse_exponent());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected atom");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = parse_sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_sequence();
      expect(',');
      Word y = parse_sequence();
      expect(']');
      return commutator(x, y);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_generator();
    fail("expected atom");
  }

  Word parse_generator() {
    const std::size_t name_pos = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      name += s_[pos_++];
    Family fam;
    if (name == "E") fam = Family::E;
    else if (name == "F") fam = Family::F;
    else if (name == "Ym") fam = Family::Ym;
    else if (name == "Ys") fam = Family::Ys;
    else if (name == "T") fam = Family::T;
    else if (name == "Tp") fam = Family::Tp;
    else if (name == "U") fam = Family::U;
    else if (name == "G") fam = Family::G;
    else throw ParseError(name_pos, "unknown generator name '" + name + "'");
    expect('[');
    std::vector<int> indices;
    indices.push_back(parse_index());
    while (peek_is(',')) {
      ++pos_;
      indices.push_back(parse_index());
    }
    expect(']');
    try {
      return Word::letter(GeneratorSymbol(fam, std::move(indices)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(name_pos, e.what());
    }
  }

  int parse_index() {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 9) throw ParseError(start, "index too large");
    return std::stoi(digits);
  }

  Exp parse_exponent() {
    skip_ws();
    std::string text;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      text += '-';
      ++pos_;
    }
    text += read_digits();
    return Exp(text);
  }

  std::string read_digits() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected digits");
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      out += s_[pos_++];
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const GeneratorSymbol& sym) {
  std::ostringstream os;
  os << family_name(sym.family()) << '[';
  for (std::size_t i = 0; i < sym.indices().size(); ++i) {
    if (i) os << ',';
    os << sym.indices()[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const auto& l = w.letters()[i];
    if (i) os << ' ';
    os << to_string(l.sym);
    if (l.exp != 1) os << '^' << l.exp.get_str();
  }
  return os.str();
}

}  // namespace torelli
