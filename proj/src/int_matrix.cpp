#include "torelli/int_matrix.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace torelli {

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("IntMatrix: negative size");
  a_.resize(static_cast<std::size_t>(n) * n);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix c(a.n_);
  mpz_class t;
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n_; ++j) {
        t = aik * b.at(k, j);
        c.at(i, j) += t;
      }
    }
  return c;
}

mpz_class IntMatrix::det() const {
  if (n_ == 0) return 1;
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n_; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n_; ++i)
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::inverse() const {
  const mpz_class d = det();
  if (d != 1 && d != -1) throw std::domain_error("IntMatrix::inverse: determinant not +-1");
  IntMatrix inv(n_);
  if (n_ == 0) return inv;
  // Adjugate over minors; with det = +-1 the adjugate divided by det stays integral.
  IntMatrix minor(n_ - 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      for (int r = 0, mr = 0; r < n_; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n_; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      mpz_class cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = d * cof;
    }
  return inv;
}

IntMatrix IntMatrix::pow(const mpz_class& e) const {
  if (e == 0) return identity(n_);
  IntMatrix base = e < 0 ? inverse() : *this;
  mpz_class n = abs(e);
  IntMatrix acc = identity(n_);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    acc = acc * acc;
    if (mpz_tstbit(n.get_mpz_t(), b)) acc = acc * base;
  }
  return acc;
}

bool IntMatrix::congruent_identity_mod2() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const bool odd = mpz_odd_p(at(i, j).get_mpz_t()) != 0;
      if (odd != (i == j)) return false;
    }
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.n(); ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << ',';
      os << m.at(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

class MatrixParser {
public:
  explicit MatrixParser(std::string_view s) : s_(s) {}

  IntMatrix parse() {
    expect('[');
    std::vector<std::vector<mpz_class>> rows;
    rows.push_back(parse_row());
    while (peek() == ',') {
      ++pos_;
      rows.push_back(parse_row());
    }
    expect(']');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != n) fail("matrix is not square");
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("matrix parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<mpz_class> parse_row() {
    expect('[');
    std::vector<mpz_class> row;
    row.push_back(parse_int());
    while (peek() == ',') {
      ++pos_;
      row.push_back(parse_int());
    }
    expect(']');
    return row;
  }

  mpz_class parse_int() {
    skip_ws();
    std::string text;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) text += s_[pos_++];
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) text += s_[pos_++];
    return mpz_class(text);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntMatrix parse_matrix(std::string_view text) { return MatrixParser(text).parse(); }

}  // namespace torelli
