#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace torelli {

/// Square matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
public:
  explicit IntMatrix(int n);  // zero matrix
  static IntMatrix identity(int n);

  int n() const { return n_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Exact determinant (fraction-free Bareiss elimination).
  mpz_class det() const;

  /// Exact inverse; requires det = +-1.
  IntMatrix inverse() const;

  IntMatrix pow(const mpz_class& e) const;

  bool congruent_identity_mod2() const;

private:
  int n_;
  std::vector<mpz_class> a_;
};

/// Row-major bracketed form, e.g. "[[1,2],[0,1]]".
std::string to_string(const IntMatrix& m);
IntMatrix parse_matrix(std::string_view text);

}  // namespace torelli
