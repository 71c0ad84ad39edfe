#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "torelli/int_matrix.hpp"

namespace torelli {

/// Element of H = H_1(N_g; Z) = <c_1,...,c_g | 2c = 0> with c = c_1+...+c_g,
/// stored in canonical coordinates: Z^{g-1} on c_1..c_{g-1} plus a torsion
/// bit on c. The representation is unique, so equality and hashing are exact.
class HomologyClass {
public:
  explicit HomologyClass(int genus);  // zero class
  HomologyClass(int genus, std::vector<mpz_class> free_part, int torsion);

  /// Interprets raw as sum x_i c_i and reduces to canonical coordinates.
  static HomologyClass canonicalize(const std::vector<mpz_class>& raw);

  static HomologyClass basis(int genus, int i);  // c_i, 1-based, i <= g
  static HomologyClass full_sum(int genus);      // c

  int genus() const { return genus_; }
  const std::vector<mpz_class>& free_part() const { return free_; }
  int torsion() const { return torsion_; }

  /// A raw g-vector mapping back to this class under canonicalize.
  std::vector<mpz_class> raw_lift() const;

  HomologyClass negated() const;
  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator*(const mpz_class& k, const HomologyClass& x);
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

private:
  int genus_;
  std::vector<mpz_class> free_;
  int torsion_;
};

/// Mod 2 intersection pairing; on the basis, c_i . c_j = delta_ij.
int mod2_pairing(const HomologyClass& x, const HomologyClass& y);

std::string to_string(const HomologyClass& x);

/// Automorphism of H preserving the mod 2 intersection form, stored as the
/// g images of c_1..c_g. Construction checks the invariants: the images sum
/// to c (so L(c) = c), the pairing is preserved on basis pairs, and the
/// induced (g-1)x(g-1) matrix is unimodular.
class HomologyAutomorphism {
public:
  explicit HomologyAutomorphism(std::vector<HomologyClass> images);

  static HomologyAutomorphism identity(int genus);

  int genus() const { return genus_; }
  const std::vector<HomologyClass>& images() const { return images_; }

  HomologyClass apply(const HomologyClass& x) const;
  HomologyAutomorphism inverse() const;
  HomologyAutomorphism pow(const mpz_class& e) const;
  bool is_identity() const;

  /// Induced action on H/<c> = Z^{g-1}; column i is the image of e_i.
  IntMatrix overline() const;

  /// True iff every image is congruent mod 2 to its basis class in H/2H.
  bool is_mod2_trivial() const;

  friend bool operator==(const HomologyAutomorphism&, const HomologyAutomorphism&) = default;

private:
  int genus_;
  std::vector<HomologyClass> images_;
};

/// compose(a, b) applies b first: compose(a, b)(x) = a(b(x)).
HomologyAutomorphism compose(const HomologyAutomorphism& a, const HomologyAutomorphism& b);

/// Transvection x -> x + d * lambda(x) * a_I with a_I = sum_{i in I} c_i and
/// lambda alternating (+,-,+,...) over the sorted even-size index set I,
/// evaluated on any raw lift. d is the global twist direction.
HomologyAutomorphism twist_action(const std::vector<int>& index_set, int direction, int genus);

/// Crosscap slide on homology: c_i -> -c_i, c_j -> c_j + 2 c_i, rest fixed.
HomologyAutomorphism slide_action(int i, int j, int genus);

std::string to_string(const HomologyAutomorphism& a);

}  // namespace torelli
