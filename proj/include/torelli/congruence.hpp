#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torelli/homology.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/word.hpp"

namespace torelli {

/// True iff m lies in the level 2 principal congruence subgroup of GL(n;Z):
/// det = +-1 and m congruent to the identity mod 2.
bool is_member(const IntMatrix& m);

/// Element of the level 2 congruence subgroup; construction validates
/// membership.
class CongruenceElement {
public:
  explicit CongruenceElement(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }
  int n() const { return m_.n(); }

  friend CongruenceElement operator*(const CongruenceElement& a, const CongruenceElement& b);
  CongruenceElement inverse() const;
  friend bool operator==(const CongruenceElement&, const CongruenceElement&) = default;

private:
  IntMatrix m_;
};

/// Matrix of a single generator at size n. E[i,j]: identity with a 2 in
/// entry (i,j). F[i]: identity with -1 in entry (i,i). Ym[i,j] (with
/// g = n+1): E_ij F_i for j < g, F_i for j = g.
CongruenceElement generator_matrix(const GeneratorSymbol& sym, int n);

/// Faithful evaluation of a word over {E, F, Ym}; juxtaposition applies the
/// right factor first, matching the matrix product order.
CongruenceElement eval_word(const Word& w, int n);

/// Relators of the E/F presentation, grouped by family
/// ("1", "2", "3a", "3b", "4") with their size thresholds.
std::vector<std::pair<std::string, std::vector<Word>>> relators_ef_by_family(int n);
std::vector<Word> relators_ef(int n);

/// Relators of the Y presentation at genus g (matrix size g-1), grouped by
/// family "1".."6". Family 3 uses the well-defined range i,j <= g-1,
/// k <= g, all distinct.
std::vector<std::pair<std::string, std::vector<Word>>> relators_y_by_family(int g);
std::vector<Word> relators_y(int g);

/// Generator rewriting: E_ij -> Y_ij Y_ig, F_i -> Y_ig and back
/// (Y_ij -> E_ij F_i for j < g, Y_ig -> F_i). Both preserve eval_word.
Word ef_to_y(const Word& w, int n);
Word y_to_ef(const Word& w, int g);

/// The isomorphism f from mod-2-trivial form-preserving automorphisms of
/// H_1(N_g;Z) onto the congruence subgroup of size g-1: f(L) = overline(L).
CongruenceElement f_map(const HomologyAutomorphism& l);

/// Inverse of f: the unique lift with A~(c_i) = sum_j a_ji c_j for i < g and
/// A~(c_g) = sum_j (1 - sum_k a_jk) c_j + c_g.
HomologyAutomorphism f_inverse(const CongruenceElement& a);

/// Substitutes the carrier into each relator; the images normally generate
/// the kernel of the induced surjection.
std::vector<Word> normal_generators_from_presentation(
    const std::vector<Word>& relators, const std::map<GeneratorSymbol, Word>& carrier);

}  // namespace torelli
