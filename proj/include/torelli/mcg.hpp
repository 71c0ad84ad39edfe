#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torelli/homology.hpp"
#include "torelli/word.hpp"

namespace torelli {

/// Evaluation convention for mapping-class words on homology. Only the
/// global twist direction is free; the alternating sign pattern of the
/// twist functional starts with + and the slide rule is fixed. Exactly one
/// direction survives the pinning suite (see verify).
struct Convention {
  int twist_direction = -1;
  char sigma_start = '+';
  std::string slide_rule = "ci->-ci, cj->cj+2ci";
};

/// Homology action of a word over {Ys, T, Tp}. U and G symbols have no
/// specified action and are rejected with an "unsupported symbol" error.
HomologyAutomorphism homology_action(const Word& w, int g, const Convention& conv);

/// Crosscap pushing map s_i applied to a pi_1-word over G symbols:
/// an anti-homomorphism with s_i(gamma_j) = Y_{i;j} for j < i and
/// Y_{i;j+1} for j >= i.
Word crosscap_push(int i, const Word& u, int g);

bool is_torelli(const Word& w, int g, const Convention& conv);

enum class GeneratorListKind { prop41, prop42, cor51, szepietowski, hs };

/// The displayed normal generating sets (prop41/prop42/cor51, words over
/// Ys and T) and the two generating sets of the level 2 mapping class
/// group rendered on the matrix side (szepietowski/hs, words over Ym and T).
std::vector<Word> generator_list(GeneratorListKind kind, int g);

/// prop41 items with their family number 1..7; family 7 is emitted only for
/// the quadruple (1,2,3,4), whose slide tail the source displays explicitly.
std::vector<std::pair<int, Word>> prop41_items(int g);

/// The prop42 items of families 1..6, used as relabeling templates.
std::vector<Word> prop42_templates();

/// Tail of the T_{1,2,3,4}^2 normal generator:
/// prod_{5<=m<=g} Y_{m;m-1}^-2 ... Y_{m;5}^-2 Y_{m;4}^-1 ... Y_{m;1}^-1.
Word t2_tail_word(int g);

/// Matrix-side presentation relator T[1,2,3,4]^2 * (tail over Ym), fed to
/// normal_generators_from_presentation together with relators_y.
Word t2_presentation_relator(int g);

/// Right-hand side of the slide expansion of Y_{g;i} (three block families
/// followed by Y_{i;g}); induces the same automorphism as Ys[g,i].
Word eqII_rhs(int g, int i);

struct LemmaCase {
  std::string name;  // "a", "b", "c", "d"
  Word lhs, rhs;
  bool expect_identity;  // case d evaluates to the identity on both sides
};

/// The four displayed twist-vs-slide identities around the hexagon
/// generator, instantiated at genus g.
std::vector<LemmaCase> lemma56_cases(int g);

struct PushCase {
  int m;
  Word pushword;  // over G
  Word expected;  // over Ys
};

/// Crosscap-push expansions of the separating-curve twist factorization:
/// for each m < h, s_m(gamma_{h-1}^2 ... gamma_m^2) = Y_{m;m+1}^2 ... Y_{m;h}^2.
std::vector<PushCase> appendixA1_cases(int g, int h);

/// Slide expansion of T_{i,g}^2; equals eqII_rhs(g, i) without the final
/// Ys[i,g] factor.
Word exampleA2_rhs(int g, int i);

/// Symbol-wise index substitution; pi must cover the indices present and be
/// injective on them. Sorted index tuples (T/Tp/U) are re-sorted.
Word relabel(const Word& w, const std::map<int, int>& pi);

struct MatchResult {
  std::size_t template_index;
  std::map<int, int> assignment;
};

/// Finds a template and injective index map reproducing item exactly.
std::optional<MatchResult> match_template(const Word& item, const std::vector<Word>& templates);

/// Telescoping chain identity t_{d_0} t_{d_h}^-1 =
/// (t_{d_0} t_{d_1}^-1) ... (t_{d_{h-1}} t_{d_h}^-1) over abstract twist
/// symbols; both sides agree as free words.
std::pair<Word, Word> bp_chain_identity(int h);

}  // namespace torelli
