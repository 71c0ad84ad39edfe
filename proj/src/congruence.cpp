#include "torelli/congruence.hpp"

#include <set>
#include <stdexcept>

namespace torelli {

namespace {

Word sym_word(Family f, std::initializer_list<int> idx, Exp e = 1) {
  return Word::letter(GeneratorSymbol(f, std::vector<int>(idx)), std::move(e));
}

Word E(int i, int j) { return sym_word(Family::E, {i, j}); }
Word F(int i) { return sym_word(Family::F, {i}); }
Word Y(int i, int j) { return sym_word(Family::Ym, {i, j}); }

void dedup_push(std::vector<Word>& out, std::set<Word>& seen, Word w) {
  if (seen.insert(w).second) out.push_back(std::move(w));
}

}  // namespace

bool is_member(const IntMatrix& m) {
  if (!m.congruent_identity_mod2()) return false;
  const mpz_class d = m.det();
  return d == 1 || d == -1;
}

CongruenceElement::CongruenceElement(IntMatrix m) : m_(std::move(m)) {
  if (!is_member(m_))
    throw std::invalid_argument("CongruenceElement: matrix is not in the level 2 subgroup");
}

CongruenceElement operator*(const CongruenceElement& a, const CongruenceElement& b) {
  return CongruenceElement(a.m_ * b.m_);
}

CongruenceElement CongruenceElement::inverse() const {
  return CongruenceElement(m_.inverse());
}

CongruenceElement generator_matrix(const GeneratorSymbol& sym, int n) {
  const auto& idx = sym.indices();
  IntMatrix m = IntMatrix::identity(n);
  switch (sym.family()) {
    case Family::E: {
      const int i = idx[0], j = idx[1];
      if (i > n || j > n) throw std::invalid_argument("generator_matrix: E index out of range");
      m.at(i - 1, j - 1) = 2;
      break;
    }
    case Family::F: {
      const int i = idx[0];
      if (i > n) throw std::invalid_argument("generator_matrix: F index out of range");
      m.at(i - 1, i - 1) = -1;
      break;
    }
    case Family::Ym: {
      const int i = idx[0], j = idx[1];
      if (i > n || j > n + 1) throw std::invalid_argument("generator_matrix: Ym index out of range");
      m.at(i - 1, i - 1) = -1;       // F_i factor
      if (j <= n) m.at(i - 1, j - 1) = 2;  // E_ij factor, absent for j = g
      break;
    }
    default:
      throw std::invalid_argument("generator_matrix: family " +
                                  std::string(family_name(sym.family())) +
                                  " has no matrix model");
  }
  return CongruenceElement(std::move(m));
}

CongruenceElement eval_word(const Word& w, int n) {
  IntMatrix acc = IntMatrix::identity(n);
  for (const auto& l : w.letters()) {
    const IntMatrix base = generator_matrix(l.sym, n).matrix();
    acc = acc * base.pow(l.exp);
  }
  return CongruenceElement(std::move(acc));
}

std::vector<std::pair<std::string, std::vector<Word>>> relators_ef_by_family(int n) {
  if (n < 1) throw std::invalid_argument("relators_ef: n must be >= 1");
  std::vector<std::pair<std::string, std::vector<Word>>> out;
  std::set<Word> seen;

  {  // (1) F_i^2
    std::vector<Word> fam;
    for (int i = 1; i <= n; ++i) dedup_push(fam, seen, F(i).pow(2));
    out.emplace_back("1", std::move(fam));
  }
  {  // (2) (E_ij F_i)^2, (E_ij F_j)^2, (F_i F_j)^2
    std::vector<Word> fam;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i) dedup_push(fam, seen, (E(i, j) * F(i)).pow(2));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i) dedup_push(fam, seen, (E(i, j) * F(j)).pow(2));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i) dedup_push(fam, seen, (F(i) * F(j)).pow(2));
    out.emplace_back("2", std::move(fam));
  }
  {  // (3)(a) commutation with shared index and [E_ij,E_ki]E_kj^2
    std::vector<Word> fam;
    auto triples = [&](auto&& f) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            if (i != j && j != k && i != k) f(i, j, k);
    };
    triples([&](int i, int j, int k) { dedup_push(fam, seen, commutator(E(i, j), E(i, k))); });
    triples([&](int i, int j, int k) { dedup_push(fam, seen, commutator(E(i, j), E(k, j))); });
    triples([&](int i, int j, int k) { dedup_push(fam, seen, commutator(E(i, j), F(k))); });
    triples([&](int i, int j, int k) {
      dedup_push(fam, seen, commutator(E(i, j), E(k, i)) * E(k, j).pow(2));
    });
    out.emplace_back("3a", std::move(fam));
  }
  {  // (3)(b) hexagon relator, i < j < k
    std::vector<Word> fam;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          dedup_push(fam, seen,
                     (E(j, i) * E(i, j).inverse() * E(k, j).inverse() * E(j, k) * E(i, k) *
                      E(k, i).inverse())
                         .pow(2));
    out.emplace_back("3b", std::move(fam));
  }
  {  // (4) disjoint commutation
    std::vector<Word> fam;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (i != j && i != k && i != l && j != k && j != l && k != l)
              dedup_push(fam, seen, commutator(E(i, j), E(k, l)));
    out.emplace_back("4", std::move(fam));
  }
  return out;
}

std::vector<Word> relators_ef(int n) {
  std::vector<Word> out;
  for (auto& [name, fam] : relators_ef_by_family(n))
    out.insert(out.end(), fam.begin(), fam.end());
  return out;
}

std::vector<std::pair<std::string, std::vector<Word>>> relators_y_by_family(int g) {
  if (g < 2) throw std::invalid_argument("relators_y: g must be >= 2");
  std::vector<std::pair<std::string, std::vector<Word>>> out;
  std::set<Word> seen;

  {  // (1) Y_ij^2
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g; ++j)
        if (j != i) dedup_push(fam, seen, Y(i, j).pow(2));
    out.emplace_back("1", std::move(fam));
  }
  {  // (2) [Y_ik, Y_jk]
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g - 1; ++j)
        for (int k = 1; k <= g; ++k)
          if (i != j && k != i && k != j)
            dedup_push(fam, seen, commutator(Y(i, k), Y(j, k)));
    out.emplace_back("2", std::move(fam));
  }
  {  // (3) [Y_ij, Y_ik Y_jk]
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g - 1; ++j)
        for (int k = 1; k <= g; ++k)
          if (i != j && k != i && k != j)
            dedup_push(fam, seen, commutator(Y(i, j), Y(i, k) * Y(j, k)));
    out.emplace_back("3", std::move(fam));
  }
  {  // (4) [Y_ij, Y_kl]
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g; ++j)
        for (int k = 1; k <= g - 1; ++k)
          for (int l = 1; l <= g; ++l)
            if (i != j && i != k && i != l && j != k && j != l && k != l)
              dedup_push(fam, seen, commutator(Y(i, j), Y(k, l)));
    out.emplace_back("4", std::move(fam));
  }
  {  // (5) (Y_ij Y_ik Y_il)^2
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g; ++j)
        for (int k = 1; k <= g; ++k)
          for (int l = 1; l <= g; ++l)
            if (j != i && k != i && l != i && j != k && j != l && k != l)
              dedup_push(fam, seen, (Y(i, j) * Y(i, k) * Y(i, l)).pow(2));
    out.emplace_back("5", std::move(fam));
  }
  {  // (6) (Y_ji Y_ij Y_kj Y_jk Y_ik Y_ki)^2
    std::vector<Word> fam;
    for (int i = 1; i <= g - 1; ++i)
      for (int j = 1; j <= g - 1; ++j)
        for (int k = 1; k <= g - 1; ++k)
          if (i != j && j != k && i != k)
            dedup_push(fam, seen,
                       (Y(j, i) * Y(i, j) * Y(k, j) * Y(j, k) * Y(i, k) * Y(k, i)).pow(2));
    out.emplace_back("6", std::move(fam));
  }
  return out;
}

std::vector<Word> relators_y(int g) {
  std::vector<Word> out;
  for (auto& [name, fam] : relators_y_by_family(g))
    out.insert(out.end(), fam.begin(), fam.end());
  return out;
}

Word ef_to_y(const Word& w, int n) {
  const int g = n + 1;
  std::map<GeneratorSymbol, Word> image;
  for (const auto& l : w.letters()) {
    const auto& idx = l.sym.indices();
    switch (l.sym.family()) {
      case Family::E:
        if (idx[0] > n || idx[1] > n) throw std::invalid_argument("ef_to_y: index out of range");
        image.emplace(l.sym, Y(idx[0], idx[1]) * Y(idx[0], g));
        break;
      case Family::F:
        if (idx[0] > n) throw std::invalid_argument("ef_to_y: index out of range");
        image.emplace(l.sym, Y(idx[0], g));
        break;
      default:
        throw std::invalid_argument("ef_to_y: word must be over E and F, found " +
                                    to_string(l.sym));
    }
  }
  return substitute(w, image);
}

Word y_to_ef(const Word& w, int g) {
  std::map<GeneratorSymbol, Word> image;
  for (const auto& l : w.letters()) {
    if (l.sym.family() != Family::Ym)
      throw std::invalid_argument("y_to_ef: word must be over Ym, found " + to_string(l.sym));
    const auto& idx = l.sym.indices();
    if (idx[0] > g - 1 || idx[1] > g) throw std::invalid_argument("y_to_ef: index out of range");
    image.emplace(l.sym, idx[1] == g ? F(idx[0]) : E(idx[0], idx[1]) * F(idx[0]));
  }
  return substitute(w, image);
}

CongruenceElement f_map(const HomologyAutomorphism& l) {
  if (!l.is_mod2_trivial())
    throw std::invalid_argument("f_map: automorphism is not mod 2 trivial");
  return CongruenceElement(l.overline());
}

HomologyAutomorphism f_inverse(const CongruenceElement& a) {
  const int n = a.n();
  const int g = n + 1;
  std::vector<HomologyClass> images;
  images.reserve(g);
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> raw(g);
    for (int j = 1; j <= n; ++j) raw[j - 1] = a.matrix().at(j - 1, i - 1);
    images.push_back(HomologyClass::canonicalize(raw));
  }
  std::vector<mpz_class> raw(g);
  for (int j = 1; j <= n; ++j) {
    mpz_class row_sum = 0;
    for (int k = 1; k <= n; ++k) row_sum += a.matrix().at(j - 1, k - 1);
    raw[j - 1] = 1 - row_sum;
  }
  raw[g - 1] = 1;
  images.push_back(HomologyClass::canonicalize(raw));
  return HomologyAutomorphism(std::move(images));
}

std::vector<Word> normal_generators_from_presentation(
    const std::vector<Word>& relators, const std::map<GeneratorSymbol, Word>& carrier) {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(substitute(r, carrier));
  return out;
}

}  // namespace torelli
