#include "torelli/mcg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torelli {

namespace {

Word Ys(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::Ys, {i, j}), std::move(e));
}

Word Ym(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::Ym, {i, j}), std::move(e));
}

Word T4(Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::T, {1, 2, 3, 4}), std::move(e));
}

Word slide_tail(int g, Family fam) {
  Word out;
  for (int m = 5; m <= g; ++m) {
    for (int j = m - 1; j >= 5; --j)
      out = out * Word::letter(GeneratorSymbol(fam, {m, j}), -2);
    for (int j = 4; j >= 1; --j)
      out = out * Word::letter(GeneratorSymbol(fam, {m, j}), -1);
  }
  return out;
}

HomologyAutomorphism letter_action(const GeneratorSymbol& sym, int g, const Convention& conv) {
  switch (sym.family()) {
    case Family::Ys: {
      const int i = sym.indices()[0], j = sym.indices()[1];
      if (i > g || j > g)
        throw std::invalid_argument("homology_action: index out of range in " + to_string(sym));
      return slide_action(i, j, g);
    }
    case Family::T:
    case Family::Tp:
      return twist_action(sym.indices(), conv.twist_direction, g);
    default:
      throw std::invalid_argument("homology_action: unsupported symbol " + to_string(sym) +
                                  " (no specified action on homology)");
  }
}

}  // namespace

HomologyAutomorphism homology_action(const Word& w, int g, const Convention& conv) {
  HomologyAutomorphism acc = HomologyAutomorphism::identity(g);
  for (const auto& l : w.letters())
    acc = compose(acc, letter_action(l.sym, g, conv).pow(l.exp));
  return acc;
}

Word crosscap_push(int i, const Word& u, int g) {
  if (i < 1 || i > g) throw std::invalid_argument("crosscap_push: i out of range");
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    if (it->sym.family() != Family::G)
      throw std::invalid_argument("crosscap_push: word must be over G, found " + to_string(it->sym));
    const int j = it->sym.indices()[0];
    if (j > g - 1) throw std::invalid_argument("crosscap_push: loop index out of range");
    const int target = j < i ? j : j + 1;
    out.push_back(Letter{GeneratorSymbol(Family::Ys, {i, target}), it->exp});
  }
  return Word(std::move(out));
}

bool is_torelli(const Word& w, int g, const Convention& conv) {
  return homology_action(w, g, conv).is_identity();
}

std::vector<std::pair<int, Word>> prop41_items(int g) {
  if (g < 4) throw std::invalid_argument("prop41_items: g must be >= 4");
  std::vector<std::pair<int, Word>> out;
  std::set<Word> seen;
  auto add = [&](int family, Word w) {
    if (seen.insert(w).second) out.emplace_back(family, std::move(w));
  };
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g; ++j)
      if (j != i) add(1, Ys(i, j).pow(2));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g - 1; ++j)
      for (int k = 1; k <= g; ++k)
        if (i != j && k != i && k != j) add(2, commutator(Ys(i, k), Ys(j, k)));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g - 1; ++j)
      for (int k = 1; k <= g; ++k)
        if (i != j && k != i && k != j) add(3, commutator(Ys(i, j), Ys(i, k) * Ys(j, k)));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g; ++j)
      for (int k = 1; k <= g - 1; ++k)
        for (int l = 1; l <= g; ++l)
          if (i != j && i != k && i != l && j != k && j != l && k != l)
            add(4, commutator(Ys(i, j), Ys(k, l)));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g; ++j)
      for (int k = 1; k <= g; ++k)
        for (int l = 1; l <= g; ++l)
          if (j != i && k != i && l != i && j != k && j != l && k != l)
            add(5, (Ys(i, j) * Ys(i, k) * Ys(i, l)).pow(2));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g - 1; ++j)
      for (int k = 1; k <= g - 1; ++k)
        if (i != j && j != k && i != k)
          add(6, (Ys(j, i) * Ys(i, j) * Ys(k, j) * Ys(j, k) * Ys(i, k) * Ys(k, i)).pow(2));
  add(7, T4(2) * t2_tail_word(g));
  return out;
}

std::vector<Word> prop42_templates() {
  return {
      Ys(1, 2).pow(2),
      commutator(Ys(1, 3), Ys(2, 3)),
      commutator(Ys(1, 2), Ys(1, 3) * Ys(2, 3)),
      commutator(Ys(1, 3), Ys(1, 2) * Ys(3, 2)),
      commutator(Ys(1, 2), Ys(3, 4)),
      commutator(Ys(1, 3), Ys(2, 4)),
      (Ys(1, 2) * Ys(1, 3) * Ys(1, 4)).pow(2),
      (Ys(2, 1) * Ys(1, 2) * Ys(3, 2) * Ys(2, 3) * Ys(1, 3) * Ys(3, 1)).pow(2),
  };
}

std::vector<Word> generator_list(GeneratorListKind kind, int g) {
  if (g < 4) throw std::invalid_argument("generator_list: g must be >= 4");
  std::vector<Word> out;
  switch (kind) {
    case GeneratorListKind::prop41:
      for (auto& item : prop41_items(g)) out.push_back(std::move(item.second));
      break;
    case GeneratorListKind::prop42:
      out = prop42_templates();
      out.push_back(T4(2) * t2_tail_word(g));
      break;
    case GeneratorListKind::cor51:
      out = {
          Ys(1, 2).pow(2),
          commutator(Ys(2, 3), Ys(1, 3).inverse()),
          commutator(Ys(1, 2), Ys(1, 3) * Ys(2, 3)),
          commutator(Ys(1, 3), Ys(3, 2) * Ys(1, 2)),
          commutator(Ys(1, 2), Ys(3, 4)),
          commutator(Ys(2, 3).pow(-2) * Ys(1, 3) * Ys(2, 3).pow(2), Ys(2, 4)),
          (Ys(1, 2) * Ys(1, 3) * Ys(1, 4)).pow(2),
          (Ys(2, 1).inverse() * Ys(1, 2) * Ys(3, 2) * Ys(2, 3).inverse() *
           Ys(1, 3).inverse() * Ys(3, 1))
              .pow(2),
          T4(2) * t2_tail_word(g),
      };
      break;
    case GeneratorListKind::szepietowski:
      for (int i = 1; i <= g - 1; ++i)
        for (int j = 1; j <= g; ++j)
          if (j != i) out.push_back(Ym(i, j));
      for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
          for (int k = j + 1; k <= g; ++k)
            for (int l = k + 1; l <= g; ++l)
              out.push_back(Word::letter(GeneratorSymbol(Family::T, {i, j, k, l}), 2));
      break;
    case GeneratorListKind::hs:
      for (int i = 1; i <= g - 1; ++i)
        for (int j = 1; j <= g; ++j)
          if (j != i) out.push_back(Ym(i, j));
      for (int j = 2; j <= g; ++j)
        for (int k = j + 1; k <= g; ++k)
          for (int l = k + 1; l <= g; ++l)
            out.push_back(Word::letter(GeneratorSymbol(Family::T, {1, j, k, l}), 2));
      break;
  }
  return out;
}

Word t2_tail_word(int g) {
  if (g < 4) throw std::invalid_argument("t2_tail_word: g must be >= 4");
  return slide_tail(g, Family::Ys);
}

Word t2_presentation_relator(int g) {
  if (g < 4) throw std::invalid_argument("t2_presentation_relator: g must be >= 4");
  return T4(2) * slide_tail(g, Family::Ym);
}

Word exampleA2_rhs(int g, int i) {
  if (i < 1 || i > g - 1) throw std::invalid_argument("exampleA2_rhs: i out of range");
  Word out;
  for (int m = 1; m <= g - 1; ++m) {
    if (m == i) continue;
    for (int j = m + 1; j <= g - 1; ++j) out = out * Ys(m, j).pow(2);
    out = out * Ys(m, i, -1) * Ys(m, g);
    if (m > i) out = out * Ys(m, i).pow(2);
  }
  return out;
}

Word eqII_rhs(int g, int i) {
  return exampleA2_rhs(g, i) * Ys(i, g);
}

std::vector<LemmaCase> lemma56_cases(int g) {
  if (g < 4) throw std::invalid_argument("lemma56_cases: g must be >= 4");

  Word l1, l2, l3;
  for (int m = g; m >= 4; --m) {
    Word block = Ys(m, 1) * Ys(m, 2);
    for (int j = 3; j <= m - 1; ++j) block = block * Ys(m, j).pow(2);
    l1 = l1 * block;

    block = Ys(m, 1).pow(2) * Ys(m, 2) * Ys(m, 3);
    for (int j = 4; j <= m - 1; ++j) block = block * Ys(m, j).pow(2);
    l2 = l2 * block;

    block = Ys(m, 3, -1) * Ys(m, 1);
    for (int j = 2; j <= m - 1; ++j) block = block * Ys(m, j).pow(2);
    l3 = l3 * block;
  }

  const Word t12 = Word::letter(GeneratorSymbol(Family::T, {1, 2}), 2);
  const Word t23 = Word::letter(GeneratorSymbol(Family::T, {2, 3}), 2);
  const Word t13 = Word::letter(GeneratorSymbol(Family::T, {1, 3}), -2);

  const Word hexagon = Ys(2, 1).inverse() * Ys(1, 2) * Ys(3, 2) * Ys(2, 3).inverse() *
                       Ys(1, 3).inverse() * Ys(3, 1);
  const Word d_lhs =
      Ys(3, 2).pow(-2) * Ys(3, 1).inverse() * hexagon.pow(2) * Ys(3, 1) * Ys(3, 2).pow(2);
  const Word r1 = Ys(3, 2).pow(-2) * Ys(3, 1).inverse() * l1 * Ys(3, 1) * Ys(3, 2).pow(2);
  const Word r2 = Ys(1, 2) * l2 * Ys(1, 2).inverse();
  const Word r3 = Ys(2, 3).inverse() * l3 * Ys(2, 3);
  const Word d_rhs = r1 * r3 * r2 * Ys(1, 2).pow(2) * Ys(3, 1).pow(2) * Ys(3, 2).pow(2);

  return {
      {"a", t12, l1 * Ys(3, 1) * Ys(3, 2), false},
      {"b", t23, l2 * Ys(1, 2) * Ys(1, 3), false},
      {"c", t13, l3 * Ys(2, 3) * Ys(2, 1), false},
      {"d", d_lhs, d_rhs, true},
  };
}

std::vector<PushCase> appendixA1_cases(int g, int h) {
  if (h < 2 || h > g) throw std::invalid_argument("appendixA1_cases: need 2 <= h <= g");
  std::vector<PushCase> out;
  for (int m = 1; m <= h - 1; ++m) {
    Word pushword;
    for (int j = h - 1; j >= m; --j)
      pushword = pushword * Word::letter(GeneratorSymbol(Family::G, {j}), 2);
    Word expected;
    for (int j = m + 1; j <= h; ++j) expected = expected * Ys(m, j).pow(2);
    out.push_back(PushCase{m, std::move(pushword), std::move(expected)});
  }
  return out;
}

Word relabel(const Word& w, const std::map<int, int>& pi) {
  std::set<int> images;
  for (const auto& [from, to] : pi) {
    (void)from;
    if (!images.insert(to).second)
      throw std::invalid_argument("relabel: index map is not injective");
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) {
    std::vector<int> idx;
    idx.reserve(l.sym.indices().size());
    for (int i : l.sym.indices()) {
      auto it = pi.find(i);
      if (it == pi.end())
        throw std::invalid_argument("relabel: index " + std::to_string(i) + " is not mapped");
      idx.push_back(it->second);
    }
    switch (l.sym.family()) {
      case Family::T:
      case Family::Tp:
      case Family::U:
        std::sort(idx.begin(), idx.end());
        break;
      default:
        break;
    }
    out.push_back(Letter{GeneratorSymbol(l.sym.family(), std::move(idx)), l.exp});
  }
  return Word(std::move(out));
}

namespace {

std::vector<int> collect_indices(const Word& w) {
  std::set<int> idx;
  for (const auto& l : w.letters())
    for (int i : l.sym.indices()) idx.insert(i);
  return {idx.begin(), idx.end()};
}

bool has_sorted_tuple_family(const Word& w) {
  for (const auto& l : w.letters())
    switch (l.sym.family()) {
      case Family::T:
      case Family::Tp:
      case Family::U:
        return true;
      default:
        break;
    }
  return false;
}

// Positional unification: relabeling preserves letter order, families and
// exponents, so for ordered-index families the assignment is forced.
std::optional<std::map<int, int>> unify(const Word& tmpl, const Word& item) {
  if (tmpl.size() != item.size()) return std::nullopt;
  std::map<int, int> pi;
  std::map<int, int> inv;
  for (std::size_t p = 0; p < tmpl.size(); ++p) {
    const auto& a = tmpl.letters()[p];
    const auto& b = item.letters()[p];
    if (a.sym.family() != b.sym.family() || a.exp != b.exp) return std::nullopt;
    if (a.sym.indices().size() != b.sym.indices().size()) return std::nullopt;
    for (std::size_t k = 0; k < a.sym.indices().size(); ++k) {
      const int from = a.sym.indices()[k];
      const int to = b.sym.indices()[k];
      auto [it, inserted] = pi.emplace(from, to);
      if (!inserted && it->second != to) return std::nullopt;
      auto [jt, fresh] = inv.emplace(to, from);
      if (!fresh && jt->second != from) return std::nullopt;
    }
  }
  return pi;
}

}  // namespace

std::optional<MatchResult> match_template(const Word& item,
                                          const std::vector<Word>& templates) {
  for (std::size_t t = 0; t < templates.size(); ++t) {
    const Word& tmpl = templates[t];
    if (tmpl.size() != item.size()) continue;
    if (!has_sorted_tuple_family(tmpl) && !has_sorted_tuple_family(item)) {
      auto pi = unify(tmpl, item);
      if (pi && relabel(tmpl, *pi) == item) return MatchResult{t, std::move(*pi)};
      continue;
    }
    // Sorted-tuple families admit non-positional assignments; fall back to
    // trying every bijection of the index sets.
    const auto tmpl_idx = collect_indices(tmpl);
    auto perm = collect_indices(item);
    if (tmpl_idx.size() != perm.size()) continue;
    std::sort(perm.begin(), perm.end());
    do {
      std::map<int, int> pi;
      for (std::size_t k = 0; k < tmpl_idx.size(); ++k) pi[tmpl_idx[k]] = perm[k];
      if (relabel(tmpl, pi) == item) return MatchResult{t, std::move(pi)};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::pair<Word, Word> bp_chain_identity(int h) {
  if (h < 1) throw std::invalid_argument("bp_chain_identity: h must be >= 1");
  auto tw = [](int t) { return Word::letter(GeneratorSymbol(Family::G, {t + 1})); };
  const Word lhs = tw(0) * tw(h).inverse();
  Word rhs;
  for (int t = 0; t < h; ++t) rhs = rhs * tw(t) * tw(t + 1).inverse();
  return {lhs, rhs};
}

}  // namespace torelli
