#include "torelli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "torelli/congruence.hpp"

namespace torelli::verify {

namespace {

using nlohmann::ordered_json;

std::string pad(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

std::string pad2(int value) { return pad(value, 2); }

Word Ys(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::Ys, {i, j}), std::move(e));
}

Word Ym(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::Ym, {i, j}), std::move(e));
}

Word Ew(int i, int j, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::E, {i, j}), std::move(e));
}

Word Fw(int i, Exp e = 1) { return Word::letter(GeneratorSymbol(Family::F, {i}), std::move(e)); }

Word Gw(int j, Exp e = 1) { return Word::letter(GeneratorSymbol(Family::G, {j}), std::move(e)); }

Word Tw(std::vector<int> idx, Exp e = 1) {
  return Word::letter(GeneratorSymbol(Family::T, std::move(idx)), std::move(e));
}

using CaseFn = std::function<std::pair<bool, std::string>()>;

struct PendingCase {
  std::string id;
  bool informative = false;
  CaseFn run;
};

SuiteResult execute_suite(std::string name, std::vector<PendingCase> cases, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SuiteCase> results(cases.size());
  auto run_one = [&](std::size_t i) {
    SuiteCase sc;
    sc.id = cases[i].id;
    try {
      auto [ok, detail] = cases[i].run();
      if (cases[i].informative)
        sc.status = ok ? "informative-pass" : "informative-fail";
      else
        sc.status = ok ? "pass" : "fail";
      sc.detail = std::move(detail);
    } catch (const std::exception& e) {
      sc.status = "error";
      sc.detail = e.what();
    }
    results[i] = std::move(sc);
  };
  if (jobs <= 1 || cases.size() < 2) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    const int nthreads = std::min<int>(jobs, static_cast<int>(cases.size()));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cases.size()) return;
          run_one(i);
        }
      });
    for (auto& th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
  SuiteResult sr;
  sr.name = std::move(name);
  for (const auto& c : results)
    (c.status == "pass" || c.status == "informative-pass") ? ++sr.pass : ++sr.fail;
  sr.cases = std::move(results);
  sr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sr;
}

std::uint64_t case_seed(std::uint64_t base, std::uint64_t salt) {
  // splitmix64 step keeps per-case streams independent of case order.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::pair<bool, std::string> check_identity_relators(const std::vector<Word>& words, int n) {
  for (const auto& w : words) {
    const IntMatrix m = eval_word(w, n).matrix();
    if (!(m == IntMatrix::identity(n)))
      return {false, "relator " + to_string(w) + " evaluates to " + to_string(m)};
  }
  return {true, "count=" + std::to_string(words.size())};
}

// ---------------------------------------------------------------------------
// relators-ef / relators-y

std::vector<PendingCase> build_relators_ef(const RunParams& p) {
  std::vector<PendingCase> cases;
  for (int n = 1; n <= p.n_max; ++n)
    for (const auto& [fam, words] : relators_ef_by_family(n))
      cases.push_back({"relators-ef/n=" + pad2(n) + "/family=" + fam, false,
                       [n, words = words] { return check_identity_relators(words, n); }});
  return cases;
}

std::vector<PendingCase> build_relators_y(const RunParams& p) {
  std::vector<PendingCase> cases;
  for (int g = 2; g <= p.n_max + 1; ++g)
    for (const auto& [fam, words] : relators_y_by_family(g))
      cases.push_back({"relators-y/g=" + pad2(g) + "/family=" + fam, false,
                       [g, words = words] { return check_identity_relators(words, g - 1); }});
  return cases;
}

// ---------------------------------------------------------------------------
// rewrite

struct ChainShape {
  std::string label;
  std::vector<std::pair<Word, Word>> pairs;
};

std::vector<ChainShape> presentation_proof_chains(int n) {
  const int g = n + 1;
  std::vector<ChainShape> shapes;
  auto add = [&](std::string label) -> ChainShape& {
    shapes.push_back({std::move(label), {}});
    return shapes.back();
  };
  auto distinct2 = [&](auto&& f) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) f(i, j);
  };
  auto distinct3 = [&](auto&& f) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (i != j && j != k && i != k) f(i, j, k);
  };

  {
    auto& s = add("fwd-2-ltg");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ym(i, k) * Ym(j, k), Ym(j, k) * Ym(i, k));
    });
  }
  {
    auto& s = add("fwd-2-eqg");
    distinct2([&](int i, int j) { s.pairs.emplace_back(Ym(i, g) * Ym(j, g), Ym(j, g) * Ym(i, g)); });
  }
  {
    auto& s = add("fwd-3-ltg");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ym(i, j) * Ym(i, k) * Ym(j, k), Ym(i, k) * Ym(j, k) * Ym(i, j));
    });
  }
  {
    auto& s = add("fwd-3-eqg");
    distinct2([&](int i, int j) {
      s.pairs.emplace_back(Ym(i, j) * Ym(i, g) * Ym(j, g), Ym(i, g) * Ym(j, g) * Ym(i, j));
    });
  }
  {
    auto& s = add("fwd-4-ltg");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (i != j && i != k && i != l && j != k && j != l && k != l)
              s.pairs.emplace_back(Ym(i, j) * Ym(k, l), Ym(k, l) * Ym(i, j));
  }
  {
    auto& s = add("fwd-4-eqg");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ym(i, j) * Ym(k, g), Ym(k, g) * Ym(i, j));
    });
  }
  {
    auto& s = add("fwd-5-ltg");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (j == i || k == i || l == i) continue;
            const Word lhs = Ym(i, j) * Ym(i, k) * Ym(i, l);
            const Word mid = Ym(i, l) * Ym(i, k) * Ym(i, j);
            s.pairs.emplace_back(lhs, mid);
            s.pairs.emplace_back(mid, lhs.inverse());
          }
  }
  {
    auto& s = add("fwd-5-eqg");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          if (j == i || k == i) continue;
          const Word lhs = Ym(i, j) * Ym(i, k) * Ym(i, g);
          const Word mid = Ym(i, g) * Ym(i, k) * Ym(i, j);
          s.pairs.emplace_back(lhs, mid);
          s.pairs.emplace_back(mid, lhs.inverse());
        }
  }
  {
    auto& s = add("fwd-6");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(
          Ym(j, i) * Ym(i, j) * Ym(k, j) * Ym(j, k) * Ym(i, k) * Ym(k, i),
          Ew(j, i) * Ew(i, j, -1) * Ew(k, j, -1) * Ew(j, k) * Ew(i, k) * Ew(k, i, -1));
    });
  }
  {
    auto& s = add("conv-1");
    for (int i = 1; i <= n; ++i) s.pairs.emplace_back(Fw(i).pow(2), Ym(i, g).pow(2));
  }
  {
    auto& s = add("conv-2a");
    distinct2([&](int i, int j) {
      s.pairs.emplace_back((Ew(i, j) * Fw(i)).pow(2), Ym(i, j).pow(2));
    });
  }
  {
    auto& s = add("conv-2b");
    distinct2([&](int i, int j) {
      s.pairs.emplace_back((Ew(i, j) * Fw(j)).pow(2),
                           commutator(Ym(i, j), Ym(i, g) * Ym(j, g)));
    });
  }
  {
    auto& s = add("conv-2c");
    distinct2([&](int i, int j) {
      s.pairs.emplace_back((Fw(i) * Fw(j)).pow(2), Ym(i, g).pow(2) * Ym(j, g).pow(2));
    });
  }
  {
    auto& s = add("conv-3a-comm1");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ew(i, j) * Ew(i, k), Ew(i, k) * Ew(i, j));
    });
  }
  {
    auto& s = add("conv-3a-comm2");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ew(i, j) * Ew(k, j), Ew(k, j) * Ew(i, j));
    });
  }
  {
    auto& s = add("conv-3a-commF");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ew(i, j) * Fw(k), Fw(k) * Ew(i, j));
    });
  }
  {
    auto& s = add("conv-3a-ekj2");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(Ew(i, j) * Ew(k, i) * Ew(k, j).pow(2), Ew(k, i) * Ew(i, j));
    });
  }
  {
    auto& s = add("conv-3b");
    distinct3([&](int i, int j, int k) {
      s.pairs.emplace_back(
          Ew(j, i) * Ew(i, j, -1) * Ew(k, j, -1) * Ew(j, k) * Ew(i, k) * Ew(k, i, -1),
          Ym(j, i) * Ym(i, j) * Ym(k, j) * Ym(j, k) * Ym(i, k) * Ym(k, i));
    });
  }
  {
    auto& s = add("conv-4");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (i != j && i != k && i != l && j != k && j != l && k != l)
              s.pairs.emplace_back(Ew(i, j) * Ew(k, l), Ew(k, l) * Ew(i, j));
  }
  return shapes;
}

std::vector<PendingCase> build_rewrite(const RunParams& p) {
  std::vector<PendingCase> cases;
  const int n_hi = std::min(6, std::max(2, p.n_max));
  for (int n = 2; n <= n_hi; ++n) {
    cases.push_back({"rewrite/n=" + pad2(n) + "/relators-ef", false, [n] {
                       int count = 0;
                       for (const auto& w : relators_ef(n)) {
                         const Word y = ef_to_y(w, n);
                         if (!(eval_word(y, n) == eval_word(w, n)))
                           return std::pair<bool, std::string>{
                               false, "ef_to_y changed value of " + to_string(w)};
                         ++count;
                       }
                       return std::pair<bool, std::string>{true, "count=" + std::to_string(count)};
                     }});
    cases.push_back({"rewrite/n=" + pad2(n) + "/relators-y", false, [n] {
                       int count = 0;
                       for (const auto& w : relators_y(n + 1)) {
                         const Word ef = y_to_ef(w, n + 1);
                         if (!(eval_word(ef, n) == eval_word(w, n)))
                           return std::pair<bool, std::string>{
                               false, "y_to_ef changed value of " + to_string(w)};
                         ++count;
                       }
                       return std::pair<bool, std::string>{true, "count=" + std::to_string(count)};
                     }});
    cases.push_back(
        {"rewrite/n=" + pad2(n) + "/random-words", false, [n, seed = case_seed(p.seed, 100 + n)] {
           SeededRng rng(seed);
           for (int t = 0; t < 200; ++t) {
             const Word w = random_ef_word(rng, n, 30);
             const Word y = ef_to_y(w, n);
             if (!(eval_word(y, n) == eval_word(w, n)))
               return std::pair<bool, std::string>{false, "ef_to_y changed value of " + to_string(w)};
             const Word back = y_to_ef(y, n + 1);
             if (!(eval_word(back, n) == eval_word(w, n)))
               return std::pair<bool, std::string>{false, "y_to_ef changed value of " + to_string(y)};
           }
           return std::pair<bool, std::string>{true, "count=200"};
         }});
  }
  for (int n = 3; n <= n_hi; ++n)
    for (const auto& shape : presentation_proof_chains(n))
      cases.push_back({"rewrite/n=" + pad2(n) + "/chain=" + shape.label, false,
                       [n, pairs = shape.pairs] {
                         for (const auto& [lhs, rhs] : pairs)
                           if (!(eval_word(lhs, n) == eval_word(rhs, n)))
                             return std::pair<bool, std::string>{
                                 false, "lhs=" + to_string(lhs) + " -> " +
                                            to_string(eval_word(lhs, n).matrix()) +
                                            " rhs=" + to_string(rhs) + " -> " +
                                            to_string(eval_word(rhs, n).matrix())};
                         return std::pair<bool, std::string>{
                             true, "count=" + std::to_string(pairs.size())};
                       }});
  return cases;
}

// ---------------------------------------------------------------------------
// iso

std::vector<PendingCase> build_iso(const RunParams& p) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g) {
    const int n = g - 1;
    cases.push_back(
        {"iso/g=" + pad2(g) + "/roundtrip", false, [g, n, seed = case_seed(p.seed, 200 + g)] {
           SeededRng rng(seed);
           const HomologyClass c = HomologyClass::full_sum(g);
           for (int t = 0; t < 200; ++t) {
             const Word w = random_ef_word(rng, n, 30);
             const CongruenceElement a = eval_word(w, n);
             const HomologyAutomorphism lift = f_inverse(a);
             if (!lift.is_mod2_trivial())
               return std::pair<bool, std::string>{false, "lift of " + to_string(w) + " not mod 2 trivial"};
             if (!(lift.apply(c) == c))
               return std::pair<bool, std::string>{false, "lift of " + to_string(w) + " moves c"};
             if (!(f_map(lift) == a))
               return std::pair<bool, std::string>{false,
                                                   "f(f_inverse(A)) != A for " + to_string(a.matrix())};
             if (!(f_inverse(f_map(lift)) == lift))
               return std::pair<bool, std::string>{false,
                                                   "f_inverse(f(L)) != L for " + to_string(a.matrix())};
           }
           return std::pair<bool, std::string>{true, "count=200"};
         }});
    cases.push_back(
        {"iso/g=" + pad2(g) + "/multiplicative", false, [n, seed = case_seed(p.seed, 300 + g)] {
           SeededRng rng(seed);
           for (int t = 0; t < 100; ++t) {
             const HomologyAutomorphism l1 = f_inverse(eval_word(random_ef_word(rng, n, 20), n));
             const HomologyAutomorphism l2 = f_inverse(eval_word(random_ef_word(rng, n, 20), n));
             const CongruenceElement lhs = f_map(compose(l1, l2));
             const CongruenceElement rhs = f_map(l1) * f_map(l2);
             if (!(lhs == rhs))
               return std::pair<bool, std::string>{
                   false, "f not multiplicative: " + to_string(lhs.matrix()) +
                              " != " + to_string(rhs.matrix())};
           }
           return std::pair<bool, std::string>{true, "count=100"};
         }});
  }
  return cases;
}

// ---------------------------------------------------------------------------
// torelli-lists

std::vector<PendingCase> build_torelli_lists(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  const std::pair<GeneratorListKind, std::string> kinds[] = {
      {GeneratorListKind::prop41, "prop41"},
      {GeneratorListKind::prop42, "prop42"},
      {GeneratorListKind::cor51, "cor51"},
  };
  for (int g = 4; g <= p.g_max; ++g)
    for (const auto& [kind, kind_name] : kinds) {
      const auto words = generator_list(kind, g);
      for (std::size_t i = 0; i < words.size(); ++i)
        cases.push_back({"torelli-lists/g=" + pad2(g) + "/" + kind_name + "/item=" +
                             pad(static_cast<int>(i), 4),
                         false, [g, conv, w = words[i]] {
                           if (is_torelli(w, g, conv))
                             return std::pair<bool, std::string>{true, ""};
                           return std::pair<bool, std::string>{
                               false, to_string(w) + " acts as " +
                                          to_string(homology_action(w, g, conv))};
                         }});
    }
  return cases;
}

// ---------------------------------------------------------------------------
// eq2

std::vector<PendingCase> build_eq2(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g)
    for (int i = 1; i <= g - 1; ++i)
      cases.push_back({"eq2/g=" + pad2(g) + "/i=" + pad2(i), false, [g, i, conv] {
                         const HomologyAutomorphism lhs = homology_action(Ys(g, i), g, conv);
                         const HomologyAutomorphism rhs = homology_action(eqII_rhs(g, i), g, conv);
                         if (lhs == rhs) return std::pair<bool, std::string>{true, ""};
                         return std::pair<bool, std::string>{
                             false, "Ys[g,i] acts as " + to_string(lhs) + " but expansion acts as " +
                                        to_string(rhs)};
                       }});
  return cases;
}

// ---------------------------------------------------------------------------
// lemma56

std::vector<PendingCase> build_lemma56(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g)
    for (const auto& lc : lemma56_cases(g))
      cases.push_back({"lemma56/g=" + pad2(g) + "/case=" + lc.name, false, [g, conv, lc] {
                         const HomologyAutomorphism lhs = homology_action(lc.lhs, g, conv);
                         const HomologyAutomorphism rhs = homology_action(lc.rhs, g, conv);
                         if (!(lhs == rhs))
                           return std::pair<bool, std::string>{
                               false, "lhs acts as " + to_string(lhs) + " rhs acts as " + to_string(rhs)};
                         if (lc.expect_identity && !lhs.is_identity())
                           return std::pair<bool, std::string>{
                               false, "expected identity, got " + to_string(lhs)};
                         return std::pair<bool, std::string>{true, ""};
                       }});
  return cases;
}

// ---------------------------------------------------------------------------
// appendixA

std::vector<PendingCase> build_appendixA(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  const int a1_gmax = std::min(6, std::max(2, p.g_max));
  for (int g = 2; g <= a1_gmax; ++g)
    for (int h = 2; h <= g; ++h) {
      cases.push_back({"appendixA/a1-push/g=" + pad2(g) + "/h=" + pad2(h), false, [g, h] {
                         for (const auto& pc : appendixA1_cases(g, h)) {
                           const Word got = crosscap_push(pc.m, pc.pushword, g);
                           if (!(got == pc.expected))
                             return std::pair<bool, std::string>{
                                 false, "m=" + std::to_string(pc.m) + ": push gives " +
                                            to_string(got) + ", expected " + to_string(pc.expected)};
                         }
                         return std::pair<bool, std::string>{true, "count=" + std::to_string(h - 1)};
                       }});
      cases.push_back({"appendixA/a1-product/g=" + pad2(g) + "/h=" + pad2(h), false,
                       [g, h, conv] {
                         Word product;
                         for (const auto& pc : appendixA1_cases(g, h)) product = product * pc.expected;
                         if (is_torelli(product, g, conv))
                           return std::pair<bool, std::string>{true, ""};
                         return std::pair<bool, std::string>{
                             false, "product acts as " + to_string(homology_action(product, g, conv))};
                       }});
    }
  for (int g = 4; g <= p.g_max; ++g)
    for (int i = 1; i <= g - 1; ++i)
      cases.push_back(
          {"appendixA/a2/g=" + pad2(g) + "/i=" + pad2(i), false, [g, i, conv] {
             const HomologyAutomorphism expansion = homology_action(exampleA2_rhs(g, i), g, conv);
             const HomologyAutomorphism via_twist =
                 homology_action(Tw({i, g}, 2), g, conv);
             const HomologyAutomorphism via_slides =
                 homology_action(Ys(g, i) * Ys(i, g, -1), g, conv);
             if (!(expansion == via_twist))
               return std::pair<bool, std::string>{
                   false, "expansion acts as " + to_string(expansion) + " but T[i,g]^2 acts as " +
                              to_string(via_twist)};
             if (!(expansion == via_slides))
               return std::pair<bool, std::string>{
                   false, "expansion acts as " + to_string(expansion) +
                              " but Ys[g,i] Ys[i,g]^-1 acts as " + to_string(via_slides)};
             return std::pair<bool, std::string>{true, ""};
           }});
  return cases;
}

// ---------------------------------------------------------------------------
// t2-product

std::map<GeneratorSymbol, Word> prop41_carrier(int g) {
  std::map<GeneratorSymbol, Word> carrier;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      if (i != j)
        carrier.emplace(GeneratorSymbol(Family::Ym, {i, j}), Ys(i, j));
  carrier.emplace(GeneratorSymbol(Family::T, {1, 2, 3, 4}), Tw({1, 2, 3, 4}));
  return carrier;
}

std::vector<PendingCase> build_t2_product(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g) {
    cases.push_back({"t2-product/g=" + pad2(g) + "/push-expansion", false, [g] {
                       Word pushed;
                       for (int m = 5; m <= g; ++m) {
                         Word u;
                         for (int j = 1; j <= 4; ++j) u = u * Gw(j, -1);
                         for (int j = 5; j <= m - 1; ++j) u = u * Gw(j, -2);
                         pushed = pushed * crosscap_push(m, u, g);
                       }
                       const Word tail = t2_tail_word(g);
                       if (pushed == tail) return std::pair<bool, std::string>{true, ""};
                       return std::pair<bool, std::string>{
                           false, "pushed=" + to_string(pushed) + " tail=" + to_string(tail)};
                     }});
    cases.push_back({"t2-product/g=" + pad2(g) + "/action-inverse", false, [g, conv] {
                       const HomologyAutomorphism tail_action =
                           homology_action(t2_tail_word(g), g, conv);
                       const HomologyAutomorphism t2_inv =
                           twist_action({1, 2, 3, 4}, conv.twist_direction, g).pow(-2);
                       if (tail_action == t2_inv) return std::pair<bool, std::string>{true, ""};
                       return std::pair<bool, std::string>{
                           false, "tail acts as " + to_string(tail_action) + ", T^-2 acts as " +
                                      to_string(t2_inv)};
                     }});
    cases.push_back({"t2-product/g=" + pad2(g) + "/torelli", false, [g, conv] {
                       const Word w = Tw({1, 2, 3, 4}, 2) * t2_tail_word(g);
                       if (is_torelli(w, g, conv)) return std::pair<bool, std::string>{true, ""};
                       return std::pair<bool, std::string>{
                           false, to_string(w) + " acts as " + to_string(homology_action(w, g, conv))};
                     }});
    cases.push_back({"t2-product/g=" + pad2(g) + "/presentation", false, [g] {
                       std::vector<Word> relators = relators_y(g);
                       relators.push_back(t2_presentation_relator(g));
                       const std::vector<Word> pushed =
                           normal_generators_from_presentation(relators, prop41_carrier(g));
                       const std::vector<Word> expected =
                           generator_list(GeneratorListKind::prop41, g);
                       if (pushed == expected)
                         return std::pair<bool, std::string>{
                             true, "count=" + std::to_string(pushed.size())};
                       return std::pair<bool, std::string>{
                           false, "substituted presentation has " + std::to_string(pushed.size()) +
                                      " words, displayed list has " + std::to_string(expected.size())};
                     }});
  }
  return cases;
}

// ---------------------------------------------------------------------------
// counting

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::vector<PendingCase> build_counting(const RunParams& p) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g) {
    cases.push_back({"counting/g=" + pad2(g) + "/hs", false, [g] {
                       const auto n = generator_list(GeneratorListKind::hs, g).size();
                       const long long want = 1ll * (g - 1) * (g - 1) + binom(g - 1, 3);
                       const long long rank = binom(g, 3) + binom(g, 2);
                       if (static_cast<long long>(n) == want && want == rank)
                         return std::pair<bool, std::string>{true, "count=" + std::to_string(n)};
                       return std::pair<bool, std::string>{
                           false, "count=" + std::to_string(n) + " expected=" + std::to_string(want) +
                                      " rank=" + std::to_string(rank)};
                     }});
    cases.push_back({"counting/g=" + pad2(g) + "/szepietowski", false, [g] {
                       const auto n = generator_list(GeneratorListKind::szepietowski, g).size();
                       const long long want = 1ll * (g - 1) * (g - 1) + binom(g, 4);
                       if (static_cast<long long>(n) == want)
                         return std::pair<bool, std::string>{true, "count=" + std::to_string(n)};
                       return std::pair<bool, std::string>{
                           false, "count=" + std::to_string(n) + " expected=" + std::to_string(want)};
                     }});
    cases.push_back({"counting/g=" + pad2(g) + "/cor51", false, [g] {
                       const auto n = generator_list(GeneratorListKind::cor51, g).size();
                       return std::pair<bool, std::string>{n == 9, "count=" + std::to_string(n)};
                     }});
    cases.push_back({"counting/g=" + pad2(g) + "/prop42", false, [g] {
                       const auto n = generator_list(GeneratorListKind::prop42, g).size();
                       return std::pair<bool, std::string>{n == 9, "count=" + std::to_string(n)};
                     }});
    cases.push_back({"counting/g=" + pad2(g) + "/prop41", false, [g] {
                       const auto n = generator_list(GeneratorListKind::prop41, g).size();
                       return std::pair<bool, std::string>{true, "count=" + std::to_string(n)};
                     }});
  }
  return cases;
}

// ---------------------------------------------------------------------------
// chain

std::vector<PendingCase> build_chain(const RunParams&) {
  std::vector<PendingCase> cases;
  for (int h = 1; h <= 10; ++h)
    cases.push_back({"chain/h=" + pad2(h), false, [h] {
                       const auto [lhs, rhs] = bp_chain_identity(h);
                       if (!(lhs == rhs))
                         return std::pair<bool, std::string>{
                             false, "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs)};
                       if (rhs.size() != 2)
                         return std::pair<bool, std::string>{
                             false, "telescoped length " + std::to_string(rhs.size())};
                       return std::pair<bool, std::string>{true, ""};
                     }});
  return cases;
}

// ---------------------------------------------------------------------------
// relabel

std::vector<PendingCase> build_relabel(const RunParams& p, const Convention& conv) {
  std::vector<PendingCase> cases;
  for (int g = 4; g <= p.g_max; ++g) {
    const auto items = prop41_items(g);
    const auto templates = prop42_templates();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].first == 7) continue;
      cases.push_back({"relabel/g=" + pad2(g) + "/item=" + pad(static_cast<int>(i), 4), false,
                       [w = items[i].second, templates] {
                         const auto m = match_template(w, templates);
                         if (!m)
                           return std::pair<bool, std::string>{
                               false, "no template matches " + to_string(w)};
                         std::ostringstream os;
                         os << "template=" << m->template_index;
                         return std::pair<bool, std::string>{true, os.str()};
                       }});
    }
    // Informative: relabel the (1,2,3,4) tail generator to other quadruples
    // by the order-preserving index map and report whether it stays Torelli.
    const Word item7 = Tw({1, 2, 3, 4}, 2) * t2_tail_word(g);
    for (int j = 2; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k)
        for (int l = k + 1; l <= g; ++l) {
          if (j == 2 && k == 3 && l == 4) continue;
          cases.push_back(
              {"relabel/g=" + pad2(g) + "/quad=1-" + std::to_string(j) + "-" + std::to_string(k) +
                   "-" + std::to_string(l),
               true, [g, j, k, l, item7, conv] {
                 std::map<int, int> pi{{1, 1}, {2, j}, {3, k}, {4, l}};
                 std::vector<int> rest;
                 for (int m = 1; m <= g; ++m)
                   if (m != 1 && m != j && m != k && m != l) rest.push_back(m);
                 for (int m = 5; m <= g; ++m) pi[m] = rest[m - 5];
                 const Word relabeled = relabel(item7, pi);
                 if (is_torelli(relabeled, g, conv))
                   return std::pair<bool, std::string>{true, ""};
                 return std::pair<bool, std::string>{
                     false, to_string(relabeled) + " acts as " +
                                to_string(homology_action(relabeled, g, conv))};
               }});
        }
  }
  return cases;
}

}  // namespace

bool is_gating_failure(const SuiteCase& c) {
  return c.status == "fail" || c.status == "error";
}

ConventionSearchResult convention_search() {
  ConventionSearchResult out;
  for (int d : {+1, -1}) {
    Convention conv;
    conv.twist_direction = d;
    std::string first_fail;

    const auto lemma = lemma56_cases(4);
    if (!(homology_action(lemma[0].lhs, 4, conv) == homology_action(lemma[0].rhs, 4, conv)))
      first_fail = "lemma56/g=04/case=a";

    if (first_fail.empty())
      for (int i = 1; i <= 4 && first_fail.empty(); ++i)
        for (int j = i + 1; j <= 4 && first_fail.empty(); ++j) {
          const HomologyAutomorphism lhs =
              homology_action(Ys(j, i) * Ys(i, j, -1), 4, conv);
          const HomologyAutomorphism rhs = twist_action({i, j}, d, 4).pow(2);
          if (!(lhs == rhs))
            first_fail = "t-square/g=04/i=" + pad2(i) + ",j=" + pad2(j);
        }

    if (first_fail.empty() &&
        !is_torelli(Tw({1, 2, 3, 4}, 2) * t2_tail_word(5), 5, conv))
      first_fail = "t2-product/g=05/torelli";

    out.candidates.push_back({d, first_fail.empty(), first_fail});
  }

  int winners = 0;
  for (const auto& c : out.candidates)
    if (c.passed) {
      ++winners;
      out.chosen.twist_direction = c.twist_direction;
    }
  if (winners != 1) {
    std::ostringstream os;
    os << "convention search: expected exactly one passing twist direction, got " << winners
       << "\n";
    for (const auto& c : out.candidates)
      os << "  d=" << (c.twist_direction > 0 ? "+1" : "-1") << " "
         << (c.passed ? "passed" : "first failure: " + c.first_failing_case) << "\n";
    throw std::runtime_error(os.str());
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relators-ef", "relators-y", "rewrite",  "iso",      "torelli-lists", "eq2",
      "lemma56",     "appendixA",  "t2-product", "counting", "chain",         "relabel",
  };
  return names;
}

SuiteResult run_suite(const std::string& name, const RunParams& params, const Convention& conv) {
  std::vector<PendingCase> cases;
  if (name == "relators-ef") cases = build_relators_ef(params);
  else if (name == "relators-y") cases = build_relators_y(params);
  else if (name == "rewrite") cases = build_rewrite(params);
  else if (name == "iso") cases = build_iso(params);
  else if (name == "torelli-lists") cases = build_torelli_lists(params, conv);
  else if (name == "eq2") cases = build_eq2(params, conv);
  else if (name == "lemma56") cases = build_lemma56(params, conv);
  else if (name == "appendixA") cases = build_appendixA(params, conv);
  else if (name == "t2-product") cases = build_t2_product(params, conv);
  else if (name == "counting") cases = build_counting(params);
  else if (name == "chain") cases = build_chain(params);
  else if (name == "relabel") cases = build_relabel(params, conv);
  else throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  return execute_suite(name, std::move(cases), params.jobs);
}

VerificationReport run_all(const RunParams& params) {
  VerificationReport report;
  report.seed = params.seed;
  report.convention = convention_search();
  for (const auto& name : suite_names())
    report.suites.push_back(run_suite(name, params, report.convention.chosen));
  return report;
}

bool has_gating_failures(const VerificationReport& report) {
  for (const auto& suite : report.suites)
    for (const auto& c : suite.cases)
      if (is_gating_failure(c)) return true;
  return false;
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["schema"] = "torelli-verify/1";
  j["seed"] = report.seed;
  ordered_json conv;
  conv["twist_direction"] = report.convention.chosen.twist_direction;
  conv["sigma_start"] = std::string(1, report.convention.chosen.sigma_start);
  conv["slide_rule"] = report.convention.chosen.slide_rule;
  ordered_json cands = ordered_json::array();
  for (const auto& c : report.convention.candidates) {
    ordered_json jc;
    jc["twist_direction"] = c.twist_direction;
    jc["passed"] = c.passed;
    jc["first_failing_case"] = c.first_failing_case;
    cands.push_back(std::move(jc));
  }
  conv["candidates"] = std::move(cands);
  j["convention"] = std::move(conv);
  ordered_json suites = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json js;
    js["name"] = s.name;
    js["pass"] = s.pass;
    js["fail"] = s.fail;
    js["wall_ms"] = s.wall_ms;
    ordered_json jcases = ordered_json::array();
    for (const auto& c : s.cases) {
      ordered_json jc;
      jc["id"] = c.id;
      jc["status"] = c.status;
      jc["detail"] = c.detail;
      jcases.push_back(std::move(jc));
    }
    js["cases"] = std::move(jcases);
    suites.push_back(std::move(js));
  }
  j["suites"] = std::move(suites);
  return j.dump(2) + "\n";
}

Word random_ef_word(SeededRng& rng, int n, int max_len) {
  const int len = 1 + rng.below(max_len);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (int t = 0; t < len; ++t) {
    const Exp e = rng.below(2) == 0 ? 1 : -1;
    if (n >= 2 && rng.below(2) == 0) {
      const int i = 1 + rng.below(n);
      int j = 1 + rng.below(n - 1);
      if (j >= i) ++j;
      letters.push_back(Letter{GeneratorSymbol(Family::E, {i, j}), e});
    } else {
      letters.push_back(Letter{GeneratorSymbol(Family::F, {1 + rng.below(n)}), e});
    }
  }
  return Word(std::move(letters));
}

namespace {

GeneratorSymbol random_symbol(SeededRng& rng) {
  constexpr int kMaxIndex = 6;
  switch (rng.below(7)) {
    case 0: {
      const int i = 1 + rng.below(kMaxIndex);
      int j = 1 + rng.below(kMaxIndex - 1);
      if (j >= i) ++j;
      return GeneratorSymbol(Family::E, {i, j});
    }
    case 1:
      return GeneratorSymbol(Family::F, {1 + rng.below(kMaxIndex)});
    case 2: {
      const int i = 1 + rng.below(kMaxIndex);
      int j = 1 + rng.below(kMaxIndex - 1);
      if (j >= i) ++j;
      return GeneratorSymbol(Family::Ym, {i, j});
    }
    case 3: {
      const int i = 1 + rng.below(kMaxIndex);
      int j = 1 + rng.below(kMaxIndex - 1);
      if (j >= i) ++j;
      return GeneratorSymbol(Family::Ys, {i, j});
    }
    case 4: {
      std::vector<int> pool{1, 2, 3, 4, 5, 6};
      for (int t = 5; t > 0; --t) std::swap(pool[t], pool[rng.below(t + 1)]);
      const int size = rng.below(2) == 0 ? 2 : 4;
      std::vector<int> idx(pool.begin(), pool.begin() + size);
      std::sort(idx.begin(), idx.end());
      return GeneratorSymbol(rng.below(2) == 0 ? Family::T : Family::Tp, std::move(idx));
    }
    case 5: {
      const int i = 1 + rng.below(kMaxIndex - 1);
      const int j = i + 1 + rng.below(kMaxIndex - i);
      return GeneratorSymbol(Family::U, {i, j});
    }
    default:
      return GeneratorSymbol(Family::G, {1 + rng.below(kMaxIndex)});
  }
}

std::vector<Letter> random_raw_letters(SeededRng& rng, int max_len) {
  const int len = rng.below(max_len + 1);
  std::vector<Letter> raw;
  raw.reserve(len);
  for (int t = 0; t < len; ++t) {
    // Re-use the previous symbol a third of the time so reduction has work.
    GeneratorSymbol sym = (!raw.empty() && rng.below(3) == 0) ? raw.back().sym : random_symbol(rng);
    const int e = rng.below(7) - 3;
    raw.push_back(Letter{std::move(sym), e});
  }
  return raw;
}

}  // namespace

std::vector<std::string> word_property_failures(std::uint64_t seed, int cases_per_property) {
  std::vector<std::string> failures;
  SeededRng rng(seed);
  auto record = [&](const std::string& what) { failures.push_back(what); };

  for (int t = 0; t < cases_per_property; ++t) {  // free reduction
    const auto raw = random_raw_letters(rng, 12);
    const Word w(raw);
    if (!(Word(w.letters()) == w)) record("reduce not idempotent on " + to_string(w));
    if (w.size() > raw.size()) record("reduction grew a word");
  }
  for (int t = 0; t < cases_per_property; ++t) {  // associativity
    const Word a(random_raw_letters(rng, 8));
    const Word b(random_raw_letters(rng, 8));
    const Word c(random_raw_letters(rng, 8));
    if (!((a * b) * c == a * (b * c)))
      record("associativity failed for " + to_string(a) + " | " + to_string(b) + " | " + to_string(c));
  }
  for (int t = 0; t < cases_per_property; ++t) {  // inverses
    const Word a(random_raw_letters(rng, 10));
    if (!(a * a.inverse()).empty()) record("a * a^-1 not empty for " + to_string(a));
    if (!(a.inverse().inverse() == a)) record("inverse not involutive for " + to_string(a));
  }
  for (int t = 0; t < cases_per_property; ++t) {  // substitution homomorphism
    const Word a(random_raw_letters(rng, 6));
    const Word b(random_raw_letters(rng, 6));
    std::map<GeneratorSymbol, Word> image;
    for (const Word* w : {&a, &b})
      for (const auto& l : w->letters())
        if (!image.count(l.sym)) {
          Word img;
          const int len = 1 + rng.below(2);
          for (int q = 0; q < len; ++q)
            img = img * Word::letter(random_symbol(rng), rng.below(2) == 0 ? 1 : -1);
          image.emplace(l.sym, std::move(img));
        }
    if (!(substitute(a * b, image) == substitute(a, image) * substitute(b, image)))
      record("substitution not homomorphic for " + to_string(a) + " | " + to_string(b));
    if (!(substitute(a.inverse(), image) == substitute(a, image).inverse()))
      record("substitution does not commute with inverse for " + to_string(a));
  }
  for (int t = 0; t < cases_per_property; ++t) {  // parser round trip
    const Word w(random_raw_letters(rng, 10));
    const std::string text = to_string(w);
    Word back;
    try {
      back = parse_word(text);
    } catch (const std::exception& e) {
      record("parse failed on '" + text + "': " + e.what());
      continue;
    }
    if (!(back == w)) record("round trip changed '" + text + "' to '" + to_string(back) + "'");
  }
  return failures;
}

}  // namespace torelli::verify
