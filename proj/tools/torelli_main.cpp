#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "torelli/congruence.hpp"
#include "torelli/mcg.hpp"
#include "torelli/verify.hpp"

namespace {

using namespace torelli;

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

bool looks_like_matrix(const std::string& text) {
  std::size_t p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos || text[p] != '[') return false;
  p = text.find_first_not_of(" \t\r\n", p + 1);
  if (p == std::string::npos || text[p] != '[') return false;
  p = text.find_first_not_of(" \t\r\n", p + 1);
  return p != std::string::npos && (std::isdigit(static_cast<unsigned char>(text[p])) ||
                                    text[p] == '-' || text[p] == '+');
}

void print_automorphism(const HomologyAutomorphism& a) {
  for (int i = 1; i <= a.genus(); ++i)
    std::cout << 'c' << i << " -> " << to_string(a.images()[i - 1]) << "\n";
}

int run_verify(const std::string& suite, int g_max, int n_max, std::uint64_t seed, int jobs,
               const std::string& json_path) {
  verify::RunParams params;
  params.g_max = g_max;
  params.n_max = n_max;
  params.seed = seed;
  params.jobs = jobs;

  verify::VerificationReport report;
  report.seed = seed;
  try {
    report.convention = verify::convention_search();
  } catch (const std::runtime_error& e) {
    std::cerr << e.what();
    return kExitFailures;
  }
  std::cout << "convention: twist_direction="
            << (report.convention.chosen.twist_direction > 0 ? "+1" : "-1") << "\n";

  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(suite);
  }
  bool failures = false;
  for (const auto& name : names) {
    const auto result = verify::run_suite(name, params, report.convention.chosen);
    int gating_failures = 0;
    for (const auto& c : result.cases)
      if (verify::is_gating_failure(c)) {
        ++gating_failures;
        std::cout << "  FAIL " << c.id << ": " << c.detail << "\n";
      }
    failures = failures || gating_failures > 0;
    std::printf("suite %-14s %4d pass %4d fail  (%.1f ms)\n", result.name.c_str(), result.pass,
                result.fail, result.wall_ms);
    report.suites.push_back(result);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return kExitUsage;
    }
    out << verify::report_to_json(report);
    std::cout << "report written to " << json_path << "\n";
  }
  return failures ? kExitFailures : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the level 2 congruence subgroup algebra and the Torelli "
               "generator suites for non-orientable surfaces"};
  app.require_subcommand(1);

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  int g_max = 8, n_max = 8, jobs = 1;
  std::uint64_t seed = 0;
  std::string json_path;
  cmd_verify->add_option("--suite", suite, "suite name or 'all'");
  cmd_verify->add_option("--g-max", g_max, "largest genus in the grids");
  cmd_verify->add_option("--n-max", n_max, "largest matrix size in the grids");
  cmd_verify->add_option("--seed", seed, "seed for randomized checks");
  cmd_verify->add_option("--jobs", jobs, "worker threads per suite");
  cmd_verify->add_option("--json", json_path, "write the JSON report here");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a word");
  int eval_g = 0, eval_n = 0;
  std::string eval_word_text, eval_as = "word";
  cmd_eval->add_option("--g", eval_g, "genus for homology evaluation");
  cmd_eval->add_option("--n", eval_n, "matrix size (defaults to g-1)");
  cmd_eval->add_option("--word", eval_word_text, "word, or a bracketed integer matrix")->required();
  cmd_eval->add_option("--as", eval_as, "matrix | homology | word")
      ->check(CLI::IsMember({"matrix", "homology", "word"}));

  auto* cmd_rewrite = app.add_subcommand("rewrite", "rewrite between the E/F and Y generators");
  std::string rw_from, rw_to, rw_word_text;
  int rw_n = 0, rw_g = 0;
  cmd_rewrite->add_option("--from", rw_from, "source alphabet: ef | y")->required();
  cmd_rewrite->add_option("--to", rw_to, "target alphabet: y | ef")->required();
  cmd_rewrite->add_option("--n", rw_n, "matrix size");
  cmd_rewrite->add_option("--g", rw_g, "genus (n = g-1)");
  cmd_rewrite->add_option("--word", rw_word_text, "word to rewrite")->required();

  auto* cmd_list = app.add_subcommand("list", "print a generator list");
  std::string list_kind;
  int list_g = 0;
  cmd_list->add_option("--kind", list_kind, "prop41 | prop42 | cor51 | szepietowski | hs")
      ->required()
      ->check(CLI::IsMember({"prop41", "prop42", "cor51", "szepietowski", "hs"}));
  cmd_list->add_option("--g", list_g, "genus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_verify) return run_verify(suite, g_max, n_max, seed, jobs, json_path);

    if (*cmd_eval) {
      if (looks_like_matrix(eval_word_text)) {
        const CongruenceElement a{parse_matrix(eval_word_text)};
        if (eval_as == "matrix") {
          std::cout << to_string(a.matrix()) << "\n";
        } else if (eval_as == "homology") {
          print_automorphism(f_inverse(a));
        } else {
          std::cerr << "a matrix cannot be shown as a word\n";
          return kExitUsage;
        }
        return 0;
      }
      const Word w = parse_word(eval_word_text);
      if (eval_as == "word") {
        std::cout << (w.empty() ? "(empty)" : to_string(w)) << "\n";
      } else if (eval_as == "matrix") {
        const int n = eval_n > 0 ? eval_n : eval_g - 1;
        if (n < 1) {
          std::cerr << "matrix evaluation needs --n or --g\n";
          return kExitUsage;
        }
        std::cout << to_string(eval_word(w, n).matrix()) << "\n";
      } else {
        if (eval_g < 1) {
          std::cerr << "homology evaluation needs --g\n";
          return kExitUsage;
        }
        const Convention conv = verify::convention_search().chosen;
        print_automorphism(homology_action(w, eval_g, conv));
      }
      return 0;
    }

    if (*cmd_rewrite) {
      const int n = rw_n > 0 ? rw_n : rw_g - 1;
      if (n < 1) {
        std::cerr << "rewrite needs --n or --g\n";
        return kExitUsage;
      }
      const Word w = parse_word(rw_word_text);
      Word out;
      if (rw_from == "ef" && rw_to == "y") out = ef_to_y(w, n);
      else if (rw_from == "y" && rw_to == "ef") out = y_to_ef(w, n + 1);
      else {
        std::cerr << "supported directions: --from ef --to y, --from y --to ef\n";
        return kExitUsage;
      }
      std::cout << (out.empty() ? "(empty)" : to_string(out)) << "\n";
      return 0;
    }

    if (*cmd_list) {
      GeneratorListKind kind;
      if (list_kind == "prop41") kind = GeneratorListKind::prop41;
      else if (list_kind == "prop42") kind = GeneratorListKind::prop42;
      else if (list_kind == "cor51") kind = GeneratorListKind::cor51;
      else if (list_kind == "szepietowski") kind = GeneratorListKind::szepietowski;
      else kind = GeneratorListKind::hs;
      for (const auto& w : generator_list(kind, list_g)) std::cout << to_string(w) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
