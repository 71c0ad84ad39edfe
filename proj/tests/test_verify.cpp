#include "doctest.h"

#include <set>

#include "torelli/verify.hpp"

using namespace torelli;

TEST_CASE("convention search pins the twist direction") {
  const auto result = verify::convention_search();
  CHECK(result.chosen.twist_direction == -1);
  CHECK(result.chosen.sigma_start == '+');
  REQUIRE(result.candidates.size() == 2);
  for (const auto& c : result.candidates) {
    if (c.twist_direction == -1) {
      CHECK(c.passed);
      CHECK(c.first_failing_case.empty());
    } else {
      CHECK_FALSE(c.passed);
      CHECK(c.first_failing_case == "lemma56/g=04/case=a");
    }
  }
}

TEST_CASE("unknown suite is rejected") {
  verify::RunParams p;
  CHECK_THROWS_AS(verify::run_suite("nope", p, Convention{}), std::invalid_argument);
}

TEST_CASE("small suites pass with unique sorted ids") {
  verify::RunParams p;
  p.g_max = 5;
  p.n_max = 4;
  p.seed = 99;
  const Convention conv{};
  for (const auto& name : {"chain", "counting", "eq2", "lemma56"}) {
    const auto r = verify::run_suite(name, p, conv);
    CHECK(r.fail == 0);
    CHECK(r.pass == static_cast<int>(r.cases.size()));
    std::set<std::string> ids;
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
      ids.insert(r.cases[i].id);
      if (i) CHECK(r.cases[i - 1].id < r.cases[i].id);
    }
    CHECK(ids.size() == r.cases.size());
  }
}

TEST_CASE("parallel and serial execution agree") {
  verify::RunParams serial;
  serial.g_max = 5;
  serial.n_max = 4;
  serial.seed = 7;
  verify::RunParams parallel = serial;
  parallel.jobs = 4;
  const Convention conv{};
  for (const auto& name : {"relators-ef", "torelli-lists", "relabel"}) {
    const auto a = verify::run_suite(name, serial, conv);
    const auto b = verify::run_suite(name, parallel, conv);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].id == b.cases[i].id);
      CHECK(a.cases[i].status == b.cases[i].status);
      CHECK(a.cases[i].detail == b.cases[i].detail);
    }
  }
}

TEST_CASE("report json carries the fixed schema") {
  verify::RunParams p;
  p.g_max = 4;
  p.n_max = 2;
  p.seed = 5;
  verify::VerificationReport report;
  report.seed = p.seed;
  report.convention = verify::convention_search();
  report.suites.push_back(verify::run_suite("counting", p, report.convention.chosen));
  const std::string text = verify::report_to_json(report);
  CHECK(text.find("\"schema\": \"torelli-verify/1\"") != std::string::npos);
  CHECK(text.find("\"seed\": 5") != std::string::npos);
  CHECK(text.find("\"convention\"") != std::string::npos);
  CHECK(text.find("\"suites\"") != std::string::npos);
  CHECK(text.find("\"cases\"") != std::string::npos);
  CHECK(text.find("\"status\"") != std::string::npos);
  CHECK_FALSE(verify::has_gating_failures(report));
}

TEST_CASE("seeded runs are reproducible") {
  verify::RunParams p;
  p.g_max = 4;
  p.n_max = 3;
  p.seed = 1234;
  const Convention conv{};
  const auto a = verify::run_suite("iso", p, conv);
  const auto b = verify::run_suite("iso", p, conv);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].status == b.cases[i].status);
    CHECK(a.cases[i].detail == b.cases[i].detail);
  }
}

TEST_CASE("relabel suite marks the quadruple exploration informative") {
  verify::RunParams p;
  p.g_max = 5;
  const auto r = verify::run_suite("relabel", p, Convention{});
  bool saw_informative = false;
  for (const auto& c : r.cases) {
    if (c.id.find("/quad=") != std::string::npos) {
      saw_informative = true;
      CHECK(c.status == "informative-pass");
      CHECK_FALSE(verify::is_gating_failure(c));
    }
  }
  CHECK(saw_informative);
}
