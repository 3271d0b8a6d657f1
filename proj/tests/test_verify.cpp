#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wbi/errors.hpp"
#include "wbi/kernels.hpp"
#include "wbi/verify.hpp"

using namespace wbi;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

SuiteRanges small_ranges() {
  SuiteRanges r;
  r.n_max = 1;
  r.k_set = {0.5, 1.0};
  r.x_grid = {0.5, 2.0};
  return r;
}
}  // namespace

TEST_CASE("identity at k = 0") {
  const auto r0 = verify_identity({0, 0.0}, {1.0});
  CHECK(r0.pass);
  CHECK(r0.residuals[0] < 1e-15);
  CHECK(std::abs(whittaker_w(0.5, 0.0, 2.0) - std::sqrt(2.0) * std::exp(-1.0)) < 1e-15);
  CHECK(std::sqrt(2.0) * std::exp(-1.0) == doctest::Approx(0.5202600).epsilon(1e-6));
  const auto r1 = verify_identity({1, 0.0}, {1.0});
  CHECK(r1.residuals[0] < 1e-15);
  CHECK(r1.notes.size() == 1);
  // W_{3/2,0}(1) = 0: the residual stays finite at zeros of W.
  const auto rz = verify_identity({1, 0.0}, {0.5});
  CHECK(std::abs(whittaker_w(1.5, 0.0, 1.0)) < 1e-15);
  CHECK(rz.pass);
}

TEST_CASE("identity for complex order") {
  CHECK(verify_identity({3, 1.0}, {0.5, 1.0, 2.0, 4.0}).pass);
  const auto r = verify_identity({8, 2.0}, default_identity_grid());
  CHECK(r.pass);
  CHECK(r.max_residual() < 1e-9);
  CHECK(r.grid == default_identity_grid());
}

TEST_CASE("identity preconditions") {
  CHECK_THROWS_AS(verify_identity({2, 5e-4}, {1.0}), DomainError);
  CHECK_THROWS_AS(verify_identity({2, 0.5}, {10.0}), DomainError);
  CHECK_THROWS_AS(verify_identity({2, 0.5}, {0.1}), DomainError);
  CHECK(verify_identity({2, 1e-3}, {1.0}).pass);
}

TEST_CASE("identity at 50 digits") {
  const auto r = verify_identity_oracle({2, 0.5}, {1.0, 12.0, 20.0});
  CHECK(r.pass);
  CHECK(r.max_residual() < 1e-13);
  CHECK(verify_identity_oracle({3, 0.0}, {1.0, 15.0}).max_residual() < 1e-13);
}

TEST_CASE("advisory table") {
  CHECK(is_advisory("coeffs.second_order_recurrence"));
  CHECK(is_advisory("ode.indicial_printed_quadratic"));
  CHECK(is_advisory("constants.printed_closed_form"));
  CHECK_FALSE(is_advisory("identity.grid"));
  CHECK_FALSE(is_advisory("ode.indicial_exponents"));
}

TEST_CASE("suite") {
  SuiteRanges ranges = small_ranges();
  ranges.oracle_equivalence = false;
  const auto result = run_suite(EvalConfig{}, ranges);
  CHECK(result.pass());
  const auto s = result.summary();
  CHECK(s.total == result.reports.size());
  CHECK(s.load_bearing_failed == 0);
  CHECK(s.advisory_failed > 0);
  CHECK(s.passed + s.failed == s.total);
  for (std::size_t i = 1; i < result.reports.size(); ++i) {
    const auto& a = result.reports[i - 1];
    const auto& b = result.reports[i];
    CHECK(std::tie(a.check, a.params.n, a.params.k) <= std::tie(b.check, b.params.n, b.params.k));
  }
  // Every failed report is advisory and summarized in the ledger.
  for (const auto& r : result.reports)
    if (!r.pass) {
      CHECK(is_advisory(r.check));
      bool found = false;
      for (const auto& line : result.ledger) found |= line.rfind(r.check, 0) == 0;
      CHECK(found);
    }

  SUBCASE("deterministic across thread counts") {
    SuiteRanges one = ranges, two = ranges;
    one.threads = 1;
    two.threads = 3;
    CHECK(render_suite(run_suite(EvalConfig{}, one), ExportFormat::Json) ==
          render_suite(run_suite(EvalConfig{}, two), ExportFormat::Json));
  }
}

TEST_CASE("suite edge cases") {
  SUBCASE("n_max = 0 is nonempty") {
    SuiteRanges r = small_ranges();
    r.n_max = 0;
    r.k_set = {1.0};
    const auto result = run_suite(EvalConfig{}, r);
    CHECK_FALSE(result.reports.empty());
    CHECK(result.pass());
  }
  SUBCASE("k = 0 cell") {
    SuiteRanges r = small_ranges();
    r.k_set = {0.0};
    r.oracle_equivalence = false;
    CHECK(run_suite(EvalConfig{}, r).pass());
  }
  SUBCASE("refused k is a recorded failure") {
    SuiteRanges r = small_ranges();
    r.n_max = 0;
    r.k_set = {5e-4};
    r.oracle_equivalence = false;
    const auto result = run_suite(EvalConfig{}, r);
    CHECK_FALSE(result.pass());
    bool noted = false;
    for (const auto& line : result.ledger) noted |= line.find("domain") != std::string::npos;
    CHECK(noted);
  }
  SUBCASE("truncated series aborts") {
    EvalConfig cfg;
    cfg.series_max_terms = 5;
    CHECK_THROWS_AS(run_suite(cfg, small_ranges()), ConvergenceError);
  }
  SUBCASE("range limits") {
    SuiteRanges r;
    r.n_max = 26;
    CHECK_THROWS_AS(run_suite(EvalConfig{}, r), DomainError);
    r.n_max = 2;
    r.k_set = {};
    CHECK_THROWS_AS(run_suite(EvalConfig{}, r), DomainError);
  }
}

TEST_CASE("export") {
  const auto rep = verify_identity({1, 1.0}, {0.5, 1.0, 2.0});

  SUBCASE("one CSV row per grid point") {
    const auto csv = render_reports({rep}, ExportFormat::Csv);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "check,n,k,x,residual,threshold,pass");
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(line.rfind("identity.grid,1,1,", 0) == 0);
      CHECK(line.substr(line.size() - 5) == ",true");
    }
    CHECK(rows == 3);
  }
  SUBCASE("empty report set") {
    CHECK(render_reports({}, ExportFormat::Json) == "{\n  \"reports\": []\n}\n");
    CHECK(render_reports({}, ExportFormat::Csv) == "check,n,k,x,residual,threshold,pass\n");
    const auto j = nlohmann::json::parse(render_reports({}, ExportFormat::Json));
    CHECK(j["reports"].empty());
  }
  SUBCASE("json round trip") {
    const auto path = temp_path("wbi_export_test.json");
    export_reports({rep}, ExportFormat::Json, path);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["reports"][0]["check"] == "identity.grid");
    CHECK(j["reports"][0]["params"]["n"] == 1);
    CHECK(j["reports"][0]["residuals"].size() == 3);
    std::remove(path.c_str());
  }
  SUBCASE("suite document has a ledger") {
    SuiteRanges r = small_ranges();
    r.n_max = 0;
    r.oracle_equivalence = false;
    const auto j = nlohmann::json::parse(render_suite(run_suite(EvalConfig{}, r), ExportFormat::Json));
    CHECK(j.contains("ledger"));
    CHECK(j.contains("summary"));
    CHECK(j["summary"]["load_bearing_failed"] == 0);
  }
  SUBCASE("unwritable path names the path") {
    const std::string bad = "/nonexistent-dir/out.json";
    try {
      export_reports({rep}, ExportFormat::Json, bad);
      FAIL("expected IoError");
    } catch (const IoError& e) {
      CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
  }
  SUBCASE("format names") {
    CHECK(parse_format("json") == ExportFormat::Json);
    CHECK(parse_format("csv") == ExportFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
  }
}
