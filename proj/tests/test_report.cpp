#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "json.hpp"
#include "spectral_bounds/report.hpp"
#include "test_helpers.hpp"

using namespace spb;
using nlohmann::json;
using spb::testing::golden3x3;

TEST_CASE("report on the golden matrix") {
  const BoundReport report = make_report(golden3x3(), std::nullopt, bound_names());
  CHECK(report.matrix_a_digest == report.matrix_b_digest);
  CHECK(report.class_a.is_hermitian);
  CHECK(report.all_hold);
  CHECK_FALSE(report.results.empty());
}

TEST_CASE("report JSON is parseable, versioned, and stable") {
  const BoundReport report = make_report(golden3x3(), std::nullopt, bound_names());
  const std::string text = report_to_json(report);
  const json parsed = json::parse(text);
  CHECK(parsed.at("tool_version").get<std::string>() == kToolVersion);
  CHECK(parsed.at("all_hold").get<bool>());
  CHECK(parsed.at("results").is_array());
  const auto& first = parsed.at("results").at(0);
  CHECK(first.contains("name"));
  CHECK(first.contains("citation"));
  CHECK(first.contains("bound"));
  CHECK(first.contains("exact"));
  CHECK(first.contains("slack"));

  // byte-identical on repeat evaluation
  const std::string again = report_to_json(make_report(golden3x3(), std::nullopt, bound_names()));
  CHECK(text == again);
}

TEST_CASE("report CSV has a header and one row per result") {
  const BoundReport report = make_report(golden3x3(), std::nullopt, {"thm3.1", "eq2.11"});
  const std::string csv = report_to_csv(report);
  const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == report.results.size() + 1);
  CHECK(csv.find("name") != std::string::npos);
  CHECK(csv.find("thm3.1") != std::string::npos);
}

TEST_CASE("verify sweep reports no violations on a sound ensemble") {
  const EnsembleSpec spec{EnsembleKind::hermitian_gaussian, 4, 5, 77};
  const VerifySummary summary = run_verify(spec, bound_names());
  CHECK(summary.total_violations == 0);
  for (const auto& stats : summary.bounds) {
    CHECK(stats.count == 5);
    CHECK(stats.violations == 0);
  }
  const json parsed = json::parse(verify_to_json(summary));
  CHECK(parsed.at("total_violations").get<long>() == 0);
  CHECK(parsed.at("ensemble").get<std::string>() == "hermitian_gaussian");
  CHECK(parsed.at("trials").get<int>() == 5);
}

TEST_CASE("verify sweep on the other ensembles") {
  for (auto kind : {EnsembleKind::normal_unitary_conjugated, EnsembleKind::psd,
                    EnsembleKind::circulant}) {
    const VerifySummary summary = run_verify(EnsembleSpec{kind, 3, 3, 5}, bound_names());
    CHECK(summary.total_violations == 0);
  }
}

TEST_CASE("golden example checks pass") {
  const PaperExampleResult r = run_paper_example();
  CHECK(r.pass);
  CHECK(r.square_matches);
  CHECK(r.spread_lower_variance == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(r.spread_lower_refined == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(r.oracle_spread == doctest::Approx(spb::testing::kGoldenEigHigh).epsilon(1e-10));
  CHECK(r.spread_lower_variance <= r.spread_lower_refined);
  CHECK(r.spread_lower_refined <= r.oracle_spread);

  const json parsed = json::parse(paper_example_to_json(r));
  CHECK(parsed.at("pass").get<bool>());

  const ComplexMatrix a = paper_example_matrix();
  CHECK((a - golden3x3()).frobenius_norm() == 0.0);
}
