#include "spectral_bounds/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "spectral_bounds/pulm.hpp"

namespace spb {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson class_to_json(const MatrixClass& c) {
  OrderedJson j;
  j["is_hermitian"] = c.is_hermitian;
  j["is_normal"] = c.is_normal;
  j["is_psd"] = c.is_psd;
  j["is_pd"] = c.is_pd;
  j["hermiticity_defect"] = c.hermiticity_defect;
  j["normality_defect"] = c.normality_defect;
  return j;
}

OrderedJson spectrum_to_json(const Spectrum& s) {
  OrderedJson j;
  OrderedJson values = OrderedJson::array();
  for (const auto& z : s.values) values.push_back({z.real(), z.imag()});
  j["eigenvalues"] = values;
  j["max_residual"] = s.max_residual;
  j["ordering_key"] = s.ordering_key;
  return j;
}

OrderedJson result_to_json(const BoundResult& r) {
  OrderedJson j;
  j["name"] = r.name;
  j["citation"] = r.citation;
  j["direction"] = r.direction == BoundDirection::lower ? "lower" : "upper";
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  j["bound"] = r.bound;
  j["exact"] = r.exact;
  j["slack"] = r.slack;
  OrderedJson extras = OrderedJson::object();
  for (const auto& [key, value] : r.extras) extras[key] = value;
  j["extras"] = extras;
  j["inputs_digest"] = r.inputs_digest;
  return j;
}

}  // namespace

BoundReport make_report(const ComplexMatrix& a, const std::optional<ComplexMatrix>& b,
                        const std::vector<std::string>& selection) {
  const ComplexMatrix& rhs = b ? *b : a;
  BoundReport report;
  report.matrix_a_digest = matrix_digest(a);
  report.matrix_b_digest = matrix_digest(rhs);
  report.class_a = classify(a);
  report.class_b = classify(rhs);
  report.spectrum_a =
      report.class_a.is_hermitian ? eig_hermitian(hermitian_part(a)) : eig_general(a);
  report.spectrum_b =
      report.class_b.is_hermitian ? eig_hermitian(hermitian_part(rhs)) : eig_general(rhs);
  report.results = evaluate_bounds(a, rhs, selection);
  const double tol = verify_tolerance();
  report.all_hold = std::all_of(report.results.begin(), report.results.end(),
                                [tol](const BoundResult& r) { return r.holds(tol); });
  return report;
}

std::string report_to_json(const BoundReport& report) {
  OrderedJson j;
  j["tool_version"] = kToolVersion;
  j["matrix_a_digest"] = report.matrix_a_digest;
  j["matrix_b_digest"] = report.matrix_b_digest;
  j["classes"] = OrderedJson::object();
  j["classes"]["a"] = class_to_json(report.class_a);
  j["classes"]["b"] = class_to_json(report.class_b);
  j["oracle_summary"] = OrderedJson::object();
  j["oracle_summary"]["a"] = spectrum_to_json(report.spectrum_a);
  j["oracle_summary"]["b"] = spectrum_to_json(report.spectrum_b);
  OrderedJson results = OrderedJson::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  j["results"] = results;
  j["all_hold"] = report.all_hold;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "name,citation,direction,applicable,bound,exact,slack,inputs_digest\n";
  char buf[512];
  for (const auto& r : report.results) {
    std::snprintf(buf, sizeof(buf), "%s,\"%s\",%s,%d,%.17g,%.17g,%.17g,%s\n", r.name.c_str(),
                  r.citation.c_str(), r.direction == BoundDirection::lower ? "lower" : "upper",
                  r.applicable ? 1 : 0, r.bound, r.exact, r.slack, r.inputs_digest.c_str());
    out << buf;
  }
  return out.str();
}

VerifySummary run_verify(const EnsembleSpec& spec, const std::vector<std::string>& selection) {
  if (spec.n < 2) throw std::invalid_argument("run_verify: n must be >= 2");
  if (spec.trials < 1) throw std::invalid_argument("run_verify: trials must be >= 1");
  const double tol = verify_tolerance();

  std::map<std::string, VerifyBoundStats> stats;
  for (int t = 0; t < spec.trials; ++t) {
    const auto [a, b] = generate_pair(spec, t);
    const std::vector<BoundResult> results = evaluate_bounds(a, b, selection);
    for (const auto& r : results) {
      VerifyBoundStats& s = stats[r.name];
      s.name = r.name;
      ++s.count;
      if (!r.applicable) continue;
      ++s.applicable_count;
      s.max_negative_slack = std::min(s.max_negative_slack, r.slack);
      s.mean_slack_ratio += r.slack / std::max(1.0, std::abs(r.exact));
      if (!r.holds(tol)) ++s.violations;
    }
  }

  VerifySummary summary;
  summary.spec = spec;
  for (auto& [name, s] : stats) {
    if (s.applicable_count > 0) s.mean_slack_ratio /= static_cast<double>(s.applicable_count);
    summary.total_violations += s.violations;
    summary.bounds.push_back(s);
  }
  return summary;
}

std::string verify_to_json(const VerifySummary& summary) {
  OrderedJson j;
  j["tool_version"] = kToolVersion;
  j["ensemble"] = to_string(summary.spec.kind);
  j["n"] = summary.spec.n;
  j["trials"] = summary.spec.trials;
  j["seed"] = summary.spec.seed;
  OrderedJson bounds = OrderedJson::object();
  for (const auto& s : summary.bounds) {
    OrderedJson entry;
    entry["count"] = s.count;
    entry["applicable_count"] = s.applicable_count;
    entry["max_negative_slack"] = s.max_negative_slack;
    entry["mean_slack_ratio"] = s.mean_slack_ratio;
    entry["violations"] = s.violations;
    bounds[s.name] = entry;
  }
  j["bounds"] = bounds;
  j["total_violations"] = summary.total_violations;
  return j.dump(2) + "\n";
}

ComplexMatrix paper_example_matrix() {
  ComplexMatrix a(3);
  const double entries[3][3] = {{2, 2, 1}, {2, 2, 1}, {1, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = entries[i][j];
  return a;
}

PaperExampleResult run_paper_example() {
  const ComplexMatrix a = paper_example_matrix();
  const SpectralInterval interval = oracle_interval(a);
  const PulFunctional phi = PulFunctional::make_diag(3, 1);

  PaperExampleResult r;
  const BhatiaDavisResult bd = bound_bhatia_davis(a, phi, interval);
  r.spread_lower_variance = bd.spread_lower.value_or(0.0);
  const BoundResult cor31 = bound_cor31(a, phi, interval);
  for (const auto& [key, value] : cor31.extras)
    if (key == "spread_lower_refined") r.spread_lower_refined = value;
  r.oracle_spread = spread(eig_hermitian(a));

  const ComplexMatrix sq = a * a;
  const double expected_sq[3][3] = {{9, 9, 5}, {9, 9, 5}, {5, 5, 3}};
  r.square_matches = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (std::abs(sq(i, j) - Complex{expected_sq[i][j], 0.0}) > 1e-12) r.square_matches = false;

  const double tol = 1e-3;
  r.pass = std::abs(r.spread_lower_variance - 2.0 * std::sqrt(5.0)) <= tol &&
           std::abs(r.spread_lower_variance - 4.4721) <= tol &&
           std::abs(r.spread_lower_refined - 4.5) <= tol &&
           std::abs(r.oracle_spread - 4.5616) <= tol && cor31.applicable &&
           cor31.holds(verify_tolerance()) && r.square_matches;
  return r;
}

std::string paper_example_to_json(const PaperExampleResult& r) {
  OrderedJson j;
  j["tool_version"] = kToolVersion;
  j["spread_lower_variance"] = r.spread_lower_variance;
  j["spread_lower_refined"] = r.spread_lower_refined;
  j["oracle_spread"] = r.oracle_spread;
  j["square_matches"] = r.square_matches;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

}  // namespace spb
