#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/complex_matrix.hpp"
#include "spectral_bounds/ensemble.hpp"

namespace spb {

inline constexpr const char* kToolVersion = "1.0.0";

struct BoundReport {
  std::string matrix_a_digest;
  std::string matrix_b_digest;
  MatrixClass class_a;
  MatrixClass class_b;
  std::vector<BoundResult> results;
  Spectrum spectrum_a;
  Spectrum spectrum_b;
  bool all_hold = true;
};

BoundReport make_report(const ComplexMatrix& a, const std::optional<ComplexMatrix>& b,
                        const std::vector<std::string>& selection);

/// Versioned JSON with fixed field order.
std::string report_to_json(const BoundReport& report);

/// One BoundResult per row.
std::string report_to_csv(const BoundReport& report);

struct VerifyBoundStats {
  std::string name;
  long count = 0;
  long applicable_count = 0;
  double max_negative_slack = 0.0;  // most negative slack seen, 0 if none
  double mean_slack_ratio = 0.0;    // mean of slack / max(1, exact)
  long violations = 0;
};

struct VerifySummary {
  EnsembleSpec spec;
  std::vector<VerifyBoundStats> bounds;
  long total_violations = 0;
};

VerifySummary run_verify(const EnsembleSpec& spec, const std::vector<std::string>& selection);

std::string verify_to_json(const VerifySummary& summary);

struct PaperExampleResult {
  double spread_lower_variance = 0.0;  // 2 sqrt(phi(A^2) - phi(A)^2)
  double spread_lower_refined = 0.0;   // phi(A^2)/phi(A)
  double oracle_spread = 0.0;
  bool square_matches = true;
  bool pass = false;
};

/// The embedded 3x3 golden example: checks the 4.4721 <= 4.5 <= 4.5616 chain
/// and the printed square of the matrix.
PaperExampleResult run_paper_example();

std::string paper_example_to_json(const PaperExampleResult& r);
ComplexMatrix paper_example_matrix();

}  // namespace spb
