// Acceptance suite. Each criterion prints exactly one line:
//   [PASS] <criterion>   or   [FAIL] <criterion>: <detail>
// Exit code is the number of failed criteria.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/eigen.hpp"
#include "spectral_bounds/ensemble.hpp"
#include "spectral_bounds/matrix_market.hpp"
#include "spectral_bounds/numerical_range.hpp"
#include "spectral_bounds/pulm.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/rng.hpp"

using namespace spb;

namespace {

std::string g_cli_path;
std::string g_fixture_dir = "fixtures";

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  return sample_matrix(EnsembleKind::hermitian_gaussian, n, seed, stream);
}

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void report() const {
    if (pass) {
      std::printf("[PASS] %s\n", name.c_str());
    } else {
      std::printf("[FAIL] %s: %s\n", name.c_str(), detail.c_str());
    }
  }
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. golden example reproduction, < 1 s
Criterion criterion_example() {
  Criterion c{"example reproduction"};
  const auto start = std::chrono::steady_clock::now();
  const PaperExampleResult r = run_paper_example();
  const double t = elapsed_seconds(start);
  if (std::abs(r.spread_lower_variance - 4.4721) > 1e-3)
    c.fail("variance route " + std::to_string(r.spread_lower_variance));
  if (std::abs(r.spread_lower_refined - 4.5) > 1e-3)
    c.fail("refined route " + std::to_string(r.spread_lower_refined));
  if (std::abs(r.oracle_spread - 4.5616) > 1e-3)
    c.fail("oracle spread " + std::to_string(r.oracle_spread));
  if (!r.square_matches) c.fail("square mismatch");
  if (!r.pass) c.fail("self-check flag");
  if (t >= 1.0) c.fail("runtime " + std::to_string(t) + " s");
  return c;
}

// 2. soundness sweep: 4 ensembles x n in 2..12 x 250 trials, zero violations
Criterion criterion_soundness() {
  Criterion c{"soundness sweep"};
  const auto names = bound_names();
  for (auto kind : {EnsembleKind::hermitian_gaussian, EnsembleKind::normal_unitary_conjugated,
                    EnsembleKind::psd, EnsembleKind::circulant}) {
    for (std::size_t n = 2; n <= 12; ++n) {
      const VerifySummary summary =
          run_verify(EnsembleSpec{kind, n, 250, 7777 + 100 * n}, names);
      if (summary.total_violations != 0) {
        c.fail(to_string(kind) + " n=" + std::to_string(n) + ": " +
               std::to_string(summary.total_violations) + " violations");
        return c;
      }
    }
  }
  return c;
}

// 3. oracle certification: residuals, cross-solver agreement, Weyl sandwich
Criterion criterion_oracle() {
  Criterion c{"oracle certification"};
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 31);
    const ComplexMatrix a = random_hermitian(n, 31337, t);
    const Spectrum s = eig_hermitian(a);
    if (s.max_residual > 1e-10 * std::max(1.0, a.frobenius_norm())) {
      c.fail("jacobi residual " + std::to_string(s.max_residual) + " at trial " +
             std::to_string(t));
      return c;
    }
  }
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 15);
    const ComplexMatrix a = random_hermitian(n, 1234, t);
    const auto down = eig_down(eig_hermitian(a));
    const Spectrum sq = eig_general(a);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(sq.values[k] - Complex{down[k], 0.0}));
    if (worst > 1e-8 * std::max(1.0, a.frobenius_norm())) {
      c.fail("jacobi/qr disagreement " + std::to_string(worst));
      return c;
    }
  }
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 11);
    const ComplexMatrix a = random_hermitian(n, 555, 2 * t);
    const ComplexMatrix b = random_hermitian(n, 555, 2 * t + 1);
    const auto [lo, hi] = weyl_interval(a, b);
    const double norm = spectral_norm(a - b);
    const double tol = 1e-8 * std::max(1.0, a.frobenius_norm() + b.frobenius_norm());
    if (lo > norm + tol || norm > hi + tol) {
      c.fail("weyl sandwich violated at trial " + std::to_string(t));
      return c;
    }
  }
  return c;
}

// 4. normal-case geometry: range sweep matches the spectral hull identity
Criterion criterion_geometry() {
  Criterion c{"normal-case geometry"};
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    const ComplexMatrix a =
        sample_matrix(EnsembleKind::normal_unitary_conjugated, n, 2468, 2 * t);
    const ComplexMatrix b =
        sample_matrix(EnsembleKind::normal_unitary_conjugated, n, 2468, 2 * t + 1);
    const double via_range = s_numerical_range(a, b, 720);
    const double via_spectra = max_pairwise_eig_distance(eig_general(a), eig_general(b));
    const double cap = 1e-3 * std::max(1.0, spectral_norm(a) + spectral_norm(b));
    if (std::abs(via_range - via_spectra) > cap) {
      c.fail("gap " + std::to_string(std::abs(via_range - via_spectra)) + " at trial " +
             std::to_string(t));
      return c;
    }
  }
  return c;
}

// 5. refinement chains with slack >= -1e-10
Criterion criterion_chains() {
  Criterion c{"refinement chains"};
  for (std::uint64_t t = 0; t < 500; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    const ComplexMatrix a = (t % 2 == 0)
        ? random_hermitian(n, 9090, t)
        : sample_matrix(EnsembleKind::psd, n, 9090, t);

    // diagonal-pair chain: exact >= bound
    const auto spec_a = eig_hermitian(a);
    const BoundResult pair = bound_diag_pair(a, a);
    if (pair.slack < -1e-10) {
      c.fail("diagonal pair chain at trial " + std::to_string(t));
      return c;
    }

    // refined spread chain: spd >= middle >= right
    const BoundResult refined = spread_refined_thm32(a);
    double right = 0.0;
    for (const auto& [k, v] : refined.extras)
      if (k == "right") right = v;
    if (refined.exact - refined.bound < -1e-10 || refined.bound - right < -1e-10) {
      c.fail("thm 3.2 chain at trial " + std::to_string(t));
      return c;
    }

    // variance chain: refined >= baseline whenever the premise holds
    if (classify(a).is_psd) {
      const SpectralInterval interval = oracle_interval(a);
      for (std::size_t i = 1; i <= n; ++i) {
        const auto phi = PulFunctional::make_diag(n, i);
        const BoundResult chain = bound_cor31(a, phi, interval);
        if (chain.applicable && chain.slack < -1e-10) {
          c.fail("cor 3.1 chain at trial " + std::to_string(t));
          return c;
        }
      }
    }
    (void)spec_a;
  }
  return c;
}

// 6. PULM validation across the catalog, plus a failing negative control
Criterion criterion_pulm() {
  Criterion c{"pulm validation"};
  const std::size_t n = 5;
  std::vector<PulMap> catalog = {
      PulMap::make_identity(n),
      PulMap::make_trace_complement(n),
      PulMap::make_compression_2x2(n, 1, 3),
      PulMap::make_flip_compression_2x2(n, 2, 5),
      PulMap::make_diagonal_restriction(n),
      PulMap::make_functional_lift(PulFunctional::make_diag(n, 2)),
      PulMap::make_functional_lift(PulFunctional::make_mean_all(n)),
      PulMap::make_functional_lift(PulFunctional::make_half_trace_pair(n, 1, 4)),
      PulMap::make_functional_lift(PulFunctional::make_theta_pair(n, 2, 3, 0.9)),
      PulMap::make_functional_lift(PulFunctional::make_index_avg(n, {1, 2, 5})),
      PulMap::make_functional_lift(PulFunctional::make_offdiag_complement(n)),
  };
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const ValidationReport r = validate_pulm(catalog[k], 500, 4242);
    if (r.unitality_defect > 1e-12 || r.max_linearity_defect > 1e-12 ||
        r.max_positivity_violation > 1e-10 || !r.pass) {
      c.fail("catalog entry " + std::to_string(k) + " defects " +
             std::to_string(r.unitality_defect) + "/" +
             std::to_string(r.max_positivity_violation) + "/" +
             std::to_string(r.max_linearity_defect));
      return c;
    }
  }
  const ValidationReport bad = validate_pulm(
      [](const ComplexMatrix& a) { return 2.0 * a; }, 4, 4, 50, 99);
  if (bad.pass) c.fail("negative control passed");
  return c;
}

// 7. tightness witnesses on the stored fixtures
Criterion criterion_tightness() {
  Criterion c{"tightness witnesses"};
  for (const char* name : {"tight_golden.mtx", "tight_tridiag.mtx"}) {
    const std::string path = g_fixture_dir + "/" + name;
    ComplexMatrix a;
    try {
      a = read_matrix_market_file(path);
    } catch (const std::exception& e) {
      c.fail(std::string(path) + ": " + e.what());
      return c;
    }
    const std::size_t n = a.size();
    ComplexMatrix centered = a;
    const Complex mean = a.trace() / Complex{static_cast<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) centered(i, i) -= mean;
    const double scaled =
        (static_cast<double>(n) / (static_cast<double>(n) - 1.0)) * spectral_norm(centered);

    const BoundResult at_self = bound_eq25(a, a);
    if (std::abs(at_self.bound - scaled) > 1e-12 * std::max(1.0, scaled)) {
      c.fail(std::string(path) + ": B=A value off by " +
             std::to_string(std::abs(at_self.bound - scaled)));
      return c;
    }

    ComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = mean;
    const BoundResult at_center = bound_eq25(a, b);
    const double norm = spectral_norm(a - b);
    if (at_center.bound > norm + 1e-10) {
      c.fail(std::string(path) + ": B=center exceeds the norm");
      return c;
    }
  }
  return c;
}

struct RunOutput {
  int exit_code = -1;
  std::string text;
};

RunOutput run_cli(const std::string& args) {
  RunOutput out;
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.text.append(buffer.data(), got);
  const int status = pclose(pipe);
  out.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

// 8. determinism: repeated CLI runs are byte-identical
Criterion criterion_determinism() {
  Criterion c{"determinism"};
  if (g_cli_path.empty()) {
    c.fail("no --cli path provided");
    return c;
  }
  const std::string args =
      "verify --ensemble hermitian_gaussian --n 6 --trials 40 --seed 2025";
  const RunOutput first = run_cli(args);
  const RunOutput second = run_cli(args);
  if (first.exit_code != 0 || second.exit_code != 0) {
    c.fail("cli exited " + std::to_string(first.exit_code) + "/" +
           std::to_string(second.exit_code));
    return c;
  }
  if (first.text.empty() || first.text != second.text) {
    c.fail("outputs differ or are empty");
    return c;
  }
  const RunOutput example = run_cli("paper-example --json");
  const RunOutput example2 = run_cli("paper-example --json");
  if (example.exit_code != 0 || example.text != example2.text)
    c.fail("paper-example output differs between runs");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    if (std::string(argv[i]) == "--fixtures") g_fixture_dir = argv[i + 1];
  }

  std::vector<Criterion> results;
  results.push_back(criterion_example());
  results.push_back(criterion_soundness());
  results.push_back(criterion_oracle());
  results.push_back(criterion_geometry());
  results.push_back(criterion_chains());
  results.push_back(criterion_pulm());
  results.push_back(criterion_tightness());
  results.push_back(criterion_determinism());

  int failures = 0;
  for (const auto& c : results) {
    c.report();
    if (!c.pass) ++failures;
  }
  return failures;
}
