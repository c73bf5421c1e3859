#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectral_bounds/complex_matrix.hpp"
#include "spectral_bounds/eigen.hpp"
#include "spectral_bounds/pulm.hpp"

namespace spb {

/// Default verification slack; SPECTRAL_BOUNDS_TOL overrides it process-wide.
double verify_tolerance();

enum class BoundDirection { lower, upper };

/// A named inequality instance: the cheap bound next to the exact oracle
/// quantity it bounds. For lower bounds slack = exact - bound, for upper
/// bounds slack = bound - exact; the inequality holds iff slack >= -tol.
struct BoundResult {
  std::string name;
  std::string citation;
  BoundDirection direction = BoundDirection::lower;
  bool applicable = true;
  std::string reason;  // set when not applicable
  double bound = 0.0;
  double exact = 0.0;
  double slack = 0.0;
  std::vector<std::pair<std::string, double>> extras;
  std::string inputs_digest;

  bool holds(double tol) const { return !applicable || slack >= -tol; }
};

// --- maximum eigenvalue distance / numerical-range bounds (lower) ---

/// |phi1(A) - phi2(B)| <= s(W(A), W(B)); the exact side is the max pairwise
/// eigenvalue distance when both inputs are normal, else a numerical-range
/// sweep.
BoundResult bound_thm21(const ComplexMatrix& a, const ComplexMatrix& b,
                        const PulFunctional& phi1, const PulFunctional& phi2);

/// max_{i,j} |a_ii - b_jj|.
BoundResult bound_diag_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||Phi1(A) - Phi2(B)|| <= ||Eig_down(A) - Eig_up(B)||, A, B Hermitian.
BoundResult bound_thm22(const ComplexMatrix& a, const ComplexMatrix& b,
                        const PulMap& map1, const PulMap& map2);

/// (1/(n-1)) ||A - B + n(B - (tr A / n) I)|| against the opposed distance.
BoundResult bound_eq25(const ComplexMatrix& a, const ComplexMatrix& b);

/// Compression-pair bound; with A = B this is the Mirsky spread bound.
BoundResult bound_mirsky_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                              std::size_t i, std::size_t j);

/// Index-set averages; default family is singletons + pairs + the full set.
BoundResult bound_index_sets(const ComplexMatrix& a, const ComplexMatrix& b,
                             const std::vector<std::vector<std::size_t>>& family);
std::vector<std::vector<std::size_t>> default_index_family(std::size_t n);
std::vector<std::vector<std::size_t>> power_set_index_family(std::size_t n);

/// |(1/(n-1)) sum_{i!=j} a_ij + (1/n) sum_{i,j} (b_ij - a_ij)|.
BoundResult bound_cor24(const ComplexMatrix& a, const ComplexMatrix& b);

/// Theta-pair functional bound; theta omitted means maximize over theta
/// (1024-point grid + golden-section refinement).
BoundResult bound_cor25(const ComplexMatrix& a, const ComplexMatrix& b,
                        std::size_t i, std::size_t j,
                        std::optional<double> theta = std::nullopt);

/// max_{p != q} |mean_all(A) - (a_pp + a_qq)/2| vs the eigenvalue distance
/// between A and its diagonal part.
BoundResult bound_mean_vs_pairdiag(const ComplexMatrix& a);

// --- spread bounds (lower) ---

/// spd(A) >= (n/(n-1)) ||A - (tr A / n) I|| for normal A.
BoundResult spread_lower_normal(const ComplexMatrix& a);

/// spd(A) >= (n/(n-1)) |phi(A) - tr A / n| for normal A.
BoundResult spread_lower_functional(const ComplexMatrix& a, const PulFunctional& phi);

/// spd >= max_{i,j} |lambda_i - complement-average_j| >= (1/(n-1))|sum_{i!=j} a_ij|.
/// bound = the middle quantity; extras carry the right-hand side.
BoundResult spread_refined_thm32(const ComplexMatrix& a);

// --- positive definite / psd bounds ---

struct DetRatioResult {
  BoundResult lower;  // (m/M)^((n-1)/n) <= (det A)^(-1/n) lambda_min(Phi(A))
  BoundResult upper;  // (det A)^(-1/n) lambda_max(Phi(A)) <= (M/m)^((n-1)/n)
  double condition_lower = 1.0;  // certified lower bound on M/m
};

DetRatioResult det_ratio_bounds(const ComplexMatrix& a, const PulMap& map,
                                const SpectralInterval& interval);

struct BhatiaDavisResult {
  BoundResult sharp;  // Phi(A^2) - Phi(A)^2 <= (M - Phi(A))(Phi(A) - m)
  BoundResult weak;   // Phi(A^2) - Phi(A)^2 <= (M - m)^2 / 4
  std::optional<double> spread_lower;  // 2 sqrt(variance), functionals only
};

BhatiaDavisResult bound_bhatia_davis(const ComplexMatrix& a, const PulMap& map,
                                     const SpectralInterval& interval);
BhatiaDavisResult bound_bhatia_davis(const ComplexMatrix& a, const PulFunctional& phi,
                                     const SpectralInterval& interval);

/// Phi(A^2) <= (M - m) Phi(A) when Phi(A^2) >= 2 Phi(A)^2 and Phi(A) > 0;
/// premise failure yields applicable = false, never an error.
BoundResult bound_thm34(const ComplexMatrix& a, const PulMap& map,
                        const SpectralInterval& interval);
BoundResult bound_thm34(const ComplexMatrix& a, const PulFunctional& phi,
                        const SpectralInterval& interval);

/// Chain phi(A^2) - phi(A)^2 <= (phi(A^2)/(2 phi(A)))^2 <= (M - m)^2/4 under
/// the same premise; extras carry the refined and baseline spread bounds.
BoundResult bound_cor31(const ComplexMatrix& a, const PulFunctional& phi,
                        const SpectralInterval& interval);

/// Oracle spectral interval [lambda_min, lambda_max] of a Hermitian matrix.
SpectralInterval oracle_interval(const ComplexMatrix& a);

/// Both Weyl sides as BoundResults: same-mode distance <= ||A - B|| (lower)
/// and ||A - B|| <= opposed-mode distance (upper).
std::pair<BoundResult, BoundResult> bound_weyl(const ComplexMatrix& a, const ComplexMatrix& b);

/// Every catalog bound with default map/functional choices, for the CLI and
/// the soundness sweeps. B = A reproduces the single-matrix forms.
std::vector<BoundResult> evaluate_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const std::vector<std::string>& selection);
std::vector<std::string> bound_names();

}  // namespace spb
