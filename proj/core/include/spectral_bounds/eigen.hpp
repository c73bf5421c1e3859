#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb {

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr std::size_t kMaxGeneralEigDim = 64;

/// Certified eigenvalue multiset. max_residual is max_i ||A v_i - lambda_i v_i||_2
/// over computed eigenpairs (Jacobi path) or the Schur-form residual
/// ||A Q - Q T||_F (QR path).
struct Spectrum {
  std::vector<Complex> values;
  double max_residual = 0.0;
  bool certified_real = false;  // Hermitian source; imaginary parts clamped to 0
  std::string ordering_key;
};

/// Full Hermitian eigendecomposition: A = V diag(values) V*.
struct HermitianEigen {
  std::vector<double> values;  // in diagonalization order (not sorted)
  ComplexMatrix vectors;       // columns are eigenvectors
  double max_residual = 0.0;
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius mass is
/// <= 1e-14 ||A||_F; throws after 30 sweeps without convergence.
HermitianEigen eig_hermitian_full(const ComplexMatrix& a);

/// Spectrum of a (certified) Hermitian matrix via eig_hermitian_full.
Spectrum eig_hermitian(const ComplexMatrix& a);

/// Complex spectrum via Hessenberg reduction + shifted QR; n <= 64.
/// Values sorted lexicographically by (Re desc, Im desc).
Spectrum eig_general(const ComplexMatrix& a);

/// sqrt(lambda_max(A*A)); for Hermitian A this equals max |lambda_i|.
double spectral_norm(const ComplexMatrix& a);

/// Sorted real eigenvalue lists; ties broken by original index (stable sort).
/// Require a certified-real spectrum.
std::vector<double> eig_down(const Spectrum& s);
std::vector<double> eig_up(const Spectrum& s);

enum class PairOrdering { same, opposed };

/// mode=same: max_j |lambda_j_down(A) - lambda_j_down(B)|;
/// mode=opposed: max_j |lambda_j_down(A) - lambda_j_up(B)|.
double ordered_eig_distance(const ComplexMatrix& a, const ComplexMatrix& b, PairOrdering mode);

/// (same-mode distance, opposed-mode distance); brackets ||A - B||.
std::pair<double, double> weyl_interval(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{i,j} |lambda_i(A) - lambda_j(B)|, brute force.
double max_pairwise_eig_distance(const Spectrum& sa, const Spectrum& sb);

/// max_{i,j} |lambda_i - lambda_j|.
double spread(const Spectrum& s);

}  // namespace spb
