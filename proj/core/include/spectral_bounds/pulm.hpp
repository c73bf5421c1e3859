#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb {

/// Positive unital linear functional phi: M(n) -> C. Every descriptor reduces
/// to tr(W A) with W psd, tr W = 1 (see canonical_weight). Indices are
/// 1-based, matching the serialized descriptor format.
struct PulFunctional {
  enum class Kind {
    diag,                 // a_ii
    vector_state,         // <x, A x>, ||x|| = 1
    index_avg,            // (1/|I|) sum_{i,j in I} a_ij
    mean_all,             // (1/n)  sum_{i,j}      a_ij
    offdiag_complement,   // (1/n)(tr A - (1/(n-1)) sum_{i != j} a_ij)
    theta_pair,           // (1/2)(a_ii + a_jj + a_ij e^{i th} + a_ji e^{-i th})
    half_trace_pair,      // (1/2)(a_ii + a_jj)
    custom                // tr(W A), W psd with unit trace
  };

  Kind kind = Kind::mean_all;
  std::size_t n = 0;
  std::size_t i = 1, j = 2;  // 1-based
  double theta = 0.0;
  std::vector<Complex> x;  // vector_state
  std::vector<std::size_t> indices;  // index_avg, 1-based
  std::optional<ComplexMatrix> weight;  // custom

  static PulFunctional make_diag(std::size_t n, std::size_t i);
  static PulFunctional make_vector_state(std::vector<Complex> x);
  static PulFunctional make_index_avg(std::size_t n, std::vector<std::size_t> indices);
  static PulFunctional make_mean_all(std::size_t n);
  static PulFunctional make_offdiag_complement(std::size_t n);
  static PulFunctional make_theta_pair(std::size_t n, std::size_t i, std::size_t j, double theta);
  static PulFunctional make_half_trace_pair(std::size_t n, std::size_t i, std::size_t j);
  static PulFunctional make_custom(ComplexMatrix weight);
};

/// Positive unital linear map Phi: M(n) -> M(k), k in {1, 2, n}.
struct PulMap {
  enum class Kind {
    identity,
    trace_complement,       // A -> (tr A * I - A)/(n-1)
    compression_2x2,        // A -> [[a_ii, a_ij], [a_ji, a_jj]]
    flip_compression_2x2,   // B -> [[b_jj, -b_ij], [-b_ji, b_ii]]
    diagonal_restriction,   // A -> diag(a_11, ..., a_nn)
    functional_lift         // A -> [phi(A)] (1x1)
  };

  Kind kind = Kind::identity;
  std::size_t n_in = 0;
  std::size_t i = 1, j = 2;  // 1-based, compressions
  std::optional<PulFunctional> functional;

  std::size_t output_dim() const;

  static PulMap make_identity(std::size_t n);
  static PulMap make_trace_complement(std::size_t n);
  static PulMap make_compression_2x2(std::size_t n, std::size_t i, std::size_t j);
  static PulMap make_flip_compression_2x2(std::size_t n, std::size_t i, std::size_t j);
  static PulMap make_diagonal_restriction(std::size_t n);
  static PulMap make_functional_lift(PulFunctional phi);
};

Complex apply_functional(const PulFunctional& phi, const ComplexMatrix& a);

ComplexMatrix apply_map(const PulMap& map, const ComplexMatrix& a);

/// W with phi(A) = tr(W A), W psd, tr W = 1.
ComplexMatrix canonical_weight(const PulFunctional& phi);

struct ValidationReport {
  double unitality_defect = 0.0;
  double max_positivity_violation = 0.0;
  double max_linearity_defect = 0.0;
  bool pass = false;
};

/// Checks unitality, positivity on random psd samples (P = G*G), and
/// linearity on random pairs; pass iff every defect <= 1e-10 relative.
ValidationReport validate_pulm(const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                               std::size_t n_in, std::size_t n_out, int trials,
                               std::uint64_t seed);
ValidationReport validate_pulm(const PulMap& map, int trials, std::uint64_t seed);
ValidationReport validate_pulm(const PulFunctional& phi, int trials, std::uint64_t seed);

/// JSON tag format, e.g. {"kind":"theta_pair","i":1,"j":2,"theta":0.785}.
std::string functional_to_json(const PulFunctional& phi);
PulFunctional functional_from_json(const std::string& text);

}  // namespace spb
