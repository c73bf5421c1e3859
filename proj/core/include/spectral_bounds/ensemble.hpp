#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb {

enum class EnsembleKind {
  hermitian_gaussian,         // (G + G*)/2
  normal_unitary_conjugated,  // U diag(z) U*
  psd,                        // G* G
  circulant                   // random complex first row
};

EnsembleKind ensemble_kind_from_string(const std::string& s);
std::string to_string(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::hermitian_gaussian;
  std::size_t n = 2;
  int trials = 1;
  std::uint64_t seed = 0;
};

/// One matrix from stream (seed, stream_index); deterministic across
/// platforms and thread counts.
ComplexMatrix sample_matrix(EnsembleKind kind, std::size_t n, std::uint64_t seed,
                            std::uint64_t stream_index);

std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec);

/// Independent (A, B) pair for trial t: streams 2t and 2t + 1.
std::pair<ComplexMatrix, ComplexMatrix> generate_pair(const EnsembleSpec& spec, int trial);

/// Unitary factor from Gram-Schmidt QR of a complex Gaussian sample, R
/// diagonal phase-normalized.
ComplexMatrix sample_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream_index);

}  // namespace spb
