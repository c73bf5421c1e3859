#include "spectral_bounds/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral_bounds/rng.hpp"

namespace spb {

namespace {

ComplexMatrix gaussian_matrix(std::size_t n, CounterRng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

// Modified Gram-Schmidt run twice; column norms are real positive, so the R
// diagonal needs no extra phase normalization.
ComplexMatrix orthonormalize(ComplexMatrix g) {
  const std::size_t n = g.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
        for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, j));
      norm = std::sqrt(norm);
      if (norm <= 1e-300) throw std::runtime_error("sample_unitary: rank-deficient sample");
      for (std::size_t i = 0; i < n; ++i) g(i, j) /= norm;
    }
  }
  return g;
}

}  // namespace

EnsembleKind ensemble_kind_from_string(const std::string& s) {
  if (s == "hermitian_gaussian") return EnsembleKind::hermitian_gaussian;
  if (s == "normal_unitary_conjugated") return EnsembleKind::normal_unitary_conjugated;
  if (s == "psd") return EnsembleKind::psd;
  if (s == "circulant") return EnsembleKind::circulant;
  throw std::invalid_argument("unknown ensemble kind '" + s + "'");
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::hermitian_gaussian: return "hermitian_gaussian";
    case EnsembleKind::normal_unitary_conjugated: return "normal_unitary_conjugated";
    case EnsembleKind::psd: return "psd";
    case EnsembleKind::circulant: return "circulant";
  }
  throw std::logic_error("to_string: unknown ensemble kind");
}

ComplexMatrix sample_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream_index) {
  CounterRng rng(seed, stream_index);
  return orthonormalize(gaussian_matrix(n, rng));
}

ComplexMatrix sample_matrix(EnsembleKind kind, std::size_t n, std::uint64_t seed,
                            std::uint64_t stream_index) {
  if (n < 2) throw std::invalid_argument("sample_matrix: n must be >= 2");
  CounterRng rng(seed, stream_index);
  switch (kind) {
    case EnsembleKind::hermitian_gaussian: {
      const ComplexMatrix g = gaussian_matrix(n, rng);
      return g * Complex{0.5, 0.0} + g.adjoint() * Complex{0.5, 0.0};
    }
    case EnsembleKind::normal_unitary_conjugated: {
      const ComplexMatrix u = orthonormalize(gaussian_matrix(n, rng));
      ComplexMatrix d(n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.complex_gaussian();
      return u * d * u.adjoint();
    }
    case EnsembleKind::psd: {
      const ComplexMatrix g = gaussian_matrix(n, rng);
      return g.adjoint() * g;
    }
    case EnsembleKind::circulant: {
      std::vector<Complex> row(n);
      for (auto& z : row) z = rng.complex_gaussian();
      ComplexMatrix c(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = row[(j + n - i) % n];
      return c;
    }
  }
  throw std::logic_error("sample_matrix: unknown ensemble kind");
}

std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("generate_ensemble: trials must be >= 1");
  std::vector<ComplexMatrix> out;
  out.reserve(spec.trials);
  for (int t = 0; t < spec.trials; ++t)
    out.push_back(sample_matrix(spec.kind, spec.n, spec.seed, 2 * static_cast<std::uint64_t>(t)));
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> generate_pair(const EnsembleSpec& spec, int trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  return {sample_matrix(spec.kind, spec.n, spec.seed, 2 * t),
          sample_matrix(spec.kind, spec.n, spec.seed, 2 * t + 1)};
}

}  // namespace spb
