#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spb {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Immutable-by-convention after
/// construction; all operations below return new values.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) {
    if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
  }
  ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    if (data_.size() != n * n) throw std::invalid_argument("ComplexMatrix: entry count mismatch");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  const std::vector<Complex>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Complex scalar) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);

/// Tolerance-certified structural flags. is_hermitian implies is_normal;
/// is_pd implies is_psd implies is_hermitian.
struct MatrixClass {
  bool is_hermitian = false;
  bool is_normal = false;
  bool is_psd = false;
  bool is_pd = false;
  double hermiticity_defect = 0.0;  // ||A - A*||_F
  double normality_defect = 0.0;    // ||AA* - A*A||_F
};

struct SpectralInterval {
  double m = 0.0;
  double M = 0.0;
};

inline constexpr double kDefaultClassTol = 1e-10;

MatrixClass classify(const ComplexMatrix& a, double tol_class = kDefaultClassTol);

/// (A + A*)/2; Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
/// (A - A*)/(2i); Hermitian.
ComplexMatrix skew_real_part(const ComplexMatrix& a);
/// D with D_ii = a_ii, zero elsewhere.
ComplexMatrix diagonal_part(const ComplexMatrix& a);
/// A - diagonal_part(A).
ComplexMatrix offdiagonal_part(const ComplexMatrix& a);

/// FNV-1a over dimension and entry bytes, 16 hex chars.
std::string matrix_digest(const ComplexMatrix& a);

}  // namespace spb
