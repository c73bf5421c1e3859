#include "spectral_bounds/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "spectral_bounds/eigen.hpp"

namespace spb {

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * other(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * scalar;
  return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) { return m * scalar; }

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

ComplexMatrix skew_real_part(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  const Complex half_over_i{0.0, -0.5};  // 1/(2i)
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
  return out;
}

ComplexMatrix diagonal_part(const ComplexMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out(i, i) = a(i, i);
  return out;
}

ComplexMatrix offdiagonal_part(const ComplexMatrix& a) { return a - diagonal_part(a); }

MatrixClass classify(const ComplexMatrix& a, double tol_class) {
  MatrixClass c;
  const ComplexMatrix adj = a.adjoint();
  c.hermiticity_defect = (a - adj).frobenius_norm();
  c.normality_defect = (a * adj - adj * a).frobenius_norm();

  const double scale = std::max(1.0, a.frobenius_norm());
  c.is_hermitian = c.hermiticity_defect <= tol_class * scale;
  c.is_normal = c.is_hermitian || c.normality_defect <= tol_class * scale;

  if (c.is_hermitian) {
    const Spectrum s = eig_hermitian(hermitian_part(a));
    double min_eig = s.values.empty() ? 0.0 : s.values.front().real();
    for (const auto& z : s.values) min_eig = std::min(min_eig, z.real());
    const double thresh = tol_class * a.frobenius_norm();
    c.is_psd = min_eig >= -thresh;
    c.is_pd = min_eig > thresh;
  }
  return c;
}

std::string matrix_digest(const ComplexMatrix& a) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto absorb = [&h](const void* bytes, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t k = 0; k < len; ++k) {
      h ^= p[k];
      h *= 0x100000001b3ull;
    }
  };
  const std::uint64_t n = a.size();
  absorb(&n, sizeof(n));
  for (const auto& z : a.entries()) {
    double re = z.real(), im = z.imag();
    absorb(&re, sizeof(re));
    absorb(&im, sizeof(im));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace spb
