#include "spectral_bounds/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spb {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Relative Hermitian check; the eigen oracle refuses input a caller has not
// symmetrized.
void require_hermitian(const ComplexMatrix& a, const char* where) {
  const double defect = (a - a.adjoint()).frobenius_norm();
  if (defect > 1e-10 * std::max(1.0, a.frobenius_norm()))
    throw std::invalid_argument(std::string(where) + ": input is not Hermitian");
}

double residual_of_pair(const ComplexMatrix& a, const ComplexMatrix& v, std::size_t col,
                        double lambda) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex r{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) r += a(i, k) * v(k, col);
    r -= lambda * v(i, col);
    s += std::norm(r);
  }
  return std::sqrt(s);
}

}  // namespace

HermitianEigen eig_hermitian_full(const ComplexMatrix& a) {
  require_hermitian(a, "eig_hermitian");
  const std::size_t n = a.size();
  const double norm_a = a.frobenius_norm();
  const double off_target = 1e-14 * norm_a;

  ComplexMatrix w = hermitian_part(a);  // kill rounding-level asymmetry
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweeps = 0;
  const int max_sweeps = 30;
  while (offdiag_frobenius(w) > off_target && norm_a > 0.0) {
    if (sweeps >= max_sweeps)
      throw std::runtime_error("eig_hermitian: no convergence after 30 Jacobi sweeps (off = " +
                               std::to_string(offdiag_frobenius(w)) + ")");
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = w(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        // phase factor turning the pivot real, then a real Jacobi rotation
        const Complex phase = apq / mag;  // e^{-i alpha} with alpha = -arg(apq)
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // 2x2 unitary J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex jpp = c, jpq = s;
        const Complex jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
        // rows: W <- J* W
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wp = w(p, k), wq = w(q, k);
          w(p, k) = std::conj(jpp) * wp + std::conj(jqp) * wq;
          w(q, k) = std::conj(jpq) * wp + std::conj(jqq) * wq;
        }
        // columns: W <- W J, V <- V J
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wp = w(k, p), wq = w(k, q);
          w(k, p) = wp * jpp + wq * jqp;
          w(k, q) = wp * jpq + wq * jqq;
          const Complex vp = v(k, p), vq = v(k, q);
          v(k, p) = vp * jpp + vq * jqp;
          v(k, q) = vp * jpq + vq * jqq;
        }
        w(p, q) = Complex{0.0, 0.0};
        w(q, p) = Complex{0.0, 0.0};
        w(p, p) = Complex{w(p, p).real(), 0.0};
        w(q, q) = Complex{w(q, q).real(), 0.0};
      }
    }
  }

  HermitianEigen out;
  out.vectors = std::move(v);
  out.sweeps = sweeps;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = w(i, i).real();
  double max_res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    max_res = std::max(max_res, residual_of_pair(a, out.vectors, i, out.values[i]));
  out.max_residual = max_res;
  return out;
}

Spectrum eig_hermitian(const ComplexMatrix& a) {
  const HermitianEigen full = eig_hermitian_full(a);
  Spectrum s;
  s.values.reserve(full.values.size());
  for (double lambda : full.values) s.values.emplace_back(lambda, 0.0);
  s.max_residual = full.max_residual;
  s.certified_real = true;
  s.ordering_key = "diagonalization";
  return s;
}

namespace {

struct Givens {
  double c;   // real
  Complex s;  // G = [[c, s], [-conj(s), c]]
};

Givens make_givens(Complex f, Complex g) {
  const double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) return {1.0, Complex{0.0, 0.0}};
  if (af == 0.0) return {0.0, std::conj(g) / ag};
  const double d = std::hypot(af, ag);
  return {af / d, (f / af) * std::conj(g) / d};
}

// Left action on rows r1, r2, columns [c0, n): [r1; r2] <- G [r1; r2].
void apply_givens_left(ComplexMatrix& h, std::size_t r1, std::size_t r2, std::size_t c0,
                       const Givens& g) {
  const std::size_t n = h.size();
  for (std::size_t k = c0; k < n; ++k) {
    const Complex a = h(r1, k), b = h(r2, k);
    h(r1, k) = g.c * a + g.s * b;
    h(r2, k) = -std::conj(g.s) * a + g.c * b;
  }
}

// Right action on columns c1, c2, rows [0, r_end): [col1, col2] <- [col1, col2] G*.
void apply_givens_right(ComplexMatrix& h, std::size_t c1, std::size_t c2, std::size_t r_end,
                        const Givens& g) {
  for (std::size_t k = 0; k < r_end; ++k) {
    const Complex a = h(k, c1), b = h(k, c2);
    h(k, c1) = g.c * a + std::conj(g.s) * b;
    h(k, c2) = -g.s * a + g.c * b;
  }
}

// Householder reduction to upper Hessenberg form, accumulating the unitary Q
// with A = Q H Q*.
void hessenberg(ComplexMatrix& h, ComplexMatrix& q) {
  const std::size_t n = h.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm <= 1e-300) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
    const Complex alpha = -phase * xnorm;
    std::vector<Complex> v(n, Complex{0.0, 0.0});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 <= 1e-300) continue;
    const double beta = 2.0 / vnorm2;
    // H <- P H with P = I - beta v v*
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot{0.0, 0.0};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
    }
    // H <- H P, Q <- Q P
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{0.0, 0.0};
      for (std::size_t jj = k + 1; jj < n; ++jj) dot += h(i, jj) * v[jj];
      dot *= beta;
      for (std::size_t jj = k + 1; jj < n; ++jj) h(i, jj) -= dot * std::conj(v[jj]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{0.0, 0.0};
      for (std::size_t jj = k + 1; jj < n; ++jj) dot += q(i, jj) * v[jj];
      dot *= beta;
      for (std::size_t jj = k + 1; jj < n; ++jj) q(i, jj) -= dot * std::conj(v[jj]);
    }
  }
}

Complex wilkinson_shift(const ComplexMatrix& h, std::size_t m) {
  const Complex a = h(m - 1, m - 1), b = h(m - 1, m);
  const Complex c = h(m, m - 1), d = h(m, m);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex l1 = d + half + disc;
  const Complex l2 = d + half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

Spectrum eig_general(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  if (n > kMaxGeneralEigDim)
    throw std::invalid_argument("eig_general: dimension " + std::to_string(n) +
                                " exceeds the supported maximum of 64");
  ComplexMatrix h = a;
  ComplexMatrix q = ComplexMatrix::identity(n);
  hessenberg(h, q);

  const double eps = 1e-15;
  const std::size_t max_iter = 100 * n;
  std::size_t iter = 0;
  std::size_t stall = 0;

  std::size_t m = n - 1;
  while (m > 0) {
    // deflate converged subdiagonals
    while (m > 0) {
      const double sub = std::abs(h(m, m - 1));
      if (sub <= eps * (std::abs(h(m - 1, m - 1)) + std::abs(h(m, m)))) {
        h(m, m - 1) = Complex{0.0, 0.0};
        --m;
        stall = 0;
      } else {
        break;
      }
    }
    if (m == 0) break;

    // active block [l, m]
    std::size_t l = m;
    while (l > 0) {
      const double sub = std::abs(h(l, l - 1));
      if (sub <= eps * (std::abs(h(l - 1, l - 1)) + std::abs(h(l, l)))) {
        h(l, l - 1) = Complex{0.0, 0.0};
        break;
      }
      --l;
    }

    if (++iter > max_iter)
      throw std::runtime_error("eig_general: QR iteration failed to deflate within " +
                               std::to_string(max_iter) + " steps");

    Complex mu = wilkinson_shift(h, m);
    if (++stall % 12 == 0) {
      // exceptional shift to break rare cycles
      mu = h(m, m) + 0.75 * std::abs(h(m, m - 1));
    }

    for (std::size_t k = l; k <= m; ++k) h(k, k) -= mu;
    std::vector<Givens> rots(m - l);
    for (std::size_t k = l; k < m; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rots[k - l] = g;
      apply_givens_left(h, k, k + 1, k, g);
      h(k + 1, k) = Complex{0.0, 0.0};
    }
    for (std::size_t k = l; k < m; ++k) {
      const Givens& g = rots[k - l];
      apply_givens_right(h, k, k + 1, std::min(k + 2, n), g);
      apply_givens_right(q, k, k + 1, n, g);
    }
    for (std::size_t k = l; k <= m; ++k) h(k, k) += mu;
  }

  // Schur residual ||A Q - Q T||_F with T the strict upper-triangular part of H
  ComplexMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) t(i, j) = h(i, j);
  const double residual = (a * q - q * t).frobenius_norm();

  Spectrum s;
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.values[i] = h(i, i);
  std::sort(s.values.begin(), s.values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  s.max_residual = residual;
  s.certified_real = false;
  s.ordering_key = "re_desc_im_desc";
  return s;
}

double spectral_norm(const ComplexMatrix& a) {
  const ComplexMatrix gram = a.adjoint() * a;
  const Spectrum s = eig_hermitian(hermitian_part(gram));
  double max_eig = 0.0;
  for (const auto& z : s.values) max_eig = std::max(max_eig, z.real());
  return std::sqrt(std::max(0.0, max_eig));
}

std::vector<double> eig_down(const Spectrum& s) {
  if (!s.certified_real)
    throw std::invalid_argument("eig_down: spectrum is not certified real");
  std::vector<double> v(s.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.values[i].real();
  std::stable_sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

std::vector<double> eig_up(const Spectrum& s) {
  if (!s.certified_real)
    throw std::invalid_argument("eig_up: spectrum is not certified real");
  std::vector<double> v(s.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.values[i].real();
  std::stable_sort(v.begin(), v.end());
  return v;
}

double ordered_eig_distance(const ComplexMatrix& a, const ComplexMatrix& b, PairOrdering mode) {
  if (a.size() != b.size())
    throw std::invalid_argument("ordered_eig_distance: dimension mismatch");
  const std::vector<double> la = eig_down(eig_hermitian(a));
  const Spectrum sb = eig_hermitian(b);
  const std::vector<double> lb = mode == PairOrdering::same ? eig_down(sb) : eig_up(sb);
  double d = 0.0;
  for (std::size_t k = 0; k < la.size(); ++k) d = std::max(d, std::abs(la[k] - lb[k]));
  return d;
}

std::pair<double, double> weyl_interval(const ComplexMatrix& a, const ComplexMatrix& b) {
  return {ordered_eig_distance(a, b, PairOrdering::same),
          ordered_eig_distance(a, b, PairOrdering::opposed)};
}

double max_pairwise_eig_distance(const Spectrum& sa, const Spectrum& sb) {
  double d = 0.0;
  for (const auto& x : sa.values)
    for (const auto& y : sb.values) d = std::max(d, std::abs(x - y));
  return d;
}

double spread(const Spectrum& s) { return max_pairwise_eig_distance(s, s); }

}  // namespace spb
