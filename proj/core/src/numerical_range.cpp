#include "spectral_bounds/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectral_bounds/eigen.hpp"

namespace spb {

namespace {

// Boundary point in direction theta: <x, A x> for the top eigenvector x of
// the rotated Hermitian part (e^{i theta} A + e^{-i theta} A*)/2.
Complex support_point(const ComplexMatrix& a, const ComplexMatrix& adj, double theta) {
  const std::size_t n = a.size();
  const Complex w = std::polar(1.0, theta);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (w * a(i, j) + std::conj(w) * adj(i, j));
  const HermitianEigen eig = eig_hermitian_full(h);
  std::size_t top = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (eig.values[k] > eig.values[top]) top = k;
  Complex val{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{0.0, 0.0};
    for (std::size_t jj = 0; jj < n; ++jj) row += a(i, jj) * eig.vectors(jj, top);
    val += std::conj(eig.vectors(i, top)) * row;
  }
  return val;
}

double cross(Complex o, Complex p, Complex q) {
  return (p.real() - o.real()) * (q.imag() - o.imag()) -
         (p.imag() - o.imag()) * (q.real() - o.real());
}

double max_set_distance(const std::vector<Complex>& pa, const std::vector<Complex>& pb,
                        std::size_t* arg_a = nullptr, std::size_t* arg_b = nullptr) {
  double best = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (std::size_t j = 0; j < pb.size(); ++j) {
      const double d = std::abs(pa[i] - pb[j]);
      if (d > best) {
        best = d;
        if (arg_a) *arg_a = i;
        if (arg_b) *arg_b = j;
      }
    }
  }
  return best;
}

std::vector<Complex> refined_points(const ComplexMatrix& a, const ComplexMatrix& adj,
                                    double theta_star, double step, int subdivisions) {
  std::vector<Complex> out;
  out.reserve(subdivisions + 1);
  for (int k = 0; k <= subdivisions; ++k) {
    const double theta = theta_star - step + 2.0 * step * k / subdivisions;
    out.push_back(support_point(a, adj, theta));
  }
  return out;
}

}  // namespace

NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& a, int num_angles) {
  if (num_angles < 8)
    throw std::invalid_argument("numerical_range_boundary: need at least 8 angles");
  const ComplexMatrix adj = a.adjoint();
  NumericalRangeBoundary out;
  out.points.reserve(num_angles);
  out.support_angles.reserve(num_angles);
  for (int k = 0; k < num_angles; ++k) {
    const double theta = 2.0 * M_PI * k / num_angles;
    out.support_angles.push_back(theta);
    out.points.push_back(support_point(a, adj, theta));
  }
  return out;
}

double s_numerical_range(const ComplexMatrix& a, const ComplexMatrix& b, int num_angles) {
  const NumericalRangeBoundary ba = numerical_range_boundary(a, num_angles);
  const NumericalRangeBoundary bb = numerical_range_boundary(b, num_angles);
  std::size_t ia = 0, ib = 0;
  double best = max_set_distance(ba.points, bb.points, &ia, &ib);

  // one refinement pass around the maximizing angle pair
  const double step = 2.0 * M_PI / num_angles;
  const ComplexMatrix adj_a = a.adjoint();
  const ComplexMatrix adj_b = b.adjoint();
  const std::vector<Complex> ra = refined_points(a, adj_a, ba.support_angles[ia], step, 16);
  const std::vector<Complex> rb = refined_points(b, adj_b, bb.support_angles[ib], step, 16);
  best = std::max(best, max_set_distance(ra, rb));
  best = std::max(best, max_set_distance(ra, bb.points));
  best = std::max(best, max_set_distance(ba.points, rb));
  return best;
}

double diam_numerical_range(const ComplexMatrix& a, int num_angles) {
  return s_numerical_range(a, a, num_angles);
}

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  std::sort(points.begin(), points.end(), [](Complex p, Complex q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;
  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_hull(Complex z, const std::vector<Complex>& hull) {
  if (hull.empty()) return std::abs(z);
  if (hull.size() == 1) return std::abs(z - hull[0]);

  auto segment_distance = [&](Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - p);
    double t = ((z.real() - p.real()) * d.real() + (z.imag() - p.imag()) * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (p + t * d));
  };

  if (hull.size() == 2) return segment_distance(hull[0], hull[1]);

  bool inside = true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex p = hull[i];
    const Complex q = hull[(i + 1) % hull.size()];
    if (cross(p, q, z) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < hull.size(); ++i)
    best = std::min(best, segment_distance(hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

}  // namespace spb
