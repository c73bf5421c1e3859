#pragma once

#include <vector>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb {

inline constexpr int kDefaultSupportAngles = 720;

/// Convex polygonal approximation of the boundary of the numerical range
/// W(A) = { <x, Ax> : ||x|| = 1 }, one support point per swept angle.
struct NumericalRangeBoundary {
  std::vector<Complex> points;
  std::vector<double> support_angles;  // in [0, 2pi)
};

/// Support-function sweep: for each theta, the top eigenvector x of
/// (e^{i theta} A + e^{-i theta} A*)/2 yields the boundary point <x, A x>.
NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& a,
                                                int num_angles = kDefaultSupportAngles);

/// max pairwise distance between boundary points of W(A) and W(B), with one
/// local refinement pass around the maximizing angle pair.
double s_numerical_range(const ComplexMatrix& a, const ComplexMatrix& b,
                         int num_angles = kDefaultSupportAngles);

/// diam W(A) = s(W(A), W(A)).
double diam_numerical_range(const ComplexMatrix& a, int num_angles = kDefaultSupportAngles);

/// Monotone-chain convex hull, counterclockwise, no repeated last point.
std::vector<Complex> convex_hull(std::vector<Complex> points);

/// Euclidean distance from z to the hull (0 when inside). Hull may be a
/// point or segment.
double distance_to_hull(Complex z, const std::vector<Complex>& hull);

}  // namespace spb
