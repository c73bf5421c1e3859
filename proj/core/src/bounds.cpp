#include "spectral_bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "spectral_bounds/numerical_range.hpp"

namespace spb {

double verify_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("SPECTRAL_BOUNDS_TOL")) {
      const double v = std::atof(env);
      if (v > 0.0) return v;
    }
    return 1e-8;
  }();
  return tol;
}

namespace {

std::string pair_digest(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matrix_digest(a) + ":" + matrix_digest(b);
}

BoundResult make_lower(std::string name, std::string citation, double bound, double exact,
                       std::string digest) {
  BoundResult r;
  r.name = std::move(name);
  r.citation = std::move(citation);
  r.direction = BoundDirection::lower;
  r.bound = bound;
  r.exact = exact;
  r.slack = exact - bound;
  r.inputs_digest = std::move(digest);
  return r;
}

BoundResult make_upper(std::string name, std::string citation, double bound, double exact,
                       std::string digest) {
  BoundResult r;
  r.name = std::move(name);
  r.citation = std::move(citation);
  r.direction = BoundDirection::upper;
  r.bound = bound;
  r.exact = exact;
  r.slack = bound - exact;
  r.inputs_digest = std::move(digest);
  return r;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

// Memo for oracle quantities recomputed across the candidate loops of a
// single evaluate_bounds call. Recomputation is bit-identical, so the cache
// cannot change any result; it only removes redundant eigensolves.
template <typename V>
class DigestMemo {
 public:
  const V* find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return &v;
    return nullptr;
  }
  const V& put(std::string key, V value) {
    if (entries_.size() >= 16) entries_.erase(entries_.begin());
    entries_.emplace_back(std::move(key), std::move(value));
    return entries_.back().second;
  }

 private:
  std::vector<std::pair<std::string, V>> entries_;
};

MatrixClass classify_cached(const ComplexMatrix& a) {
  thread_local DigestMemo<MatrixClass> memo;
  const std::string key = matrix_digest(a);
  if (const MatrixClass* hit = memo.find(key)) return *hit;
  return memo.put(key, classify(a));
}

Spectrum oracle_spectrum(const ComplexMatrix& a, const MatrixClass& cls) {
  thread_local DigestMemo<Spectrum> memo;
  const std::string key = matrix_digest(a);
  if (const Spectrum* hit = memo.find(key)) return *hit;
  return memo.put(key,
                  cls.is_hermitian ? eig_hermitian(hermitian_part(a)) : eig_general(a));
}

// Exact side of the Theorem 2.1 family: max pairwise eigenvalue distance for
// normal inputs, numerical-range sweep otherwise.
double exact_max_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  thread_local DigestMemo<double> memo;
  const std::string key = pair_digest(a, b);
  if (const double* hit = memo.find(key)) return *hit;
  const MatrixClass ca = classify_cached(a);
  const MatrixClass cb = classify_cached(b);
  const double exact =
      (ca.is_normal && cb.is_normal)
          ? max_pairwise_eig_distance(oracle_spectrum(a, ca), oracle_spectrum(b, cb))
          : s_numerical_range(a, b);
  return memo.put(key, exact);
}

double real_part_checked(Complex z, double scale, const char* where) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, scale))
    throw std::runtime_error(std::string(where) + ": functional value is not real");
  return z.real();
}

// X <= Y in matrix order, scalarized along the minimizing eigenvector v of
// Y - X: exact = v* X v, bound = v* Y v, so slack = lambda_min(Y - X).
BoundResult matrix_order_result(std::string name, std::string citation, const ComplexMatrix& x,
                                const ComplexMatrix& y, std::string digest) {
  const ComplexMatrix diff = hermitian_part(y - x);
  const HermitianEigen eig = eig_hermitian_full(diff);
  std::size_t arg = 0;
  for (std::size_t k = 1; k < eig.values.size(); ++k)
    if (eig.values[k] < eig.values[arg]) arg = k;
  const std::size_t n = x.size();
  Complex vx{0.0, 0.0}, vy{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Complex rx{0.0, 0.0}, ry{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      rx += x(i, j) * eig.vectors(j, arg);
      ry += y(i, j) * eig.vectors(j, arg);
    }
    vx += std::conj(eig.vectors(i, arg)) * rx;
    vy += std::conj(eig.vectors(i, arg)) * ry;
  }
  return make_upper(std::move(name), std::move(citation), vy.real(), vx.real(),
                    std::move(digest));
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  const Spectrum s = eig_hermitian(hermitian_part(hermitian));
  double v = s.values.front().real();
  for (const auto& z : s.values) v = std::min(v, z.real());
  return v;
}

double sum_offdiag_abs_input(const ComplexMatrix& a, Complex* out) {
  Complex s{0.0, 0.0};
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a(i, j);
  *out = s;
  return std::abs(s);
}

void check_interval(const ComplexMatrix& a, const SpectralInterval& interval,
                    const Spectrum& s, const char* where) {
  if (interval.m > interval.M)
    throw std::invalid_argument(std::string(where) + ": interval has m > M");
  const double tol = 1e-8 * std::max(1.0, a.frobenius_norm());
  for (const auto& z : s.values) {
    if (z.real() < interval.m - tol || z.real() > interval.M + tol)
      throw std::invalid_argument(std::string(where) +
                                  ": oracle spectrum escapes the stated interval");
  }
}

}  // namespace

SpectralInterval oracle_interval(const ComplexMatrix& a) {
  const Spectrum s = oracle_spectrum(a, classify_cached(a));
  SpectralInterval iv;
  iv.m = s.values.front().real();
  iv.M = iv.m;
  for (const auto& z : s.values) {
    iv.m = std::min(iv.m, z.real());
    iv.M = std::max(iv.M, z.real());
  }
  return iv;
}

BoundResult bound_thm21(const ComplexMatrix& a, const ComplexMatrix& b,
                        const PulFunctional& phi1, const PulFunctional& phi2) {
  require_same_dim(a, b, "bound_thm21");
  const double bound = std::abs(apply_functional(phi1, a) - apply_functional(phi2, b));
  return make_lower("thm2.1", "eq (2.1)/(2.3)", bound, exact_max_distance(a, b),
                    pair_digest(a, b));
}

BoundResult bound_diag_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "bound_diag_pair");
  double bound = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      bound = std::max(bound, std::abs(a(i, i) - b(j, j)));
  return make_lower("eq2.7", "eq (2.7)", bound, exact_max_distance(a, b), pair_digest(a, b));
}

BoundResult bound_thm22(const ComplexMatrix& a, const ComplexMatrix& b, const PulMap& map1,
                        const PulMap& map2) {
  require_same_dim(a, b, "bound_thm22");
  if (!classify_cached(a).is_hermitian || !classify_cached(b).is_hermitian)
    throw std::invalid_argument("bound_thm22: inputs must be Hermitian");
  if (map1.output_dim() != map2.output_dim())
    throw std::invalid_argument("bound_thm22: map output dimensions differ");
  const double bound = spectral_norm(apply_map(map1, a) - apply_map(map2, b));
  return make_lower("thm2.2", "eq (2.4)", bound,
                    ordered_eig_distance(a, b, PairOrdering::opposed), pair_digest(a, b));
}

BoundResult bound_eq25(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "bound_eq25");
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("bound_eq25: requires n >= 2");
  // A - B + n(B - (tr A / n) I) = A + (n-1)B - tr A * I
  ComplexMatrix arg = a + b * Complex{static_cast<double>(n - 1), 0.0};
  const Complex tr = a.trace();
  for (std::size_t i = 0; i < n; ++i) arg(i, i) -= tr;
  const double bound = spectral_norm(arg) / static_cast<double>(n - 1);
  return make_lower("eq2.5", "eq (2.5)", bound,
                    ordered_eig_distance(a, b, PairOrdering::opposed), pair_digest(a, b));
}

BoundResult bound_mirsky_pair(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t i,
                              std::size_t j) {
  require_same_dim(a, b, "bound_mirsky_pair");
  if (i == j) throw std::invalid_argument("bound_mirsky_pair: requires i != j");
  if (i < 1 || j < 1 || i > a.size() || j > a.size())
    throw std::invalid_argument("bound_mirsky_pair: index out of range");
  const std::size_t p = i - 1, q = j - 1;
  const double alpha = (a(p, p) - b(q, q)).real();
  const double beta = (a(q, q) - b(p, p)).real();
  const double root =
      std::sqrt((alpha - beta) * (alpha - beta) + 4.0 * std::norm(a(p, q) + b(p, q)));
  const double bound =
      std::max(0.5 * std::abs(alpha + beta + root), 0.5 * std::abs(alpha + beta - root));
  BoundResult r = make_lower("eq2.9", "eq (2.9)", bound,
                             ordered_eig_distance(a, b, PairOrdering::opposed),
                             pair_digest(a, b));
  r.extras = {{"i", static_cast<double>(i)}, {"j", static_cast<double>(j)}};
  return r;
}

std::vector<std::vector<std::size_t>> default_index_family(std::size_t n) {
  std::vector<std::vector<std::size_t>> family;
  for (std::size_t i = 1; i <= n; ++i) family.push_back({i});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) family.push_back({i, j});
  std::vector<std::size_t> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = i + 1;
  family.push_back(std::move(full));
  return family;
}

std::vector<std::vector<std::size_t>> power_set_index_family(std::size_t n) {
  if (n > 12) throw std::invalid_argument("power_set_index_family: n > 12");
  std::vector<std::vector<std::size_t>> family;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) set.push_back(i + 1);
    family.push_back(std::move(set));
  }
  return family;
}

BoundResult bound_index_sets(const ComplexMatrix& a, const ComplexMatrix& b,
                             const std::vector<std::vector<std::size_t>>& family) {
  require_same_dim(a, b, "bound_index_sets");
  if (family.empty()) throw std::invalid_argument("bound_index_sets: empty family");
  std::vector<Complex> avg_a, avg_b;
  for (const auto& set : family) {
    if (set.empty()) throw std::invalid_argument("bound_index_sets: empty index set in family");
    const PulFunctional phi_a = PulFunctional::make_index_avg(a.size(), set);
    avg_a.push_back(apply_functional(phi_a, a));
    avg_b.push_back(apply_functional(phi_a, b));
  }
  double bound = 0.0;
  for (const auto& u : avg_a)
    for (const auto& v : avg_b) bound = std::max(bound, std::abs(u - v));
  return make_lower("eq2.10", "eq (2.10)", bound, exact_max_distance(a, b), pair_digest(a, b));
}

BoundResult bound_cor24(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "bound_cor24");
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("bound_cor24: requires n >= 2");
  Complex off_a;
  sum_offdiag_abs_input(a, &off_a);
  Complex total_diff{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total_diff += b(i, j) - a(i, j);
  const double bound = std::abs(off_a / static_cast<double>(n - 1) +
                                total_diff / static_cast<double>(n));
  return make_lower("eq2.11", "eq (2.11)", bound, exact_max_distance(a, b), pair_digest(a, b));
}

BoundResult bound_cor25(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t i,
                        std::size_t j, std::optional<double> theta) {
  require_same_dim(a, b, "bound_cor25");
  if (i == j) throw std::invalid_argument("bound_cor25: requires i != j");
  if (i < 1 || j < 1 || i > a.size() || j > a.size())
    throw std::invalid_argument("bound_cor25: index out of range");
  const std::size_t p = i - 1, q = j - 1;
  const Complex base = (a(p, p) - b(p, p)) + (a(q, q) - b(q, q));
  const Complex apq = a(p, q), aqp = a(q, p);
  auto value_at = [&](double th) {
    const Complex w = std::polar(1.0, th);
    return 0.5 * std::abs(base + apq * w + aqp * std::conj(w));
  };

  double best_theta;
  if (theta) {
    best_theta = *theta;
  } else {
    // 1024-point grid, then golden-section refinement on the bracketing cell
    const int grid = 1024;
    int best_k = 0;
    double best_v = value_at(0.0);
    for (int k = 1; k < grid; ++k) {
      const double v = value_at(2.0 * M_PI * k / grid);
      if (v > best_v) {
        best_v = v;
        best_k = k;
      }
    }
    double lo = 2.0 * M_PI * (best_k - 1) / grid;
    double hi = 2.0 * M_PI * (best_k + 1) / grid;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = value_at(x1), f2 = value_at(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = value_at(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = value_at(x1);
      }
    }
    best_theta = 0.5 * (lo + hi);
  }

  BoundResult r = make_lower("eq2.12", "eq (2.12)", value_at(best_theta),
                             exact_max_distance(a, b), pair_digest(a, b));
  r.extras = {{"i", static_cast<double>(i)},
              {"j", static_cast<double>(j)},
              {"theta", best_theta}};
  return r;
}

BoundResult bound_mean_vs_pairdiag(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("bound_mean_vs_pairdiag: requires n >= 2");
  const Complex mean = apply_functional(PulFunctional::make_mean_all(n), a);
  double bound = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) bound = std::max(bound, std::abs(mean - 0.5 * (a(p, p) + a(q, q))));
  const ComplexMatrix d = diagonal_part(a);
  return make_lower("sec2.closing", "closing display of section 2", bound,
                    exact_max_distance(a, d), pair_digest(a, d));
}

BoundResult spread_lower_normal(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("spread_lower_normal: requires n >= 2");
  ComplexMatrix centered = a;
  const Complex mean = a.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) centered(i, i) -= mean;
  const double bound =
      spectral_norm(centered) * static_cast<double>(n) / static_cast<double>(n - 1);
  const MatrixClass cls = classify_cached(a);
  return make_lower("thm3.1", "eq (3.1)", bound, spread(oracle_spectrum(a, cls)),
                    pair_digest(a, a));
}

BoundResult spread_lower_functional(const ComplexMatrix& a, const PulFunctional& phi) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("spread_lower_functional: requires n >= 2");
  const Complex mean = a.trace() / static_cast<double>(n);
  const double bound = std::abs(apply_functional(phi, a) - mean) * static_cast<double>(n) /
                       static_cast<double>(n - 1);
  const MatrixClass cls = classify_cached(a);
  return make_lower("eq3.4", "eq (3.4)", bound, spread(oracle_spectrum(a, cls)),
                    pair_digest(a, a));
}

BoundResult spread_refined_thm32(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("spread_refined_thm32: requires n >= 2");
  const MatrixClass cls = classify_cached(a);
  const Spectrum s = oracle_spectrum(a, cls);
  Complex sum{0.0, 0.0};
  for (const auto& z : s.values) sum += z;
  double middle = 0.0;
  for (const auto& lam : s.values) {
    for (const auto& mu : s.values) {
      const Complex complement_avg = (sum - mu) / static_cast<double>(n - 1);
      middle = std::max(middle, std::abs(lam - complement_avg));
    }
  }
  Complex off;
  const double right = sum_offdiag_abs_input(a, &off) / static_cast<double>(n - 1);
  BoundResult r = make_lower("thm3.2", "eq (3.5)", middle, spread(s), pair_digest(a, a));
  r.extras = {{"right", right}, {"chain_slack", middle - right}};
  return r;
}

DetRatioResult det_ratio_bounds(const ComplexMatrix& a, const PulMap& map,
                                const SpectralInterval& interval) {
  const std::size_t n = a.size();
  const MatrixClass cls = classify_cached(a);
  if (!cls.is_pd) throw std::invalid_argument("det_ratio_bounds: matrix is not positive definite");
  const Spectrum s = oracle_spectrum(a, classify_cached(a));
  check_interval(a, interval, s, "det_ratio_bounds");
  if (interval.m <= 0.0)
    throw std::invalid_argument("det_ratio_bounds: interval must have m > 0");

  double log_det = 0.0;
  for (const auto& z : s.values) log_det += std::log(z.real());
  const double det_factor = std::exp(-log_det / static_cast<double>(n));

  const ComplexMatrix image = apply_map(map, a);
  const Spectrum si = eig_hermitian(hermitian_part(image));
  double lam_min = si.values.front().real(), lam_max = lam_min;
  for (const auto& z : si.values) {
    lam_min = std::min(lam_min, z.real());
    lam_max = std::max(lam_max, z.real());
  }

  const double p = static_cast<double>(n - 1) / static_cast<double>(n);
  const std::string digest = pair_digest(a, a);
  DetRatioResult out;
  out.lower = make_lower("thm3.3.lower", "eq (3.7), left", std::pow(interval.m / interval.M, p),
                         det_factor * lam_min, digest);
  out.upper = make_upper("thm3.3.upper", "eq (3.7), right", std::pow(interval.M / interval.m, p),
                         det_factor * lam_max, digest);
  out.condition_lower = 1.0;
  for (const auto& z : si.values) {
    const double scaled = det_factor * z.real();
    if (scaled > 1.0)
      out.condition_lower = std::max(out.condition_lower, std::pow(scaled, 1.0 / p));
  }
  return out;
}

namespace {

BhatiaDavisResult bhatia_davis_impl(const ComplexMatrix& a,
                                    const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                                    std::size_t n_out, const SpectralInterval& interval,
                                    bool functional) {
  if (!classify_cached(a).is_hermitian)
    throw std::invalid_argument("bound_bhatia_davis: matrix is not Hermitian");
  const Spectrum s = oracle_spectrum(a, classify_cached(a));
  check_interval(a, interval, s, "bound_bhatia_davis");

  const ComplexMatrix image = map(a);
  const ComplexMatrix image_sq = map(a * a);
  const ComplexMatrix variance = image_sq - image * image;
  const ComplexMatrix eye = ComplexMatrix::identity(n_out);
  const ComplexMatrix sharp_rhs = (eye * Complex{interval.M, 0.0} - image) *
                                  (image - eye * Complex{interval.m, 0.0});
  const double md = interval.M - interval.m;
  const std::string digest = pair_digest(a, a);

  BhatiaDavisResult out;
  out.sharp = matrix_order_result("eq3.10", "eq (3.10)", variance, sharp_rhs, digest);
  out.weak = matrix_order_result("eq1.1", "eq (1.1)", variance,
                                 eye * Complex{md * md / 4.0, 0.0}, digest);
  if (functional) {
    const double var = variance(0, 0).real();
    out.spread_lower = 2.0 * std::sqrt(std::max(0.0, var));
  }
  return out;
}

}  // namespace

BhatiaDavisResult bound_bhatia_davis(const ComplexMatrix& a, const PulMap& map,
                                     const SpectralInterval& interval) {
  return bhatia_davis_impl(
      a, [&map](const ComplexMatrix& m) { return apply_map(map, m); }, map.output_dim(),
      interval, map.output_dim() == 1);
}

BhatiaDavisResult bound_bhatia_davis(const ComplexMatrix& a, const PulFunctional& phi,
                                     const SpectralInterval& interval) {
  return bhatia_davis_impl(
      a,
      [&phi](const ComplexMatrix& m) {
        ComplexMatrix out(1);
        out(0, 0) = apply_functional(phi, m);
        return out;
      },
      1, interval, true);
}

namespace {

BoundResult thm34_impl(const ComplexMatrix& a,
                       const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                       std::size_t n_out, const SpectralInterval& interval, bool functional) {
  const std::string digest = pair_digest(a, a);
  const MatrixClass cls = classify_cached(a);
  auto inapplicable = [&](const std::string& reason) {
    BoundResult r = make_upper("thm3.4", "eq (3.11)", 0.0, 0.0, digest);
    r.applicable = false;
    r.reason = reason;
    r.slack = 0.0;
    return r;
  };
  if (!cls.is_psd) return inapplicable("matrix is not positive semidefinite");
  const Spectrum s = oracle_spectrum(a, classify_cached(a));
  check_interval(a, interval, s, "bound_thm34");

  const ComplexMatrix image = map(a);
  const ComplexMatrix image_sq = map(a * a);
  const ComplexMatrix scaled = image * image * Complex{2.0, 0.0};
  const double premise_margin = min_eigenvalue(image_sq - scaled);
  const double image_min = min_eigenvalue(image);
  const double tol = verify_tolerance() * std::max(1.0, a.frobenius_norm());
  if (premise_margin < -tol) return inapplicable("premise Phi(A^2) >= 2 Phi(A)^2 fails");
  if (image_min <= 0.0) return inapplicable("premise Phi(A) > 0 fails");

  const double md = interval.M - interval.m;
  BoundResult r =
      matrix_order_result("thm3.4", "eq (3.11)", image_sq, image * Complex{md, 0.0}, digest);
  if (functional) {
    const double phi_a = image(0, 0).real();
    const double phi_a2 = image_sq(0, 0).real();
    r.extras.emplace_back("spread_lower", phi_a2 / phi_a);
  }
  return r;
}

}  // namespace

BoundResult bound_thm34(const ComplexMatrix& a, const PulMap& map,
                        const SpectralInterval& interval) {
  return thm34_impl(
      a, [&map](const ComplexMatrix& m) { return apply_map(map, m); }, map.output_dim(),
      interval, map.output_dim() == 1);
}

BoundResult bound_thm34(const ComplexMatrix& a, const PulFunctional& phi,
                        const SpectralInterval& interval) {
  return thm34_impl(
      a,
      [&phi](const ComplexMatrix& m) {
        ComplexMatrix out(1);
        out(0, 0) = apply_functional(phi, m);
        return out;
      },
      1, interval, true);
}

BoundResult bound_cor31(const ComplexMatrix& a, const PulFunctional& phi,
                        const SpectralInterval& interval) {
  const std::string digest = pair_digest(a, a);
  auto inapplicable = [&](const std::string& reason) {
    BoundResult r = make_upper("eq3.15", "eq (3.15)", 0.0, 0.0, digest);
    r.applicable = false;
    r.reason = reason;
    return r;
  };
  const MatrixClass cls = classify_cached(a);
  if (!cls.is_psd) return inapplicable("matrix is not positive semidefinite");
  const Spectrum s = oracle_spectrum(a, classify_cached(a));
  check_interval(a, interval, s, "bound_cor31");

  const double scale = std::max(1.0, a.frobenius_norm());
  const double phi_a = real_part_checked(apply_functional(phi, a), scale, "bound_cor31");
  const double phi_a2 = real_part_checked(apply_functional(phi, a * a), scale, "bound_cor31");
  const double tol = verify_tolerance() * std::max(1.0, scale * scale);
  if (phi_a2 < 2.0 * phi_a * phi_a - tol)
    return inapplicable("premise phi(A^2) >= 2 phi(A)^2 fails");
  if (phi_a <= 0.0) return inapplicable("premise phi(A) > 0 fails");

  const double variance = phi_a2 - phi_a * phi_a;
  const double middle = (phi_a2 / (2.0 * phi_a)) * (phi_a2 / (2.0 * phi_a));
  const double outer = (interval.M - interval.m) * (interval.M - interval.m) / 4.0;

  BoundResult r = make_upper("eq3.15", "eq (3.15)", middle, variance, digest);
  r.slack = std::min(middle - variance, outer - middle);
  r.extras = {{"outer", outer},
              {"spread_lower_refined", phi_a2 / phi_a},
              {"spread_lower_baseline", 2.0 * std::sqrt(std::max(0.0, variance))}};
  return r;
}

std::pair<BoundResult, BoundResult> bound_weyl(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto [same, opposed] = weyl_interval(a, b);
  const double norm = spectral_norm(a - b);
  const std::string digest = pair_digest(a, b);
  return {make_lower("eq1.4.lower", "eq (1.4), left", same, norm, digest),
          make_upper("eq1.4.upper", "eq (1.4), right", opposed, norm, digest)};
}

namespace {

BoundResult not_applicable(const std::string& name, const std::string& citation,
                           const std::string& reason, const std::string& digest) {
  BoundResult r;
  r.name = name;
  r.citation = citation;
  r.applicable = false;
  r.reason = reason;
  r.inputs_digest = digest;
  return r;
}

}  // namespace

std::vector<std::string> bound_names() {
  return {"eq1.1",   "eq1.4.lower", "eq1.4.upper", "thm2.1",       "eq2.5",
          "eq2.7",   "eq2.8",       "eq2.9",       "eq2.10",       "eq2.11",
          "eq2.12",  "sec2.closing", "thm2.2",     "thm3.1",       "eq3.4",
          "thm3.2",  "thm3.3.lower", "thm3.3.upper", "eq3.10",     "thm3.4",
          "eq3.15"};
}

std::vector<BoundResult> evaluate_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const std::vector<std::string>& selection) {
  require_same_dim(a, b, "evaluate_bounds");
  const std::size_t n = a.size();
  const std::string digest = pair_digest(a, b);
  const std::string self_digest = pair_digest(a, a);
  const MatrixClass ca = classify_cached(a);
  const MatrixClass cb = classify_cached(b);
  const bool hermitian_pair = ca.is_hermitian && cb.is_hermitian;
  const bool normal_pair = ca.is_normal && cb.is_normal;

  std::vector<std::string> wanted = selection;
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) wanted = bound_names();
  const auto known = bound_names();
  for (const auto& name : wanted)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown bound name '" + name + "'");
  auto selected = [&wanted](const char* name) {
    return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
  };

  std::vector<BoundResult> out;

  auto interval_a = [&]() { return oracle_interval(hermitian_part(a)); };

  if (selected("eq1.1") || selected("eq3.10")) {
    if (ca.is_hermitian) {
      const BhatiaDavisResult bd =
          bound_bhatia_davis(a, PulFunctional::make_diag(n, 1), interval_a());
      if (selected("eq1.1")) out.push_back(bd.weak);
      if (selected("eq3.10")) out.push_back(bd.sharp);
    } else {
      if (selected("eq1.1"))
        out.push_back(not_applicable("eq1.1", "eq (1.1)", "A is not Hermitian", self_digest));
      if (selected("eq3.10"))
        out.push_back(not_applicable("eq3.10", "eq (3.10)", "A is not Hermitian", self_digest));
    }
  }

  if (selected("eq1.4.lower") || selected("eq1.4.upper")) {
    if (hermitian_pair) {
      auto [lower, upper] = bound_weyl(hermitian_part(a), hermitian_part(b));
      if (selected("eq1.4.lower")) out.push_back(std::move(lower));
      if (selected("eq1.4.upper")) out.push_back(std::move(upper));
    } else {
      if (selected("eq1.4.lower"))
        out.push_back(not_applicable("eq1.4.lower", "eq (1.4), left",
                                     "inputs are not both Hermitian", digest));
      if (selected("eq1.4.upper"))
        out.push_back(not_applicable("eq1.4.upper", "eq (1.4), right",
                                     "inputs are not both Hermitian", digest));
    }
  }

  if (selected("thm2.1")) {
    // best catalog functional pair: diagonal entries and the all-entries mean
    std::vector<PulFunctional> catalog;
    for (std::size_t i = 1; i <= n; ++i) catalog.push_back(PulFunctional::make_diag(n, i));
    catalog.push_back(PulFunctional::make_mean_all(n));
    BoundResult best;
    bool first = true;
    for (const auto& p1 : catalog) {
      for (const auto& p2 : catalog) {
        BoundResult r = bound_thm21(a, b, p1, p2);
        if (first || r.bound > best.bound) {
          best = std::move(r);
          first = false;
        }
      }
    }
    out.push_back(std::move(best));
  }

  if (selected("eq2.5")) {
    if (hermitian_pair && n >= 2)
      out.push_back(bound_eq25(hermitian_part(a), hermitian_part(b)));
    else
      out.push_back(not_applicable("eq2.5", "eq (2.5)",
                                   n < 2 ? "requires n >= 2" : "inputs are not both Hermitian",
                                   digest));
  }

  if (selected("eq2.7")) out.push_back(bound_diag_pair(a, b));

  if (selected("eq2.8")) {
    BoundResult r = bound_diag_pair(a, diagonal_part(a));
    r.name = "eq2.8";
    r.citation = "eq (2.8)";
    out.push_back(std::move(r));
  }

  if (selected("eq2.9")) {
    if (hermitian_pair && n >= 2) {
      BoundResult best;
      bool first = true;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          BoundResult r = bound_mirsky_pair(hermitian_part(a), hermitian_part(b), i, j);
          if (first || r.bound > best.bound) {
            best = std::move(r);
            first = false;
          }
        }
      }
      out.push_back(std::move(best));
    } else {
      out.push_back(not_applicable("eq2.9", "eq (2.9)",
                                   n < 2 ? "requires n >= 2" : "inputs are not both Hermitian",
                                   digest));
    }
  }

  if (selected("eq2.10")) {
    if (normal_pair)
      out.push_back(bound_index_sets(a, b, default_index_family(n)));
    else
      out.push_back(not_applicable("eq2.10", "eq (2.10)", "inputs are not both normal", digest));
  }

  if (selected("eq2.11")) {
    if (normal_pair && n >= 2)
      out.push_back(bound_cor24(a, b));
    else
      out.push_back(not_applicable("eq2.11", "eq (2.11)",
                                   n < 2 ? "requires n >= 2" : "inputs are not both normal",
                                   digest));
  }

  if (selected("eq2.12")) {
    if (normal_pair && n >= 2) {
      BoundResult best;
      bool first = true;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) continue;
          BoundResult r = bound_cor25(a, b, i, j);
          if (first || r.bound > best.bound) {
            best = std::move(r);
            first = false;
          }
        }
      }
      out.push_back(std::move(best));
    } else {
      out.push_back(not_applicable("eq2.12", "eq (2.12)",
                                   n < 2 ? "requires n >= 2" : "inputs are not both normal",
                                   digest));
    }
  }

  if (selected("sec2.closing")) {
    if (ca.is_normal && n >= 2)
      out.push_back(bound_mean_vs_pairdiag(a));
    else
      out.push_back(not_applicable("sec2.closing", "closing display of section 2",
                                   n < 2 ? "requires n >= 2" : "A is not normal", self_digest));
  }

  if (selected("thm2.2")) {
    if (hermitian_pair) {
      out.push_back(bound_thm22(hermitian_part(a), hermitian_part(b),
                                PulMap::make_diagonal_restriction(n),
                                PulMap::make_diagonal_restriction(n)));
    } else {
      out.push_back(
          not_applicable("thm2.2", "eq (2.4)", "inputs are not both Hermitian", digest));
    }
  }

  if (selected("thm3.1")) {
    if (ca.is_normal && n >= 2)
      out.push_back(spread_lower_normal(a));
    else
      out.push_back(not_applicable("thm3.1", "eq (3.1)",
                                   n < 2 ? "requires n >= 2" : "A is not normal", self_digest));
  }

  if (selected("eq3.4")) {
    if (ca.is_normal && n >= 2)
      out.push_back(spread_lower_functional(a, PulFunctional::make_mean_all(n)));
    else
      out.push_back(not_applicable("eq3.4", "eq (3.4)",
                                   n < 2 ? "requires n >= 2" : "A is not normal", self_digest));
  }

  if (selected("thm3.2")) {
    if (ca.is_normal && n >= 2)
      out.push_back(spread_refined_thm32(a));
    else
      out.push_back(not_applicable("thm3.2", "eq (3.5)",
                                   n < 2 ? "requires n >= 2" : "A is not normal", self_digest));
  }

  if (selected("thm3.3.lower") || selected("thm3.3.upper")) {
    if (ca.is_pd) {
      const DetRatioResult dr =
          det_ratio_bounds(hermitian_part(a), PulMap::make_identity(n), interval_a());
      if (selected("thm3.3.lower")) out.push_back(dr.lower);
      if (selected("thm3.3.upper")) {
        BoundResult upper = dr.upper;
        upper.extras.emplace_back("condition_lower", dr.condition_lower);
        out.push_back(std::move(upper));
      }
    } else {
      if (selected("thm3.3.lower"))
        out.push_back(not_applicable("thm3.3.lower", "eq (3.7), left",
                                     "A is not positive definite", self_digest));
      if (selected("thm3.3.upper"))
        out.push_back(not_applicable("thm3.3.upper", "eq (3.7), right",
                                     "A is not positive definite", self_digest));
    }
  }

  if (selected("thm3.4")) {
    if (ca.is_psd)
      out.push_back(bound_thm34(hermitian_part(a), PulFunctional::make_diag(n, 1), interval_a()));
    else
      out.push_back(not_applicable("thm3.4", "eq (3.11)", "A is not positive semidefinite",
                                   self_digest));
  }

  if (selected("eq3.15")) {
    if (ca.is_psd)
      out.push_back(bound_cor31(hermitian_part(a), PulFunctional::make_diag(n, 1), interval_a()));
    else
      out.push_back(not_applicable("eq3.15", "eq (3.15)", "A is not positive semidefinite",
                                   self_digest));
  }

  return out;
}

}  // namespace spb
