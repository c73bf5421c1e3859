#include "spectral_bounds/pulm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "spectral_bounds/eigen.hpp"
#include "spectral_bounds/rng.hpp"

namespace spb {

namespace {

void check_index(std::size_t idx, std::size_t n, const char* what) {
  if (idx < 1 || idx > n)
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(idx) +
                                " out of range for n = " + std::to_string(n));
}

ComplexMatrix random_matrix(std::size_t n, CounterRng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

ComplexMatrix random_psd(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = random_matrix(n, rng);
  return g.adjoint() * g;
}

}  // namespace

PulFunctional PulFunctional::make_diag(std::size_t n, std::size_t i) {
  check_index(i, n, "diag functional");
  PulFunctional f;
  f.kind = Kind::diag;
  f.n = n;
  f.i = i;
  return f;
}

PulFunctional PulFunctional::make_vector_state(std::vector<Complex> x) {
  double norm = 0.0;
  for (const auto& z : x) norm += std::norm(z);
  norm = std::sqrt(norm);
  if (norm == 0.0) throw std::invalid_argument("vector_state: zero vector");
  for (auto& z : x) z /= norm;
  PulFunctional f;
  f.kind = Kind::vector_state;
  f.n = x.size();
  f.x = std::move(x);
  return f;
}

PulFunctional PulFunctional::make_index_avg(std::size_t n, std::vector<std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("index_avg: empty index set");
  for (std::size_t idx : indices) check_index(idx, n, "index_avg");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  PulFunctional f;
  f.kind = Kind::index_avg;
  f.n = n;
  f.indices = std::move(indices);
  return f;
}

PulFunctional PulFunctional::make_mean_all(std::size_t n) {
  PulFunctional f;
  f.kind = Kind::mean_all;
  f.n = n;
  return f;
}

PulFunctional PulFunctional::make_offdiag_complement(std::size_t n) {
  if (n < 2) throw std::invalid_argument("offdiag_complement: requires n >= 2");
  PulFunctional f;
  f.kind = Kind::offdiag_complement;
  f.n = n;
  return f;
}

PulFunctional PulFunctional::make_theta_pair(std::size_t n, std::size_t i, std::size_t j,
                                             double theta) {
  check_index(i, n, "theta_pair");
  check_index(j, n, "theta_pair");
  if (i == j) throw std::invalid_argument("theta_pair: requires i != j");
  PulFunctional f;
  f.kind = Kind::theta_pair;
  f.n = n;
  f.i = i;
  f.j = j;
  f.theta = theta;
  return f;
}

PulFunctional PulFunctional::make_half_trace_pair(std::size_t n, std::size_t i, std::size_t j) {
  check_index(i, n, "half_trace_pair");
  check_index(j, n, "half_trace_pair");
  if (i == j) throw std::invalid_argument("half_trace_pair: requires i != j");
  PulFunctional f;
  f.kind = Kind::half_trace_pair;
  f.n = n;
  f.i = i;
  f.j = j;
  return f;
}

PulFunctional PulFunctional::make_custom(ComplexMatrix weight) {
  PulFunctional f;
  f.kind = Kind::custom;
  f.n = weight.size();
  f.weight = std::move(weight);
  return f;
}

Complex apply_functional(const PulFunctional& phi, const ComplexMatrix& a) {
  if (a.size() != phi.n)
    throw std::invalid_argument("apply_functional: dimension mismatch");
  const std::size_t n = phi.n;
  switch (phi.kind) {
    case PulFunctional::Kind::diag:
      return a(phi.i - 1, phi.i - 1);
    case PulFunctional::Kind::vector_state: {
      Complex v{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) {
        Complex row{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * phi.x[j];
        v += std::conj(phi.x[i]) * row;
      }
      return v;
    }
    case PulFunctional::Kind::index_avg: {
      Complex s{0.0, 0.0};
      for (std::size_t i : phi.indices)
        for (std::size_t j : phi.indices) s += a(i - 1, j - 1);
      return s / static_cast<double>(phi.indices.size());
    }
    case PulFunctional::Kind::mean_all: {
      Complex s{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += a(i, j);
      return s / static_cast<double>(n);
    }
    case PulFunctional::Kind::offdiag_complement: {
      if (n < 2) throw std::invalid_argument("offdiag_complement: requires n >= 2");
      Complex off{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) off += a(i, j);
      return (a.trace() - off / static_cast<double>(n - 1)) / static_cast<double>(n);
    }
    case PulFunctional::Kind::theta_pair: {
      const std::size_t i = phi.i - 1, j = phi.j - 1;
      const Complex w = std::polar(1.0, phi.theta);
      return 0.5 * (a(i, i) + a(j, j) + a(i, j) * w + a(j, i) * std::conj(w));
    }
    case PulFunctional::Kind::half_trace_pair:
      return 0.5 * (a(phi.i - 1, phi.i - 1) + a(phi.j - 1, phi.j - 1));
    case PulFunctional::Kind::custom: {
      Complex s{0.0, 0.0};
      const ComplexMatrix& w = *phi.weight;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += w(i, j) * a(j, i);
      return s;
    }
  }
  throw std::logic_error("apply_functional: unknown descriptor");
}

ComplexMatrix canonical_weight(const PulFunctional& phi) {
  const std::size_t n = phi.n;
  auto rank_one = [n](const std::vector<Complex>& x) {
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = x[i] * std::conj(x[j]);
    return w;
  };
  switch (phi.kind) {
    case PulFunctional::Kind::diag: {
      std::vector<Complex> e(n, Complex{0.0, 0.0});
      e[phi.i - 1] = 1.0;
      return rank_one(e);
    }
    case PulFunctional::Kind::vector_state:
      return rank_one(phi.x);
    case PulFunctional::Kind::index_avg: {
      std::vector<Complex> u(n, Complex{0.0, 0.0});
      const double inv = 1.0 / std::sqrt(static_cast<double>(phi.indices.size()));
      for (std::size_t idx : phi.indices) u[idx - 1] = inv;
      return rank_one(u);
    }
    case PulFunctional::Kind::mean_all: {
      std::vector<Complex> u(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
      return rank_one(u);
    }
    case PulFunctional::Kind::offdiag_complement: {
      // W = (I - v v*)/(n-1) with v = ones/sqrt(n); psd by construction
      ComplexMatrix w(n);
      const double inv_n = 1.0 / static_cast<double>(n);
      const double scale = 1.0 / static_cast<double>(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          w(i, j) = scale * ((i == j ? 1.0 : 0.0) - inv_n);
      return w;
    }
    case PulFunctional::Kind::theta_pair: {
      std::vector<Complex> x(n, Complex{0.0, 0.0});
      x[phi.i - 1] = 1.0 / std::sqrt(2.0);
      x[phi.j - 1] = std::polar(1.0 / std::sqrt(2.0), phi.theta);
      return rank_one(x);
    }
    case PulFunctional::Kind::half_trace_pair: {
      ComplexMatrix w(n);
      w(phi.i - 1, phi.i - 1) = 0.5;
      w(phi.j - 1, phi.j - 1) = 0.5;
      return w;
    }
    case PulFunctional::Kind::custom:
      return *phi.weight;
  }
  throw std::logic_error("canonical_weight: unknown descriptor");
}

std::size_t PulMap::output_dim() const {
  switch (kind) {
    case Kind::identity:
    case Kind::trace_complement:
    case Kind::diagonal_restriction:
      return n_in;
    case Kind::compression_2x2:
    case Kind::flip_compression_2x2:
      return 2;
    case Kind::functional_lift:
      return 1;
  }
  throw std::logic_error("PulMap::output_dim: unknown descriptor");
}

PulMap PulMap::make_identity(std::size_t n) {
  PulMap m;
  m.kind = Kind::identity;
  m.n_in = n;
  return m;
}

PulMap PulMap::make_trace_complement(std::size_t n) {
  if (n < 2) throw std::invalid_argument("trace_complement: requires n >= 2");
  PulMap m;
  m.kind = Kind::trace_complement;
  m.n_in = n;
  return m;
}

PulMap PulMap::make_compression_2x2(std::size_t n, std::size_t i, std::size_t j) {
  check_index(i, n, "compression_2x2");
  check_index(j, n, "compression_2x2");
  if (i == j) throw std::invalid_argument("compression_2x2: requires i != j");
  PulMap m;
  m.kind = Kind::compression_2x2;
  m.n_in = n;
  m.i = i;
  m.j = j;
  return m;
}

PulMap PulMap::make_flip_compression_2x2(std::size_t n, std::size_t i, std::size_t j) {
  check_index(i, n, "flip_compression_2x2");
  check_index(j, n, "flip_compression_2x2");
  if (i == j) throw std::invalid_argument("flip_compression_2x2: requires i != j");
  PulMap m;
  m.kind = Kind::flip_compression_2x2;
  m.n_in = n;
  m.i = i;
  m.j = j;
  return m;
}

PulMap PulMap::make_diagonal_restriction(std::size_t n) {
  PulMap m;
  m.kind = Kind::diagonal_restriction;
  m.n_in = n;
  return m;
}

PulMap PulMap::make_functional_lift(PulFunctional phi) {
  PulMap m;
  m.kind = Kind::functional_lift;
  m.n_in = phi.n;
  m.functional = std::move(phi);
  return m;
}

ComplexMatrix apply_map(const PulMap& map, const ComplexMatrix& a) {
  if (a.size() != map.n_in) throw std::invalid_argument("apply_map: dimension mismatch");
  const std::size_t n = map.n_in;
  switch (map.kind) {
    case PulMap::Kind::identity:
      return a;
    case PulMap::Kind::trace_complement: {
      const Complex tr = a.trace();
      ComplexMatrix out(n);
      const double scale = 1.0 / static_cast<double>(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) = scale * ((i == j ? tr : Complex{0.0, 0.0}) - a(i, j));
      return out;
    }
    case PulMap::Kind::compression_2x2: {
      const std::size_t i = map.i - 1, j = map.j - 1;
      ComplexMatrix out(2);
      out(0, 0) = a(i, i);
      out(0, 1) = a(i, j);
      out(1, 0) = a(j, i);
      out(1, 1) = a(j, j);
      return out;
    }
    case PulMap::Kind::flip_compression_2x2: {
      const std::size_t i = map.i - 1, j = map.j - 1;
      ComplexMatrix out(2);
      out(0, 0) = a(j, j);
      out(0, 1) = -a(i, j);
      out(1, 0) = -a(j, i);
      out(1, 1) = a(i, i);
      return out;
    }
    case PulMap::Kind::diagonal_restriction:
      return diagonal_part(a);
    case PulMap::Kind::functional_lift: {
      ComplexMatrix out(1);
      out(0, 0) = apply_functional(*map.functional, a);
      return out;
    }
  }
  throw std::logic_error("apply_map: unknown descriptor");
}

ValidationReport validate_pulm(const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                               std::size_t n_in, std::size_t n_out, int trials,
                               std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("validate_pulm: trials must be >= 1");
  ValidationReport report;

  const ComplexMatrix image_of_identity = map(ComplexMatrix::identity(n_in));
  report.unitality_defect =
      (image_of_identity - ComplexMatrix::identity(n_out)).frobenius_norm();

  CounterRng rng(seed, 0x70756c6d);  // "pulm"
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix p = random_psd(n_in, rng);
    const ComplexMatrix image = map(p);
    const Spectrum s = eig_hermitian(hermitian_part(image));
    double min_eig = 0.0;
    for (const auto& z : s.values) min_eig = std::min(min_eig, z.real());
    const double scale = std::max(1.0, p.frobenius_norm());
    report.max_positivity_violation =
        std::max(report.max_positivity_violation, -min_eig / scale);

    const ComplexMatrix x = random_matrix(n_in, rng);
    const ComplexMatrix y = random_matrix(n_in, rng);
    const Complex alpha = rng.complex_gaussian();
    const Complex beta = rng.complex_gaussian();
    const ComplexMatrix lhs = map(x * alpha + y * beta);
    const ComplexMatrix rhs = map(x) * alpha + map(y) * beta;
    const double lin_scale = std::max(1.0, lhs.frobenius_norm() + rhs.frobenius_norm());
    report.max_linearity_defect =
        std::max(report.max_linearity_defect, (lhs - rhs).frobenius_norm() / lin_scale);
  }

  report.pass = report.unitality_defect <= 1e-10 && report.max_positivity_violation <= 1e-10 &&
                report.max_linearity_defect <= 1e-10;
  return report;
}

ValidationReport validate_pulm(const PulMap& map, int trials, std::uint64_t seed) {
  return validate_pulm([&map](const ComplexMatrix& a) { return apply_map(map, a); }, map.n_in,
                       map.output_dim(), trials, seed);
}

ValidationReport validate_pulm(const PulFunctional& phi, int trials, std::uint64_t seed) {
  return validate_pulm(
      [&phi](const ComplexMatrix& a) {
        ComplexMatrix out(1);
        out(0, 0) = apply_functional(phi, a);
        return out;
      },
      phi.n, 1, trials, seed);
}

std::string functional_to_json(const PulFunctional& phi) {
  nlohmann::ordered_json j;
  j["n"] = phi.n;
  switch (phi.kind) {
    case PulFunctional::Kind::diag:
      j["kind"] = "diag";
      j["i"] = phi.i;
      break;
    case PulFunctional::Kind::vector_state: {
      j["kind"] = "vector_state";
      nlohmann::ordered_json x = nlohmann::ordered_json::array();
      for (const auto& z : phi.x) x.push_back({z.real(), z.imag()});
      j["x"] = x;
      break;
    }
    case PulFunctional::Kind::index_avg:
      j["kind"] = "index_avg";
      j["indices"] = phi.indices;
      break;
    case PulFunctional::Kind::mean_all:
      j["kind"] = "mean_all";
      break;
    case PulFunctional::Kind::offdiag_complement:
      j["kind"] = "offdiag_complement";
      break;
    case PulFunctional::Kind::theta_pair:
      j["kind"] = "theta_pair";
      j["i"] = phi.i;
      j["j"] = phi.j;
      j["theta"] = phi.theta;
      break;
    case PulFunctional::Kind::half_trace_pair:
      j["kind"] = "half_trace_pair";
      j["i"] = phi.i;
      j["j"] = phi.j;
      break;
    case PulFunctional::Kind::custom: {
      j["kind"] = "custom";
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (const auto& z : phi.weight->entries()) w.push_back({z.real(), z.imag()});
      j["weight"] = w;
      break;
    }
  }
  return j.dump();
}

PulFunctional functional_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t n = j.at("n").get<std::size_t>();
  if (kind == "diag") return PulFunctional::make_diag(n, j.at("i").get<std::size_t>());
  if (kind == "vector_state") {
    std::vector<Complex> x;
    for (const auto& pair : j.at("x")) x.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    return PulFunctional::make_vector_state(std::move(x));
  }
  if (kind == "index_avg")
    return PulFunctional::make_index_avg(n, j.at("indices").get<std::vector<std::size_t>>());
  if (kind == "mean_all") return PulFunctional::make_mean_all(n);
  if (kind == "offdiag_complement") return PulFunctional::make_offdiag_complement(n);
  if (kind == "theta_pair")
    return PulFunctional::make_theta_pair(n, j.at("i").get<std::size_t>(),
                                          j.at("j").get<std::size_t>(),
                                          j.at("theta").get<double>());
  if (kind == "half_trace_pair")
    return PulFunctional::make_half_trace_pair(n, j.at("i").get<std::size_t>(),
                                               j.at("j").get<std::size_t>());
  if (kind == "custom") {
    std::vector<Complex> entries;
    for (const auto& pair : j.at("weight"))
      entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    return PulFunctional::make_custom(ComplexMatrix(n, std::move(entries)));
  }
  throw std::invalid_argument("functional_from_json: unknown kind '" + kind + "'");
}

}  // namespace spb
