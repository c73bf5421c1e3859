#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spectral_bounds/eigen.hpp"
#include "spectral_bounds/rng.hpp"
#include "test_helpers.hpp"

using namespace spb;
using spb::testing::from_rows;
using spb::testing::golden3x3;
using spb::testing::kGoldenCenteredNorm;
using spb::testing::kGoldenEigHigh;
using spb::testing::kGoldenEigLow;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return hermitian_part(g);
}

}  // namespace

TEST_CASE("jacobi on a diagonal matrix") {
  const Spectrum s = eig_hermitian(from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  auto up = eig_up(s);
  CHECK(up[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(up[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(up[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("jacobi reproduces the golden cubic roots") {
  // characteristic polynomial lambda (lambda^2 - 5 lambda + 2)
  const Spectrum s = eig_hermitian(golden3x3());
  auto up = eig_up(s);
  CHECK(up[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(up[1] == doctest::Approx(kGoldenEigLow).epsilon(1e-12));
  CHECK(up[2] == doctest::Approx(kGoldenEigHigh).epsilon(1e-12));
  CHECK(s.max_residual <= 1e-12 * 10.0);
}

TEST_CASE("jacobi 2x2 closed form") {
  auto up = eig_up(eig_hermitian(from_rows({{0, 1}, {1, 0}})));
  CHECK(up[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(up[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("jacobi rejects non-hermitian input") {
  CHECK_THROWS_AS(eig_hermitian(from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("jacobi residual certificates on random hermitian matrices") {
  for (std::uint64_t t = 0; t < 25; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 31);
    const ComplexMatrix a = random_hermitian(std::min<std::size_t>(n, 32), 101, t);
    const Spectrum s = eig_hermitian(a);
    CHECK(s.max_residual <= 1e-10 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST_CASE("qr on diag(i, -i)") {
  const Spectrum s = eig_general(from_rows({{Complex{0, 1}, 0}, {0, Complex{0, -1}}}));
  REQUIRE(s.values.size() == 2);
  CHECK(std::abs(s.values[0] - Complex{0, 1}) <= 1e-12);
  CHECK(std::abs(s.values[1] - Complex{0, -1}) <= 1e-12);
}

TEST_CASE("qr recovers circulant eigenvalues (DFT oracle)") {
  // circulant with first row (0, 1, 0): eigenvalues are the cube roots of unity
  const ComplexMatrix c = from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const Spectrum s = eig_general(c);
  std::vector<Complex> expected;
  for (int k = 0; k < 3; ++k) expected.push_back(std::polar(1.0, 2.0 * M_PI * k / 3.0));
  for (const auto& e : expected) {
    double best = 1e9;
    for (const auto& v : s.values) best = std::min(best, std::abs(v - e));
    CHECK(best <= 1e-10);
  }
}

TEST_CASE("qr agrees with jacobi on the golden matrix") {
  const Spectrum sq = eig_general(golden3x3());
  const Spectrum sj = eig_hermitian(golden3x3());
  auto down_j = eig_down(sj);
  // qr ordering is Re desc already
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(sq.values[k] - Complex{down_j[k], 0.0}) <= 1e-10);
  }
}

TEST_CASE("qr vs jacobi agreement on random hermitian matrices") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const std::size_t n = 2 + (t % 15);
    const ComplexMatrix a = random_hermitian(n, 202, t);
    const Spectrum sq = eig_general(a);
    auto down = eig_down(eig_hermitian(a));
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(sq.values[k] - Complex{down[k], 0.0}));
    CHECK(worst <= 1e-8 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST_CASE("qr refuses oversized input") {
  CHECK_THROWS_AS(eig_general(ComplexMatrix::identity(65)), std::invalid_argument);
}

TEST_CASE("spectral norm basics") {
  CHECK(spectral_norm(ComplexMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix shifted = golden3x3();
  for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= 5.0 / 3.0;
  CHECK(spectral_norm(shifted) == doctest::Approx(kGoldenCenteredNorm).epsilon(1e-11));

  // A - D has characteristic polynomial (x + 2)(x^2 - 2x - 2)
  const ComplexMatrix hollow = from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  CHECK(spectral_norm(hollow) == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-11));
}

TEST_CASE("spectral norm agrees with the hermitian eigenvalue route") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_hermitian(6, 303, t);
    double max_abs = 0.0;
    for (const auto& z : eig_hermitian(a).values) max_abs = std::max(max_abs, std::abs(z.real()));
    CHECK(spectral_norm(a) == doctest::Approx(max_abs).epsilon(1e-9));
  }
}

TEST_CASE("eig_down / eig_up ordering") {
  const Spectrum s = eig_hermitian(golden3x3());
  auto down = eig_down(s);
  auto up = eig_up(s);
  CHECK(down[0] == doctest::Approx(kGoldenEigHigh));
  CHECK(down[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(up[0] == down[2]);

  const Spectrum equal = eig_hermitian(ComplexMatrix::identity(3));
  CHECK(eig_down(equal) == eig_up(equal));

  Spectrum complex_spectrum;
  complex_spectrum.values = {Complex{0, 1}};
  complex_spectrum.certified_real = false;
  CHECK_THROWS_AS(eig_down(complex_spectrum), std::invalid_argument);
}

TEST_CASE("ordered eigenvalue distances for the golden matrix vs its diagonal") {
  const ComplexMatrix a = golden3x3();
  const ComplexMatrix d = from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(ordered_eig_distance(a, d, PairOrdering::same) ==
        doctest::Approx(kGoldenEigHigh - 2.0).epsilon(1e-11));
  CHECK(ordered_eig_distance(a, d, PairOrdering::opposed) ==
        doctest::Approx(kGoldenEigHigh - 1.0).epsilon(1e-11));
  CHECK(ordered_eig_distance(a, a, PairOrdering::same) == doctest::Approx(0.0).epsilon(1e-11));
  // opposed distance of A against itself is the spread
  CHECK(ordered_eig_distance(a, a, PairOrdering::opposed) ==
        doctest::Approx(kGoldenEigHigh).epsilon(1e-11));
}

TEST_CASE("weyl interval brackets the norm of the difference") {
  const ComplexMatrix a = golden3x3();
  const ComplexMatrix d = from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  const auto [lo, hi] = weyl_interval(a, d);
  CHECK(lo == doctest::Approx(kGoldenEigHigh - 2.0).epsilon(1e-11));
  CHECK(hi == doctest::Approx(kGoldenEigHigh - 1.0).epsilon(1e-11));
  const double norm = spectral_norm(a - d);
  CHECK(norm == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-11));
  CHECK(lo <= norm + 1e-9);
  CHECK(norm <= hi + 1e-9);

  const ComplexMatrix e1 = from_rows({{1, 0}, {0, 0}});
  const ComplexMatrix e2 = from_rows({{0, 0}, {0, 1}});
  // both spectra are {0, 1}; the same-mode distance vanishes, the opposed one
  // is 1 and the norm of the difference sits exactly at the top
  const auto [lo2, hi2] = weyl_interval(e1, e2);
  CHECK(lo2 == doctest::Approx(0.0));
  CHECK(hi2 == doctest::Approx(1.0));
  CHECK(spectral_norm(e1 - e2) == doctest::Approx(1.0));
}

TEST_CASE("weyl sandwich holds on random hermitian pairs") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t n = 2 + (t % 9);
    const ComplexMatrix a = random_hermitian(n, 404, 2 * t);
    const ComplexMatrix b = random_hermitian(n, 404, 2 * t + 1);
    const auto [lo, hi] = weyl_interval(a, b);
    const double norm = spectral_norm(a - b);
    CHECK(lo - 1e-9 <= norm);
    CHECK(norm <= hi + 1e-9);
  }
}

TEST_CASE("max pairwise eigenvalue distance") {
  const Spectrum sa = eig_hermitian(golden3x3());
  CHECK(max_pairwise_eig_distance(sa, sa) == doctest::Approx(kGoldenEigHigh).epsilon(1e-11));

  Spectrum p, q;
  p.values = {Complex{0, 0}};
  q.values = {Complex{3, 4}};
  CHECK(max_pairwise_eig_distance(p, q) == doctest::Approx(5.0));

  const Spectrum sd = eig_hermitian(from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  CHECK(max_pairwise_eig_distance(sa, sd) ==
        doctest::Approx(kGoldenEigHigh - 1.0).epsilon(1e-11));
}

TEST_CASE("spread") {
  CHECK(spread(eig_hermitian(golden3x3())) == doctest::Approx(kGoldenEigHigh).epsilon(1e-11));
  CHECK(spread(eig_hermitian(ComplexMatrix::identity(4))) == doctest::Approx(0.0));

  Spectrum s;
  s.values = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  CHECK(spread(s) == doctest::Approx(2.0));
}

TEST_CASE("spread equals the opposed self-distance for hermitian matrices") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_hermitian(5, 505, t);
    CHECK(spread(eig_hermitian(a)) ==
          doctest::Approx(ordered_eig_distance(a, a, PairOrdering::opposed)).epsilon(1e-12));
  }
}

TEST_CASE("convex combinations stay within the pairwise maximum") {
  // Lemma-style property: |u - v| <= max_{i,j} |z_i - w_j| for convex
  // combinations u, v of the two spectra
  CounterRng rng(606, 0);
  const Spectrum sa = eig_general(from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  const Spectrum sb = eig_hermitian(golden3x3());
  const double cap = max_pairwise_eig_distance(sa, sb);
  for (int t = 0; t < 200; ++t) {
    auto combo = [&rng](const Spectrum& s) {
      std::vector<double> w(s.values.size());
      double total = 0.0;
      for (auto& x : w) total += (x = rng.uniform());
      Complex u{0.0, 0.0};
      for (std::size_t k = 0; k < w.size(); ++k) u += (w[k] / total) * s.values[k];
      return u;
    };
    CHECK(std::abs(combo(sa) - combo(sb)) <= cap + 1e-12);
  }
}
