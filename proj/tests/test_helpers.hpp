#pragma once

#include <initializer_list>
#include <vector>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb::testing {

inline ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

/// The 3x3 real symmetric matrix used as the golden fixture throughout:
/// eigenvalues 0, (5 - sqrt(17))/2, (5 + sqrt(17))/2.
inline ComplexMatrix golden3x3() {
  return from_rows({{2, 2, 1}, {2, 2, 1}, {1, 1, 1}});
}

inline constexpr double kGoldenEigLow = 0.43844718719117103;   // (5 - sqrt(17))/2
inline constexpr double kGoldenEigHigh = 4.5615528128088303;   // (5 + sqrt(17))/2
inline constexpr double kGoldenCenteredNorm = 2.8948861461421637;  // ||A - (5/3) I||

}  // namespace spb::testing
