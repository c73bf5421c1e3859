#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spectral_bounds/complex_matrix.hpp"

namespace spb {

/// Raised on malformed Matrix Market input; message names the line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses Matrix Market text: array or coordinate format, real/complex/integer
/// field, general/symmetric/hermitian symmetry. Only square matrices are
/// accepted; symmetric/hermitian storage (lower triangle) is expanded to full.
ComplexMatrix parse_matrix_market(const std::string& text);

ComplexMatrix read_matrix_market_file(const std::string& path);

/// Emits "array complex general" with 17 significant digits.
std::string write_matrix_market(const ComplexMatrix& a);

void write_matrix_market_file(const ComplexMatrix& a, const std::string& path);

}  // namespace spb
