#include "spectral_bounds/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace spb {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("matrix market parse error at line " + std::to_string(line) + ": " + what);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, std::size_t line) {
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) fail(line, "malformed number '" + t + "'");
    if (!std::isfinite(v)) fail(line, "non-finite value '" + t + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "malformed number '" + t + "'");
  }
}

long parse_long(const std::string& t, std::size_t line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(t, &pos);
    if (pos != t.size()) fail(line, "malformed integer '" + t + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "malformed integer '" + t + "'");
  }
}

enum class Field { real, complex_field, integer };
enum class Symmetry { general, symmetric, hermitian };

}  // namespace

ComplexMatrix parse_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) fail(1, "empty input");
  ++lineno;
  auto header = tokens(line);
  if (header.size() < 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix")
    fail(lineno, "malformed header, expected '%%MatrixMarket matrix <format> <field> <symmetry>'");

  const std::string format = lower(header[2]);
  if (format != "array" && format != "coordinate")
    fail(lineno, "unsupported format '" + header[2] + "'");
  const bool coordinate = format == "coordinate";

  Field field;
  const std::string field_s = lower(header[3]);
  if (field_s == "real") field = Field::real;
  else if (field_s == "complex") field = Field::complex_field;
  else if (field_s == "integer") field = Field::integer;
  else fail(lineno, "unsupported field '" + header[3] + "'");

  Symmetry sym;
  const std::string sym_s = lower(header[4]);
  if (sym_s == "general") sym = Symmetry::general;
  else if (sym_s == "symmetric") sym = Symmetry::symmetric;
  else if (sym_s == "hermitian") sym = Symmetry::hermitian;
  else fail(lineno, "unsupported symmetry '" + header[4] + "'");

  // size line, skipping comments/blank lines
  std::vector<std::string> size_toks;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    size_toks = tokens(line);
    if (size_toks.empty()) continue;
    break;
  }
  if (size_toks.empty()) fail(lineno, "missing size line");

  const std::size_t expected_size_toks = coordinate ? 3u : 2u;
  if (size_toks.size() != expected_size_toks) fail(lineno, "malformed size line");
  const long rows = parse_long(size_toks[0], lineno);
  const long cols = parse_long(size_toks[1], lineno);
  if (rows < 1 || cols < 1) fail(lineno, "dimensions must be positive");
  if (rows != cols) fail(lineno, "matrix is not square (" + std::to_string(rows) + "x" +
                                     std::to_string(cols) + ")");
  const std::size_t n = static_cast<std::size_t>(rows);
  long nnz = 0;
  if (coordinate) {
    nnz = parse_long(size_toks[2], lineno);
    if (nnz < 0) fail(lineno, "negative entry count");
  }

  ComplexMatrix a(n);
  const std::size_t values_per_entry = field == Field::complex_field ? 2u : 1u;

  auto read_value = [&](const std::vector<std::string>& toks, std::size_t offset,
                        std::size_t ln) -> Complex {
    if (field == Field::complex_field)
      return {parse_double(toks[offset], ln), parse_double(toks[offset + 1], ln)};
    return {parse_double(toks[offset], ln), 0.0};
  };

  auto place_symmetric = [&](std::size_t i, std::size_t j, Complex v, std::size_t ln) {
    if (sym != Symmetry::general && i < j)
      fail(ln, "entry above the diagonal in a " + sym_s + " file");
    if (sym == Symmetry::hermitian && i == j && std::abs(v.imag()) != 0.0)
      fail(ln, "non-real diagonal entry in a hermitian file");
    a(i, j) = v;
    if (i != j) {
      if (sym == Symmetry::symmetric) a(j, i) = v;
      else if (sym == Symmetry::hermitian) a(j, i) = std::conj(v);
    }
  };

  if (coordinate) {
    std::vector<bool> seen(n * n, false);
    long read = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '%') continue;
      auto toks = tokens(line);
      if (toks.empty()) continue;
      if (read >= nnz) fail(lineno, "more entries than declared");
      if (toks.size() != 2 + values_per_entry) fail(lineno, "malformed coordinate entry");
      const long li = parse_long(toks[0], lineno);
      const long lj = parse_long(toks[1], lineno);
      if (li < 1 || lj < 1 || li > rows || lj > cols)
        fail(lineno, "index (" + std::to_string(li) + "," + std::to_string(lj) + ") out of range");
      const std::size_t i = static_cast<std::size_t>(li - 1);
      const std::size_t j = static_cast<std::size_t>(lj - 1);
      if (seen[i * n + j])
        fail(lineno, "duplicate entry (" + std::to_string(li) + "," + std::to_string(lj) + ")");
      seen[i * n + j] = true;
      place_symmetric(i, j, read_value(toks, 2, lineno), lineno);
      ++read;
    }
    if (read != nnz)
      fail(lineno, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(read));
  } else {
    // array format is column-major; symmetric/hermitian store the lower
    // triangle of each column
    std::vector<Complex> values;
    std::size_t expected = 0;
    if (sym == Symmetry::general) expected = n * n;
    else expected = n * (n + 1) / 2;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '%') continue;
      auto toks = tokens(line);
      if (toks.empty()) continue;
      if (toks.size() % values_per_entry != 0) fail(lineno, "malformed array entry");
      for (std::size_t k = 0; k + values_per_entry <= toks.size(); k += values_per_entry) {
        if (values.size() >= expected) fail(lineno, "more entries than declared");
        values.push_back(read_value(toks, k, lineno));
      }
    }
    if (values.size() != expected)
      fail(lineno, "expected " + std::to_string(expected) + " values, found " +
                       std::to_string(values.size()));
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t first_row = sym == Symmetry::general ? 0 : j;
      for (std::size_t i = first_row; i < n; ++i) place_symmetric(i, j, values[k++], lineno);
    }
  }

  return a;
}

ComplexMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_market(buf.str());
}

std::string write_matrix_market(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  std::ostringstream out;
  out << "%%MatrixMarket matrix array complex general\n";
  out << n << " " << n << "\n";
  char buf[128];
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", a(i, j).real(), a(i, j).imag());
      out << buf;
    }
  }
  return out.str();
}

void write_matrix_market_file(const ComplexMatrix& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << write_matrix_market(a);
}

}  // namespace spb
