#pragma once

#include "surfsing/polynomial.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace surfsing {

/// (N-2) x N matrix of polynomials; row i is the gradient of g_i.
class JacobianMatrix {
public:
  JacobianMatrix() = default;
  /// Rows must be non-empty and all of the same length; every entry must
  /// be a polynomial in `rows[0].size()` variables.
  explicit JacobianMatrix(std::vector<std::vector<Polynomial>> rows);

  std::size_t rows() const noexcept { return entries_.size(); }
  std::size_t cols() const noexcept { return entries_.empty() ? 0 : entries_.front().size(); }
  const Polynomial& at(std::size_t i, std::size_t k) const { return entries_.at(i).at(k); }

private:
  std::vector<std::vector<Polynomial>> entries_;
};

JacobianMatrix jacobian(const std::vector<Polynomial>& generators);

/// Determinant of the square submatrix on `columns` (0-based, increasing)
/// by Laplace expansion along `expansion_row`.
Polynomial minor_determinant(const JacobianMatrix& m, const std::vector<std::size_t>& columns,
                             std::size_t expansion_row = 0);

/// All size-r column subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t r);

struct Minor {
  std::vector<std::size_t> columns;  // 0-based
  Polynomial value;
};

/// Every maximal minor, column subsets in lexicographic order. Each minor
/// is expanded along the first and along the last row; a mismatch throws
/// InternalError.
std::vector<Minor> maximal_minors(const JacobianMatrix& m);

/// Maximal minors of the Jacobian of g_1..g_{N-2}: generators of the
/// ideal whose blowup is the Nash transformation (before reduction modulo
/// the ideal of X).
std::vector<Minor> nash_ideal_generators(const std::vector<Polynomial>& generators);

struct GeneratorFile {
  std::size_t num_vars = 0;
  std::vector<Polynomial> generators;
};

/// First non-comment line `vars <N>`, then one polynomial per line.
GeneratorFile parse_generators(std::istream& in, const std::string& source = "<input>");
GeneratorFile parse_generators_text(const std::string& text, const std::string& source = "<input>");

} // namespace surfsing
