#include "surfsing/nashideal.hpp"
#include "surfsing/errors.hpp"

#include <charconv>
#include <sstream>

namespace surfsing {

JacobianMatrix::JacobianMatrix(std::vector<std::vector<Polynomial>> rows)
    : entries_(std::move(rows)) {
  if (entries_.empty()) throw DomainError("Jacobian matrix needs at least one row");
  const std::size_t n = entries_.front().size();
  for (const auto& row : entries_) {
    if (row.size() != n) throw DomainError("Jacobian rows have different lengths");
    for (const Polynomial& p : row)
      if (p.num_vars() != n) throw DomainError("Jacobian entry has the wrong number of variables");
  }
}

JacobianMatrix jacobian(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw DomainError("need at least one generator (N - 2 >= 1)");
  const std::size_t n = generators.front().num_vars();
  for (const Polynomial& g : generators)
    if (g.num_vars() != n) throw DomainError("generators mix different numbers of variables");
  if (generators.size() + 2 != n)
    throw DomainError("expected N - 2 = " + std::to_string(n >= 2 ? n - 2 : 0) +
                      " generators in N = " + std::to_string(n) + " variables, got " +
                      std::to_string(generators.size()));
  std::vector<std::vector<Polynomial>> rows;
  for (const Polynomial& g : generators) {
    std::vector<Polynomial> row;
    for (std::size_t k = 1; k <= n; ++k) row.push_back(partial_derivative(g, k));
    rows.push_back(std::move(row));
  }
  return JacobianMatrix(std::move(rows));
}

namespace {

Polynomial laplace(const JacobianMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols, std::size_t pivot_row) {
  const std::size_t n_vars = m.cols();
  if (rows.size() == 1) return m.at(rows[0], cols[0]);

  std::vector<std::size_t> sub_rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r != pivot_row) sub_rows.push_back(rows[r]);

  Polynomial det(n_vars);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& entry = m.at(rows[pivot_row], cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Polynomial cofactor = entry * laplace(m, sub_rows, sub_cols, 0);
    if ((pivot_row + c) % 2 == 0) det += cofactor;
    else det -= cofactor;
  }
  return det;
}

} // namespace

Polynomial minor_determinant(const JacobianMatrix& m, const std::vector<std::size_t>& columns,
                             std::size_t expansion_row) {
  if (columns.size() != m.rows()) throw DomainError("minor needs one column per row");
  if (expansion_row >= m.rows()) throw DomainError("expansion row out of range");
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] >= m.cols()) throw DomainError("column index out of range");
    if (k > 0 && columns[k] <= columns[k - 1])
      throw DomainError("minor columns must be strictly increasing");
  }
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return laplace(m, rows, columns, expansion_row);
}

std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> current(r);
  for (std::size_t i = 0; i < r; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = r;
    while (i > 0 && current[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return out;
    ++current[i - 1];
    for (std::size_t j = i; j < r; ++j) current[j] = current[j - 1] + 1;
  }
}

std::vector<Minor> maximal_minors(const JacobianMatrix& m) {
  std::vector<Minor> minors;
  for (auto& cols : column_subsets(m.cols(), m.rows())) {
    Polynomial value = minor_determinant(m, cols, 0);
    if (m.rows() > 1 && minor_determinant(m, cols, m.rows() - 1) != value)
      throw InternalError("Laplace expansions along different rows disagree");
    minors.push_back({std::move(cols), std::move(value)});
  }
  return minors;
}

std::vector<Minor> nash_ideal_generators(const std::vector<Polynomial>& generators) {
  return maximal_minors(jacobian(generators));
}

GeneratorFile parse_generators(std::istream& in, const std::string& source) {
  GeneratorFile file;
  std::size_t lineno = 0;
  bool have_header = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream ss(line);
      std::string keyword, count, extra;
      ss >> keyword >> count;
      std::size_t n = 0;
      const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
      if (keyword != "vars" || ec != std::errc{} || ptr != count.data() + count.size() ||
          (ss >> extra))
        throw ParseError(source, lineno, 0, "expected header 'vars <N>'");
      if (n < 3) throw ParseError(source, lineno, 0, "need N >= 3 variables (N - 2 >= 1 generators)");
      file.num_vars = n;
      have_header = true;
      continue;
    }
    file.generators.push_back(parse_polynomial(line, file.num_vars, source, lineno));
  }
  if (!have_header) throw ParseError(source, lineno, 0, "missing header 'vars <N>'");
  return file;
}

GeneratorFile parse_generators_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_generators(in, source);
}

} // namespace surfsing
