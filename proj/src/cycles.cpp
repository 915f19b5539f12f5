#include "surfsing/cycles.hpp"
#include "surfsing/errors.hpp"

#include <string>

namespace surfsing {

bool Cycle::is_zero() const {
  for (const Rational& a : coefficients)
    if (a != 0) return false;
  return true;
}

std::vector<Rational> apply(const IntersectionMatrix& m, const Cycle& x) {
  if (x.size() != m.size())
    throw DomainError("cycle length " + std::to_string(x.size()) +
                      " does not match matrix size " + std::to_string(m.size()));
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * x.coefficients[j];
  return out;
}

namespace {

// Fraction-free forward elimination on [M | d] followed by rational back
// substitution. The matrix is definite, so a nonzero pivot always exists
// in the current column; the row search is only a guard.
std::vector<Rational> solve_exact(const IntersectionMatrix& m, const DegreeVector& d) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n] = d.values[i];
  }

  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw DomainError("intersection matrix is singular");
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous;
      a[i][k] = 0;
    }
    previous = a[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

} // namespace

Cycle numerical_cycle(const DualGraph& g, const DegreeVector& d) {
  if (d.size() != g.size())
    throw DomainError("degree vector has " + std::to_string(d.size()) + " entries but graph has " +
                      std::to_string(g.size()) + " vertices");
  const IntersectionMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m))
    throw DomainError("precondition violated: intersection matrix is not negative definite");
  Cycle z{solve_exact(m, d)};
  const auto residual = apply(m, z);
  for (std::size_t i = 0; i < residual.size(); ++i)
    if (residual[i] != d.values[i]) throw InternalError("exact solve left a nonzero residual");
  return z;
}

Rational pair_product(const DualGraph& g, const Cycle& z1, const Cycle& z2) {
  if (z1.size() != g.size() || z2.size() != g.size())
    throw DomainError("cycle lengths (" + std::to_string(z1.size()) + ", " +
                      std::to_string(z2.size()) + ") do not match vertex count " +
                      std::to_string(g.size()));
  const auto mz2 = apply(intersection_matrix(g), z2);
  Rational total = 0;
  for (std::size_t i = 0; i < mz2.size(); ++i) total += z1.coefficients[i] * mz2[i];
  return total;
}

Rational deg_c_squared(const DualGraph& g, const DegreeVector& d) {
  const Cycle z = numerical_cycle(g, d);
  // M a = d, so a^T M a = a . d.
  Rational total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) total += z.coefficients[i] * d.values[i];
  return total;
}

Rational generalized_multiplicity(const DualGraph& g, const DegreeVector& d) {
  return -deg_c_squared(g, d);
}

DegreeVector adjunction_degrees(const DualGraph& g) {
  DegreeVector d;
  d.values.reserve(g.size());
  for (const Vertex& v : g.vertices())
    d.values.push_back(2 * static_cast<std::int64_t>(v.genus) - 2 - v.self_intersection);
  return d;
}

Cycle canonical_cycle(const DualGraph& g) { return numerical_cycle(g, adjunction_degrees(g)); }

Rational k_squared(const DualGraph& g) { return deg_c_squared(g, adjunction_degrees(g)); }

} // namespace surfsing
