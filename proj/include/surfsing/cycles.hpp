#pragma once

#include "surfsing/dualgraph.hpp"
#include "surfsing/rational.hpp"

#include <cstdint>
#include <vector>

namespace surfsing {

/// Rational exceptional cycle sum a_i E_i, indexed like the graph's vertices.
struct Cycle {
  std::vector<Rational> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  bool is_zero() const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Degrees d_i = l . E_i of a line bundle on each component.
struct DegreeVector {
  std::vector<std::int64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// M x over the rationals; used to verify solves.
std::vector<Rational> apply(const IntersectionMatrix& m, const Cycle& x);

/// The unique rational cycle z with z . E_i = d_i for every i, i.e. the
/// solution of M a = d. Throws DomainError if the intersection form is not
/// negative definite or the lengths disagree.
Cycle numerical_cycle(const DualGraph& g, const DegreeVector& d);

/// z1^T M z2.
Rational pair_product(const DualGraph& g, const Cycle& z1, const Cycle& z2);

/// z . z for z = numerical_cycle(g, d); equals sum a_i d_i.
Rational deg_c_squared(const DualGraph& g, const DegreeVector& d);

/// e(J) = -z.z, the leading coefficient of the asymptotic colength
/// formula. Non-negative whenever the form is negative definite.
Rational generalized_multiplicity(const DualGraph& g, const DegreeVector& d);

/// K . E_i = 2 g_i - 2 - E_i^2 (adjunction).
DegreeVector adjunction_degrees(const DualGraph& g);

/// Z_K, the rational cycle numerically equivalent to the canonical class.
Cycle canonical_cycle(const DualGraph& g);

/// K^2 = Z_K . Z_K. Meaningful for the minimal resolution; the graph is
/// not checked for minimality.
Rational k_squared(const DualGraph& g);

} // namespace surfsing
