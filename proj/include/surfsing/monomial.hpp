#pragma once

#include "surfsing/errors.hpp"
#include "surfsing/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace surfsing {

/// Exponent pair (a, b) standing for the monomial x^a y^b.
struct Exponent {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const Exponent& other) const noexcept { return a <= other.a && b <= other.b; }
};

/// Monomial ideal in k[x, y], held by its minimal generators sorted
/// lexicographically (so a ascending, b descending). Never empty.
class MonomialIdeal {
public:
  const std::vector<Exponent>& generators() const noexcept { return gens_; }

  /// Whether x^p (resp. y^q) lies in the ideal for some p (q), i.e. the
  /// colength is finite.
  bool has_finite_colength() const noexcept;

  /// x^e.a y^e.b is in the ideal.
  bool contains_monomial(const Exponent& e) const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal normalize(std::span<const Exponent> gens);
  std::vector<Exponent> gens_;
};

/// Drops generators divisible by another one. Throws DomainError on an
/// empty set.
MonomialIdeal normalize(std::span<const Exponent> gens);
inline MonomialIdeal normalize(std::initializer_list<Exponent> gens) {
  return normalize(std::span<const Exponent>(gens.begin(), gens.size()));
}

/// Number of monomials outside I, by scanning the staircase column by
/// column. Throws DomainError when the colength is infinite.
std::uint64_t colength(const MonomialIdeal& ideal);

/// I^n; n = 0 gives the unit ideal (1).
MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t n);

/// I * J (generated by exponent sums).
MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// outer contains inner: every generator of `inner` is divisible by some
/// generator of `outer`.
bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner);

/// dim(J^n / J'^n) = colength(J'^n) - colength(J^n) for J' inside J.
std::uint64_t pair_dimension(const MonomialIdeal& big, const MonomialIdeal& small, std::uint32_t n);

/// When to trust that a sampled sequence has become quadratic: samples are
/// taken for n = 1..n_max and the last `window` second differences must
/// agree.
struct StabilizationPolicy {
  std::uint32_t n_max = 40;
  std::uint32_t window = 5;
};

/// Eventual quadratic c2 n^2 + c1 n + c0 through the samples with n >= n0.
struct PairGrowth {
  std::vector<std::pair<std::uint32_t, BigInt>> samples;
  Rational c2;
  Rational c1;
  Rational c0;
  std::uint32_t threshold = 1;

  Rational evaluate(std::uint32_t n) const;
};

/// Raised when second differences do not settle within n_max. Carries the
/// samples so callers can report them.
class InconclusiveError : public DomainError {
public:
  InconclusiveError(const std::string& message, std::vector<std::pair<std::uint32_t, BigInt>> samples)
      : DomainError(message), samples_(std::move(samples)) {}
  const std::vector<std::pair<std::uint32_t, BigInt>>& samples() const noexcept { return samples_; }

private:
  std::vector<std::pair<std::uint32_t, BigInt>> samples_;
};

/// Fits the eventual quadratic to `values[k]` = f(k + 1). n0 is the start
/// of the longest trailing run of equal second differences.
PairGrowth fit_eventual_quadratic(std::span<const BigInt> values, const StabilizationPolicy& policy);

struct PairMultiplicity {
  Rational value;  // 2 * c2
  PairGrowth growth;
};

/// Twice the leading coefficient of n -> dim(J^n / J'^n).
PairMultiplicity pair_multiplicity(const MonomialIdeal& big, const MonomialIdeal& small,
                                   const StabilizationPolicy& policy = {});

/// The sampled growth of n -> colength(I^n).
PairGrowth hilbert_samuel_growth(const MonomialIdeal& ideal, const StabilizationPolicy& policy = {});

/// e(I) = 2 * leading coefficient of colength(I^n).
std::uint64_t hilbert_samuel_multiplicity(const MonomialIdeal& ideal,
                                          const StabilizationPolicy& policy = {});

/// All monomials in the Newton polyhedron conv(gens) + R^2_{>=0}.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// Whether `small` is a reduction of `big`. Decided by pair multiplicity
/// and cross-checked against equality of integral closures; a disagreement
/// throws InternalError.
bool is_reduction(const MonomialIdeal& small, const MonomialIdeal& big,
                  const StabilizationPolicy& policy = {});

} // namespace surfsing
