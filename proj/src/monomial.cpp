#include "surfsing/monomial.hpp"

#include <algorithm>
#include <string>

namespace surfsing {

MonomialIdeal normalize(std::span<const Exponent> gens) {
  if (gens.empty()) throw DomainError("a monomial ideal needs at least one generator");
  std::vector<Exponent> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  // a is non-decreasing along `sorted`, so a generator is redundant exactly
  // when some earlier one has b no larger than its own.
  MonomialIdeal ideal;
  for (const Exponent& e : sorted)
    if (ideal.gens_.empty() || e.b < ideal.gens_.back().b) ideal.gens_.push_back(e);
  return ideal;
}

bool MonomialIdeal::has_finite_colength() const noexcept {
  return gens_.front().a == 0 && gens_.back().b == 0;
}

bool MonomialIdeal::contains_monomial(const Exponent& e) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(e); });
}

std::uint64_t colength(const MonomialIdeal& ideal) {
  if (!ideal.has_finite_colength())
    throw DomainError("ideal has infinite colength: it must contain a pure power of x and of y");
  const auto& gens = ideal.generators();
  // Column a (0 <= a < p) is cut off at the smallest b among generators
  // with exponent of x at most a.
  std::uint64_t count = 0;
  std::size_t g = 0;
  for (std::uint32_t a = 0; a < gens.back().a; ++a) {
    while (g + 1 < gens.size() && gens[g + 1].a <= a) ++g;
    count += gens[g].b;
  }
  return count;
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<Exponent> sums;
  sums.reserve(lhs.generators().size() * rhs.generators().size());
  for (const Exponent& p : lhs.generators())
    for (const Exponent& q : rhs.generators()) sums.push_back({p.a + q.a, p.b + q.b});
  return normalize(sums);
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t n) {
  MonomialIdeal result = normalize({Exponent{0, 0}});
  MonomialIdeal base = ideal;
  while (n > 0) {
    if (n & 1U) result = product(result, base);
    n >>= 1U;
    if (n > 0) base = product(base, base);
  }
  return result;
}

bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Exponent& e) { return outer.contains_monomial(e); });
}

namespace {

void require_pair(const MonomialIdeal& big, const MonomialIdeal& small) {
  if (!contains(big, small))
    throw DomainError("precondition violated: J' is not contained in J");
  if (!small.has_finite_colength())
    throw DomainError("ideal has infinite colength: it must contain a pure power of x and of y");
}

void validate(const StabilizationPolicy& policy) {
  if (policy.window == 0) throw DomainError("stabilization window must be at least 1");
  if (policy.n_max < policy.window + 2)
    throw DomainError("nmax must be at least window + 2 (got nmax=" + std::to_string(policy.n_max) +
                      ", window=" + std::to_string(policy.window) + ")");
}

// colength(I^n) for n = 1..n_max, built incrementally.
std::vector<std::uint64_t> power_colengths(const MonomialIdeal& ideal, std::uint32_t n_max) {
  std::vector<std::uint64_t> out;
  out.reserve(n_max);
  MonomialIdeal current = ideal;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    if (n > 1) current = product(current, ideal);
    out.push_back(colength(current));
  }
  return out;
}

} // namespace

std::uint64_t pair_dimension(const MonomialIdeal& big, const MonomialIdeal& small, std::uint32_t n) {
  require_pair(big, small);
  return colength(power(small, n)) - colength(power(big, n));
}

Rational PairGrowth::evaluate(std::uint32_t n) const {
  const Rational x(n);
  return (c2 * x + c1) * x + c0;
}

PairGrowth fit_eventual_quadratic(std::span<const BigInt> values, const StabilizationPolicy& policy) {
  validate(policy);
  PairGrowth growth;
  for (std::size_t k = 0; k < values.size(); ++k)
    growth.samples.emplace_back(static_cast<std::uint32_t>(k + 1), values[k]);

  if (values.size() < policy.window + 2)
    throw InconclusiveError("need at least " + std::to_string(policy.window + 2) +
                                " samples, got " + std::to_string(values.size()),
                            growth.samples);

  std::vector<BigInt> second;
  for (std::size_t k = 0; k + 2 < values.size(); ++k)
    second.push_back(values[k + 2] - 2 * values[k + 1] + values[k]);

  std::size_t start = second.size() - 1;
  while (start > 0 && second[start - 1] == second.back()) --start;
  if (second.size() - start < policy.window)
    throw InconclusiveError("inconclusive: second differences did not stabilize over the last " +
                                std::to_string(policy.window) + " values up to n=" +
                                std::to_string(values.size()),
                            growth.samples);

  const std::uint32_t n0 = static_cast<std::uint32_t>(start + 1);
  const Rational x0(n0);
  growth.threshold = n0;
  growth.c2 = Rational(second.back()) / 2;
  growth.c1 = Rational(values[start + 1] - values[start]) - growth.c2 * (2 * x0 + 1);
  growth.c0 = Rational(values[start]) - growth.c2 * x0 * x0 - growth.c1 * x0;

  for (std::size_t k = start; k < values.size(); ++k)
    if (growth.evaluate(static_cast<std::uint32_t>(k + 1)) != Rational(values[k]))
      throw InternalError("fitted quadratic does not reproduce sample n=" + std::to_string(k + 1));
  return growth;
}

PairMultiplicity pair_multiplicity(const MonomialIdeal& big, const MonomialIdeal& small,
                                   const StabilizationPolicy& policy) {
  require_pair(big, small);
  validate(policy);
  const auto small_len = power_colengths(small, policy.n_max);
  const auto big_len = power_colengths(big, policy.n_max);
  std::vector<BigInt> diff;
  diff.reserve(policy.n_max);
  for (std::size_t k = 0; k < small_len.size(); ++k)
    diff.push_back(BigInt(small_len[k]) - BigInt(big_len[k]));
  PairGrowth growth = fit_eventual_quadratic(diff, policy);
  Rational value = 2 * growth.c2;
  return {std::move(value), std::move(growth)};
}

PairGrowth hilbert_samuel_growth(const MonomialIdeal& ideal, const StabilizationPolicy& policy) {
  validate(policy);
  const auto lengths = power_colengths(ideal, policy.n_max);
  std::vector<BigInt> values(lengths.begin(), lengths.end());
  return fit_eventual_quadratic(values, policy);
}

std::uint64_t hilbert_samuel_multiplicity(const MonomialIdeal& ideal,
                                          const StabilizationPolicy& policy) {
  const PairGrowth growth = hilbert_samuel_growth(ideal, policy);
  const Rational e = 2 * growth.c2;
  if (!is_integer(e) || e < 0)
    throw InternalError("Hilbert-Samuel multiplicity came out as " + to_string(e));
  return static_cast<std::uint64_t>(boost::multiprecision::numerator(e));
}

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// Vertices of the lower boundary of conv(gens) + R^2_{>=0}, a ascending.
std::vector<Exponent> newton_boundary(const std::vector<Exponent>& gens) {
  std::vector<Exponent> hull;
  auto cross = [](const Exponent& o, const Exponent& p, const Exponent& q) {
    const std::int64_t px = std::int64_t(p.a) - o.a, py = std::int64_t(p.b) - o.b;
    const std::int64_t qx = std::int64_t(q.a) - o.a, qy = std::int64_t(q.b) - o.b;
    return px * qy - py * qx;
  };
  for (const Exponent& e : gens) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), e) <= 0) hull.pop_back();
    hull.push_back(e);
  }
  return hull;
}

} // namespace

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const auto hull = newton_boundary(ideal.generators());
  const Exponent first = hull.front();
  const Exponent last = hull.back();

  std::vector<Exponent> gens;
  for (std::uint32_t a = first.a; a <= last.a; ++a) {
    std::int64_t lowest = last.b;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      // Facet through hull[s], hull[s+1] with inward normal (na, nb) > 0.
      const std::int64_t na = std::int64_t(hull[s].b) - hull[s + 1].b;
      const std::int64_t nb = std::int64_t(hull[s + 1].a) - hull[s].a;
      const std::int64_t rhs = na * hull[s].a + nb * hull[s].b;
      lowest = std::max(lowest, ceil_div(rhs - na * std::int64_t(a), nb));
    }
    gens.push_back({a, static_cast<std::uint32_t>(lowest)});
  }
  return normalize(gens);
}

bool is_reduction(const MonomialIdeal& small, const MonomialIdeal& big,
                  const StabilizationPolicy& policy) {
  if (!contains(big, small)) throw DomainError("precondition violated: J' is not contained in J");
  const bool by_multiplicity = pair_multiplicity(big, small, policy).value == 0;
  const bool by_closure = integral_closure(small) == integral_closure(big);
  if (by_multiplicity != by_closure)
    throw InternalError("reduction criteria disagree: pair multiplicity says " +
                        std::string(by_multiplicity ? "reduction" : "not a reduction") +
                        ", integral closure says " +
                        std::string(by_closure ? "reduction" : "not a reduction"));
  return by_multiplicity;
}

} // namespace surfsing
