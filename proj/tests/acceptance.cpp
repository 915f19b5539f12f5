// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "surfsing/cycles.hpp"
#include "surfsing/equising.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/monomial.hpp"
#include "surfsing/nashideal.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace surfsing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks keep running but do not
// overwrite the message.
class Checker {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (outcome_.pass) outcome_.detail = s;
  }
  Outcome result() const { return outcome_; }

private:
  Outcome outcome_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << s << " s";
  return ss.str();
}

MonomialIdeal ideal(std::initializer_list<Exponent> gens) { return normalize(gens); }

Outcome ade_zero_law() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, g] : fixtures::ade_graphs()) {
    c.expect(canonical_cycle(g).is_zero(), name + ": Z_K != 0");
    c.expect(k_squared(g) == 0, name + ": K^2 = " + to_string(k_squared(g)));
  }
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "runtime " + fmt_seconds(t) + " >= 1 s");
  c.note("A1..A5, D4, D5, E6, E7, E8: Z_K = 0, K^2 = 0 in " + fmt_seconds(t));
  return c.result();
}

Outcome cone_formula() {
  Checker c;
  for (std::int64_t d = 2; d <= 10; ++d) {
    const DualGraph g = fixtures::single_vertex(-d);
    // hand-solved 1x1 system -d a = d - 2
    const Rational a(-(d - 2), d);
    const Rational expected = a * a * Rational(-d);
    c.expect(expected == Rational(-(d - 2) * (d - 2), d), "closed form mismatch at d=" + std::to_string(d));
    c.expect(k_squared(g) == expected, "K^2 wrong at d=" + std::to_string(d) + ": " + to_string(k_squared(g)));
  }
  c.expect(k_squared(fixtures::single_vertex(-3)) == Rational(-1, 3), "d=3 must give -1/3");
  c.expect(k_squared(fixtures::single_vertex(-4)) == -1, "d=4 must give -1");
  c.note("K^2 = -(d-2)^2/d for d = 2..10");
  return c.result();
}

Outcome cross_module_multiplicity() {
  Checker c;
  const Rational graph_side = generalized_multiplicity(fixtures::single_vertex(-1), DegreeVector{{1}});
  const auto lattice_side = hilbert_samuel_multiplicity(ideal({{1, 0}, {0, 1}}));
  c.expect(graph_side == 1, "generalized multiplicity = " + to_string(graph_side));
  c.expect(lattice_side == 1, "e_HS(x,y) = " + std::to_string(lattice_side));
  c.expect(graph_side == Rational(lattice_side), "graph and lattice routes disagree");
  c.note("e = -z.z = 1 = e_HS((x,y))");
  return c.result();
}

Outcome pair_multiplicity_table() {
  Checker c;
  const StabilizationPolicy policy{40, 5};
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = ideal({{1, 0}, {0, 1}});
  const auto xy2 = ideal({{1, 0}, {0, 2}});
  const auto m2 = power(m, 2);
  const auto x2y2 = ideal({{2, 0}, {0, 2}});
  const auto x2y = ideal({{2, 0}, {0, 1}});
  const auto x2y4 = ideal({{2, 0}, {0, 4}});

  c.expect(pair_multiplicity(m, xy2, policy).value == 1, "((x,y),(x,y^2)) != 1");
  c.expect(pair_multiplicity(m2, x2y2, policy).value == 0, "((x,y)^2,(x^2,y^2)) != 0");
  c.expect(is_reduction(x2y2, m2, policy), "(x^2,y^2) should be a reduction of (x,y)^2");
  c.expect(pair_multiplicity(m, x2y, policy).value == 1, "((x,y),(x^2,y)) != 1");

  // lattice-enumeration oracle for the sampled dimensions
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const auto expected = oracles::brute_colength(power(xy2, n)) - oracles::brute_colength(power(m, n));
    c.expect(pair_dimension(m, xy2, n) == expected, "pair dimension disagrees with enumeration");
  }

  const Rational ab = pair_multiplicity(m, xy2, policy).value;
  const Rational bc = pair_multiplicity(xy2, x2y4, policy).value;
  const Rational ac = pair_multiplicity(m, x2y4, policy).value;
  c.expect(ac == ab + bc, "tower: " + to_string(ac) + " != " + to_string(ab) + " + " + to_string(bc));
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "runtime " + fmt_seconds(t) + " >= 5 s");
  c.note("1, 0 (reduction), 1; tower " + to_string(ac) + " = " + to_string(ab) + " + " + to_string(bc) +
         " in " + fmt_seconds(t));
  return c.result();
}

Outcome reduction_double_check() {
  Checker c;
  std::mt19937 rng(20240501);
  int pairs = 0, reductions = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto J = fixtures::random_ideal(rng, 6);
    // alternate between arbitrary subideals and ideals whose closure is J's
    MonomialIdeal big = J, small = J;
    if (trial % 2 == 0) {
      small = fixtures::random_subideal(rng, J);
    } else {
      big = integral_closure(J);
    }
    if (!contains(big, small)) {
      c.expect(false, "generator produced a non-contained pair");
      continue;
    }
    ++pairs;
    const bool zero = pair_multiplicity(big, small).value == 0;
    const bool closures_equal = oracles::brute_closure(small) == oracles::brute_closure(big);
    c.expect(zero == closures_equal, "pair multiplicity and closure criterion disagree");
    try {
      c.expect(is_reduction(small, big) == zero, "is_reduction disagrees with pair multiplicity");
    } catch (const InternalError& e) {
      c.expect(false, std::string("internal disagreement: ") + e.what());
    }
    reductions += zero ? 1 : 0;
  }
  c.expect(pairs >= 100, "only " + std::to_string(pairs) + " pairs");
  c.expect(reductions > 0 && reductions < pairs, "both outcomes must be exercised");
  c.note(std::to_string(pairs) + " pairs, " + std::to_string(reductions) + " reductions, no disagreement");
  return c.result();
}

Outcome eventual_polynomial() {
  Checker c;
  std::mt19937 rng(777);
  const StabilizationPolicy policy{40, 5};
  int count = 0;
  std::uint32_t worst = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = fixtures::random_ideal(rng, 7);
    try {
      const auto growth = hilbert_samuel_growth(I, policy);
      worst = std::max(worst, growth.threshold);
      c.expect(growth.threshold + policy.window + 1 <= 40, "stabilized too late");
      const auto e = hilbert_samuel_multiplicity(I, policy);
      c.expect(Rational(e) == oracles::twice_newton_area(I),
               "e_HS = " + std::to_string(e) + " but 2*area = " + to_string(oracles::twice_newton_area(I)));
      ++count;
    } catch (const InconclusiveError& e) {
      c.expect(false, std::string("no stabilization: ") + e.what());
    }
  }
  c.expect(count >= 50, "only " + std::to_string(count) + " ideals");
  c.note(std::to_string(count) + " ideals, latest threshold n0 = " + std::to_string(worst) +
         ", e_HS = 2 * Newton area");
  return c.result();
}

Outcome nash_smoke() {
  Checker c;
  auto P = [](const char* s, std::size_t n) { return parse_polynomial(s, n); };
  const auto quad = nash_ideal_generators({P("x1^2 + x2^2 + x3^2", 3)});
  c.expect(quad.size() == 3, "quadric: wrong minor count");
  for (std::size_t k = 0; k < quad.size(); ++k)
    c.expect(quad[k].value == Rational(2) * Polynomial::variable(3, k + 1), "quadric minor mismatch");

  const auto ci = nash_ideal_generators({P("x1^2 + x2^2 + x3^2 + x4^2", 4), P("x1*x2 - x3*x4", 4)});
  const std::vector<const char*> hand{"2*x1^2 - 2*x2^2",      "-2*x1*x4 - 2*x2*x3", "-2*x1*x3 - 2*x2*x4",
                                      "-2*x1*x3 - 2*x2*x4",   "-2*x1*x4 - 2*x2*x3", "-2*x3^2 + 2*x4^2"};
  c.expect(ci.size() == 6, "2x4: expected 6 minors");
  for (std::size_t k = 0; k < std::min(ci.size(), hand.size()); ++k)
    c.expect(ci[k].value == P(hand[k], 4), "2x4 minor " + std::to_string(k) + " = " + to_string(ci[k].value));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<Polynomial>> rows(2);
    for (auto& row : rows)
      for (std::size_t k = 0; k < 4; ++k) row.push_back(fixtures::random_polynomial(rng, 4, 3, 2));
    const JacobianMatrix m(rows);
    for (const auto& cols : column_subsets(4, 2))
      c.expect(minor_determinant(m, cols, 0) == minor_determinant(m, cols, 1), "row expansions disagree");
  }
  c.note("quadric -> 2*(x1,x2,x3); 6 hand minors; 100 random 2x4 matrices agree");
  return c.result();
}

Outcome equisingularity_checkers() {
  Checker c;
  auto base = [](const std::string& label) {
    FiberRecord r;
    r.label = label;
    r.m = 3;
    r.mu2 = 4;
    r.khat2 = Rational(-7, 2);
    r.k2 = Rational(-1, 3);
    r.chiE = 2;
    r.e_values = {Rational(7, 2)};
    return r;
  };
  Family family;
  for (int k = 0; k < 10; ++k) family.push_back(base(std::to_string(k)));

  const auto nash = check_nash_criterion(family);
  const auto whitney = check_whitney_criterion(family);
  c.expect(nash.verdict && whitney.verdict, "constant family must pass both criteria");
  c.expect(nash.consequences.size() == 3, "nash criterion must emit (a1)-(a3)");
  c.expect(whitney.consequences.size() == 2, "whitney criterion must emit its consequences");

  const std::vector<std::pair<std::string, std::function<void(FiberRecord&)>>> perturbations{
      {"m", [](FiberRecord& r) { r.m += 1; }},
      {"mu2", [](FiberRecord& r) { r.mu2 += 1; }},
      {"khat2", [](FiberRecord& r) { r.khat2 = *r.khat2 - Rational(1, 2); }},
      {"k2", [](FiberRecord& r) { r.k2 = *r.k2 - 1; }},
      {"chiE", [](FiberRecord& r) { r.chiE = *r.chiE + 1; }},
  };
  const std::vector<std::string> nash_names{"m", "mu2", "khat2"};
  const std::vector<std::string> whitney_names{"k2", "chiE", "mu2", "m"};
  std::mt19937 rng(5);
  for (const auto& [name, perturb] : perturbations) {
    Family f = family;
    perturb(f[0]);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      const auto n = check_nash_criterion(f);
      const auto w = check_whitney_criterion(f);
      const bool in_nash = std::count(nash_names.begin(), nash_names.end(), name) > 0;
      const bool in_whitney = std::count(whitney_names.begin(), whitney_names.end(), name) > 0;
      c.expect(n.verdict == !in_nash, "nash verdict wrong after perturbing " + name);
      c.expect(w.verdict == !in_whitney, "whitney verdict wrong after perturbing " + name);
      if (in_nash) c.expect(n.failed() == std::vector<std::string>{name}, "nash must name exactly " + name);
      if (in_whitney) c.expect(w.failed() == std::vector<std::string>{name}, "whitney must name exactly " + name);
      for (const auto* r : {&n, &w})
        for (const auto& v : r->invariants)
          if (!v.constant) c.expect(v.offending == std::vector<std::string>{"0"}, "offender must be t=0");
      std::shuffle(f.begin(), f.end(), rng);
    }
  }

  Family semi = family;
  semi[4].e_values = {Rational(9, 2)};  // e(t) > e(0)
  const auto s = check_semicontinuity(semi);
  c.expect(!s.passed && s.violations == std::vector<std::string>{"4"}, "semicontinuity must flag t=4");
  c.expect(check_semicontinuity(family).passed, "constant e-values must pass");
  for (int k = 0; k < 5; ++k) {
    std::shuffle(semi.begin(), semi.end(), rng);
    c.expect(check_semicontinuity(semi).violations == s.violations, "semicontinuity depends on order");
  }
  c.note("10-fiber family passes; 5 perturbations at t=0 named exactly; e(0) < e(t) flagged");
  return c.result();
}

Outcome solver_exactness() {
  Checker c;
  std::mt19937 rng(424242);
  int graphs = 0, zero_vectors = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto g = fixtures::random_negdef_graph(rng, n);
    DegreeVector d = fixtures::random_degrees(rng, n, 6);
    if (trial % 25 == 0) d.values.assign(n, 0);
    const Cycle z = numerical_cycle(g, d);
    const auto md = apply(intersection_matrix(g), z);
    for (std::size_t i = 0; i < n; ++i) c.expect(md[i] == d.values[i], "M a != d");
    Rational dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += z.coefficients[i] * d.values[i];
    const Rational zz = pair_product(g, z, z);
    c.expect(zz == dot, "z.z != sum a_i d_i");
    c.expect(deg_c_squared(g, d) == zz, "deg_c_squared disagrees with the full product");
    const bool d_zero = std::all_of(d.values.begin(), d.values.end(), [](auto v) { return v == 0; });
    c.expect(zz <= 0, "z.z > 0");
    c.expect((zz == 0) == d_zero, "z.z = 0 must hold exactly when d = 0");
    zero_vectors += d_zero ? 1 : 0;
    ++graphs;
  }
  c.note(std::to_string(graphs) + " graphs (<= 12 vertices), " + std::to_string(zero_vectors) +
         " zero degree vectors");
  return c.result();
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 ADE zero law", ade_zero_law},
      {"AC2 cone formula", cone_formula},
      {"AC3 cross-module multiplicity", cross_module_multiplicity},
      {"AC4 pair-multiplicity table", pair_multiplicity_table},
      {"AC5 reduction criterion double-check", reduction_double_check},
      {"AC6 eventual polynomial", eventual_polynomial},
      {"AC7 Nash ideal smoke tests", nash_smoke},
      {"AC8 equisingularity checkers", equisingularity_checkers},
      {"AC9 solver exactness", solver_exactness},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << '\n';
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
