#pragma once

#include "surfsing/cycles.hpp"
#include "surfsing/dualgraph.hpp"
#include "surfsing/monomial.hpp"
#include "surfsing/polynomial.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace surfsing;

/// Graph with every vertex (-2, g=0) and the given edges on vertices 0..n-1.
inline DualGraph minus_two_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), -2, 0});
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back({"v" + std::to_string(a), "v" + std::to_string(b), 1});
  return DualGraph(vs, es);
}

inline DualGraph chain_A(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(int(i), int(i) + 1);
  return minus_two_graph(n, e);
}

/// D_n: chain 0-1-...-(n-2) with an extra vertex n-1 attached to n-3.
inline DualGraph graph_D(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(int(i), int(i) + 1);
  e.emplace_back(int(n) - 3, int(n) - 1);
  return minus_two_graph(n, e);
}

/// E_n (n = 6, 7, 8): chain 0-...-(n-2) with vertex n-1 attached to 2.
inline DualGraph graph_E(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(int(i), int(i) + 1);
  e.emplace_back(2, int(n) - 1);
  return minus_two_graph(n, e);
}

inline std::vector<std::pair<std::string, DualGraph>> ade_graphs() {
  return {{"A1", chain_A(1)}, {"A2", chain_A(2)}, {"A3", chain_A(3)}, {"A4", chain_A(4)},
          {"A5", chain_A(5)}, {"D4", graph_D(4)}, {"D5", graph_D(5)}, {"E6", graph_E(6)},
          {"E7", graph_E(7)}, {"E8", graph_E(8)}};
}

inline DualGraph single_vertex(std::int64_t self, std::uint32_t genus = 0) {
  return DualGraph({{"E", self, genus}}, {});
}

/// Random graph on n <= 12 vertices: a random tree plus a few extra edges
/// (some with multiplicity), genera in {0,1}, weights in [-7, -1].
inline DualGraph random_graph(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> weight(-7, -1), genus(0, 3), mult(1, 2), coin(0, 3);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i)
    vs.push_back({"v" + std::to_string(i), weight(rng), static_cast<std::uint32_t>(genus(rng) == 0)});
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    es.push_back({vs[i].id, vs[parent(rng)].id, static_cast<std::uint32_t>(coin(rng) == 0 ? mult(rng) : 1)});
  }
  if (n > 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = coin(rng); k > 0; --k) {
      const auto a = pick(rng), b = pick(rng);
      if (a != b) es.push_back({vs[a].id, vs[b].id, 1});
    }
  }
  return DualGraph(vs, es);
}

/// Random negative definite graph: retries random_graph until the form is
/// negative definite (checked here via rational LDL^T, independent of the
/// library's Bareiss minors).
bool ldlt_negative_definite(const IntersectionMatrix& m);

inline DualGraph random_negdef_graph(std::mt19937& rng, std::size_t n) {
  for (;;) {
    DualGraph g = random_graph(rng, n);
    if (ldlt_negative_definite(intersection_matrix(g))) return g;
  }
}

inline bool ldlt_negative_definite(const IntersectionMatrix& m) {
  // -M positive definite iff all LDL^T pivots of -M are positive.
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m.at(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

inline DegreeVector random_degrees(std::mt19937& rng, std::size_t n, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  DegreeVector v;
  for (std::size_t i = 0; i < n; ++i) v.values.push_back(d(rng));
  return v;
}

/// Random finite-colength monomial ideal: pure powers x^p, y^q plus up to
/// four mixed generators inside the box.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::uint32_t max_exp = 7) {
  std::uniform_int_distribution<std::uint32_t> e(1, max_exp), count(0, 4);
  std::vector<Exponent> gens{{e(rng), 0}, {0, e(rng)}};
  for (std::uint32_t k = count(rng); k > 0; --k) gens.push_back({e(rng) - 1, e(rng) - 1});
  return normalize(gens);
}

/// Random monomial ideal contained in `outer`: products of outer's
/// generators with random monomials, keeping pure powers so the colength
/// stays finite.
inline MonomialIdeal random_subideal(std::mt19937& rng, const MonomialIdeal& outer) {
  std::uniform_int_distribution<std::uint32_t> shift(0, 2), coin(0, 2);
  std::vector<Exponent> gens;
  for (const Exponent& g : outer.generators()) {
    if (coin(rng) == 0 && g.a != 0 && g.b != 0) continue;  // drop a mixed generator
    Exponent s{g.a, g.b};
    if (g.a == 0 && g.b == 0) {  // unit ideal: keep both pure powers
      gens.push_back({shift(rng), 0});
      s.b += shift(rng);
    } else if (g.b == 0) s.a += shift(rng);
    else if (g.a == 0) s.b += shift(rng);
    else if (coin(rng) == 0) { s.a += shift(rng); s.b += shift(rng); }
    gens.push_back(s);
  }
  return normalize(gens);
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t num_vars, int terms = 4,
                                    std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
  std::uniform_int_distribution<int> c(-5, 5), den(1, 3);
  Polynomial p(num_vars);
  for (int t = 0; t < terms; ++t) {
    Exponents ex(num_vars);
    for (auto& x : ex) x = e(rng);
    p.add_term(ex, Rational(c(rng), den(rng)));
  }
  return p;
}

} // namespace fixtures
