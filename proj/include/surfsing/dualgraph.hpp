#pragma once

#include "surfsing/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace surfsing {

/// One exceptional component E_i: its self-intersection E_i^2 and genus.
struct Vertex {
  std::string id;
  std::int64_t self_intersection = 0;
  std::uint32_t genus = 0;
};

/// Intersection point(s) between two distinct components; `multiplicity`
/// is E_i . E_j.
struct Edge {
  std::string first;
  std::string second;
  std::uint32_t multiplicity = 1;
};

/// Square symmetric integer matrix (E_i . E_j). Row order follows the
/// vertex order of the graph it came from.
class IntersectionMatrix {
public:
  IntersectionMatrix() = default;

  /// Throws DomainError when `rows` is not square or not symmetric.
  static IntersectionMatrix from_rows(std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  std::int64_t at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

private:
  explicit IntersectionMatrix(std::vector<std::vector<std::int64_t>> rows)
      : rows_(std::move(rows)) {}
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Weighted dual graph of a resolution. Immutable once built; the
/// constructor rejects duplicate ids, unknown endpoints, self-loops and
/// zero multiplicities. Repeated edges between the same pair accumulate.
class DualGraph {
public:
  DualGraph() = default;
  DualGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Index of `id` in vertex order; throws DomainError if absent.
  std::size_t index_of(const std::string& id) const;

  /// E_i . E_j for i != j (0 when not adjacent).
  std::uint32_t edge_multiplicity(std::size_t i, std::size_t j) const;

  /// Sum of all edge multiplicities, each unordered pair counted once.
  std::uint64_t total_edge_multiplicity() const noexcept;

  /// Adjacent pairs (i < j) with their multiplicities.
  const std::map<std::pair<std::size_t, std::size_t>, std::uint32_t>& edges() const noexcept {
    return edges_;
  }

private:
  std::vector<Vertex> vertices_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> edges_;
};

IntersectionMatrix intersection_matrix(const DualGraph& g);

/// Leading principal minors det(M_k), k = 1..n, via fraction-free
/// (Bareiss) elimination without pivoting. Stops at the first zero minor,
/// which is the last element returned.
std::vector<BigInt> leading_principal_minors(const IntersectionMatrix& m);

/// Sylvester's criterion: (-1)^k det(M_k) > 0 for every k.
bool is_negative_definite(const IntersectionMatrix& m);

/// chi(E) = sum(2 - 2 g_i) - sum of edge multiplicities. Assumes smooth
/// components meeting transversally at distinct points.
std::int64_t euler_characteristic(const DualGraph& g);

} // namespace surfsing
