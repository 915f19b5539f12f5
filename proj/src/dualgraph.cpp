#include "surfsing/dualgraph.hpp"
#include "surfsing/errors.hpp"

namespace surfsing {

IntersectionMatrix IntersectionMatrix::from_rows(std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw DomainError("intersection matrix must be square: row " + std::to_string(i + 1) +
                        " has " + std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i])
        throw DomainError("intersection matrix must be symmetric: entry (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") differs from its transpose");
  return IntersectionMatrix(std::move(rows));
}

DualGraph::DualGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].id, i).second)
      throw DomainError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  for (const Edge& e : edges) {
    const auto a = index_.find(e.first);
    const auto b = index_.find(e.second);
    if (a == index_.end())
      throw DomainError("edge references unknown vertex '" + e.first + "'");
    if (b == index_.end())
      throw DomainError("edge references unknown vertex '" + e.second + "'");
    if (a->second == b->second)
      throw DomainError("self-loop on vertex '" + e.first +
                        "' (components of a good resolution are smooth)");
    if (e.multiplicity == 0)
      throw DomainError("edge " + e.first + "-" + e.second + " has multiplicity 0");
    const auto key = std::minmax(a->second, b->second);
    edges_[{key.first, key.second}] += e.multiplicity;
  }
}

std::size_t DualGraph::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown vertex '" + id + "'");
  return it->second;
}

std::uint32_t DualGraph::edge_multiplicity(std::size_t i, std::size_t j) const {
  const auto key = std::minmax(i, j);
  const auto it = edges_.find({key.first, key.second});
  return it == edges_.end() ? 0 : it->second;
}

std::uint64_t DualGraph::total_edge_multiplicity() const noexcept {
  std::uint64_t total = 0;
  for (const auto& [pair, mult] : edges_) total += mult;
  return total;
}

IntersectionMatrix intersection_matrix(const DualGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = g.vertex(i).self_intersection;
  for (const auto& [pair, mult] : g.edges()) {
    rows[pair.first][pair.second] = mult;
    rows[pair.second][pair.first] = mult;
  }
  return IntersectionMatrix::from_rows(std::move(rows));
}

std::vector<BigInt> leading_principal_minors(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  // Without row exchanges the k-th Bareiss pivot equals the k-th leading
  // principal minor, and every division below is exact.
  std::vector<BigInt> minors;
  minors.reserve(n);
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  return minors;
}

bool is_negative_definite(const IntersectionMatrix& m) {
  const auto minors = leading_principal_minors(m);
  if (minors.size() != m.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // size k+1 minor must have sign (-1)^(k+1)
    const bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

std::int64_t euler_characteristic(const DualGraph& g) {
  std::int64_t chi = 0;
  for (const Vertex& v : g.vertices()) chi += 2 - 2 * static_cast<std::int64_t>(v.genus);
  return chi - static_cast<std::int64_t>(g.total_edge_multiplicity());
}

} // namespace surfsing
