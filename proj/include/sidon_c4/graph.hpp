#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon_c4/errors.hpp"
#include "sidon_c4/sidon.hpp"

namespace sidon_c4 {

using Vertex = std::uint32_t;
/// Sorted neighbor lists of a simple undirected graph on 0 .. size()-1.
using Adjacency = std::vector<std::vector<Vertex>>;

inline std::uint64_t count_edges(const Adjacency& adj) {
  std::uint64_t degree_sum = 0;
  for (const auto& nbrs : adj) degree_sum += nbrs.size();
  return degree_sum / 2;
}

/// G_{q,theta}: vertices Z_n, i ~ j iff i != j and i + j in A.
class BCGraph {
 public:
  [[nodiscard]] std::uint64_t q() const { return sidon_.q; }
  [[nodiscard]] std::uint64_t n() const { return sidon_.n; }
  [[nodiscard]] const SidonSet& sidon() const { return sidon_; }
  [[nodiscard]] const Adjacency& adjacency() const { return adjacency_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  [[nodiscard]] bool is_absolute(Vertex v) const { return absolute_[v]; }
  [[nodiscard]] const std::vector<Vertex>& absolute_vertices() const { return absolute_list_; }
  [[nodiscard]] std::uint64_t edge_count() const { return edges_; }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return u != v && sidon_.contains(static_cast<Residue>((std::uint64_t{u} + v) % n()));
  }

  friend BCGraph build_graph(const SidonSet& A);

 private:
  SidonSet sidon_;
  Adjacency adjacency_;
  std::vector<bool> absolute_;
  std::vector<Vertex> absolute_list_;
  std::uint64_t edges_ = 0;
};

/// Builds the graph and checks: no loops, symmetry, the degree law
/// (|A| - 1 on absolute vertices, |A| elsewhere), 2t absolute vertices, and
/// 2e(G) = n|A| - 2t, which is e(G) = q^3/2 - q/2 - t when n = q^2 - 1.
inline BCGraph build_graph(const SidonSet& A) {
  if (A.n == 0 || A.n % 2 != 0) {
    throw InvariantViolation("vertex count must be even, got " + std::to_string(A.n));
  }
  BCGraph G;
  G.sidon_ = A;
  const std::uint64_t n = A.n;
  G.adjacency_.assign(n, {});
  G.absolute_.assign(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto& nbrs = G.adjacency_[i];
    nbrs.reserve(A.size());
    for (const Residue a : A.elements) {
      const auto j = static_cast<Vertex>((a + n - i) % n);
      if (j == i) {
        G.absolute_[i] = true;
      } else {
        nbrs.push_back(j);
      }
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (G.absolute_[i]) G.absolute_list_.push_back(static_cast<Vertex>(i));
  }

  std::uint64_t degree_sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto& nbrs = G.adjacency_[i];
    const std::size_t expected = A.size() - (G.absolute_[i] ? 1 : 0);
    if (nbrs.size() != expected) {
      throw InvariantViolation("degree law fails at vertex " + std::to_string(i));
    }
    for (const Vertex j : nbrs) {
      if (j == i) throw InvariantViolation("self-loop at vertex " + std::to_string(i));
      if (!std::binary_search(G.adjacency_[j].begin(), G.adjacency_[j].end(),
                              static_cast<Vertex>(i))) {
        throw InvariantViolation("adjacency not symmetric at edge " + std::to_string(i) + " " +
                                 std::to_string(j));
      }
    }
    degree_sum += nbrs.size();
  }
  if (G.absolute_list_.size() != 2 * A.t_even) {
    throw InvariantViolation(std::to_string(G.absolute_list_.size()) +
                             " absolute vertices, expected 2t = " + std::to_string(2 * A.t_even));
  }
  if (degree_sum != n * A.size() - 2 * A.t_even) {
    throw InvariantViolation("edge count differs from n|A|/2 - t");
  }
  G.edges_ = degree_sum / 2;
  return G;
}

/// Sorted intersection of the neighbor lists of i and j.
inline std::vector<Vertex> common_neighbors(const BCGraph& G, Vertex i, Vertex j) {
  if (i == j) throw SameVertex("common_neighbors requires distinct vertices, got " + std::to_string(i));
  const auto a = G.neighbors(i);
  const auto b = G.neighbors(j);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Absolute vertices grouped as antipodal pairs (i, i + n/2), smaller
/// residue first, ordered by that representative.
inline std::vector<std::pair<Vertex, Vertex>> absolute_pairs(const BCGraph& G) {
  const std::uint64_t half = G.n() / 2;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Vertex i : G.absolute_vertices()) {
    const auto partner = static_cast<Vertex>((i + half) % G.n());
    if (!G.is_absolute(partner)) {
      throw PairingViolation("absolute vertex " + std::to_string(i) + " has non-absolute partner " +
                             std::to_string(partner));
    }
    if (i < half) pairs.emplace_back(i, partner);
  }
  return pairs;
}

/// max over vertices j of the number of absolute neighbors of j.
inline std::size_t max_absolute_adjacency(const BCGraph& G) {
  std::size_t best = 0;
  for (std::uint64_t j = 0; j < G.n(); ++j) {
    std::size_t count = 0;
    for (const Vertex i : G.neighbors(static_cast<Vertex>(j))) count += G.is_absolute(i) ? 1 : 0;
    best = std::max(best, count);
  }
  return best;
}

/// Edge list: header "# sidon-c4 q=<q> n=<n> m=<m>", then "u v" with u < v in
/// ascending order. Vertices with removed[v] set are skipped and not counted.
inline void write_edge_list(std::ostream& os, std::uint64_t q, const Adjacency& adj,
                            const std::vector<bool>& removed = {}) {
  const auto gone = [&](Vertex v) { return !removed.empty() && removed[v]; };
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  for (Vertex u = 0; u < adj.size(); ++u) {
    if (gone(u)) continue;
    ++n;
    for (const Vertex v : adj[u]) m += (u < v && !gone(v)) ? 1 : 0;
  }
  os << "# sidon-c4 q=" << q << " n=" << n << " m=" << m << '\n';
  for (Vertex u = 0; u < adj.size(); ++u) {
    if (gone(u)) continue;
    for (const Vertex v : adj[u]) {
      if (u < v && !gone(v)) os << u << ' ' << v << '\n';
    }
  }
}

}  // namespace sidon_c4
