#pragma once

// Brute-force verifiers. None of these reuse the algebra behind the
// construction; they only look at adjacency lists and residues.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sidon_c4/graph.hpp"
#include "sidon_c4/sidon.hpp"

namespace sidon_c4::oracle {

struct OracleResult {
  std::string name;
  bool passed = true;
  /// Present iff !passed.
  std::optional<std::vector<std::uint64_t>> witness;
  /// Elementary comparisons performed.
  std::uint64_t work = 0;

  void fail(std::vector<std::uint64_t> w) {
    passed = false;
    witness = std::move(w);
  }
};

struct C4Census {
  std::uint64_t cycles = 0;
  std::uint64_t work = 0;
};

namespace detail {

// Sum over pairs {u, w} with u in [begin, end), u < w, of C(codeg(u, w), 2).
// One dense counter per worker; work is the number of wedges walked.
inline C4Census codegree_range(const Adjacency& adj, std::size_t begin, std::size_t end) {
  std::vector<std::uint32_t> codeg(adj.size(), 0);
  std::vector<Vertex> touched;
  C4Census out;
  for (std::size_t u = begin; u < end; ++u) {
    for (const Vertex v : adj[u]) {
      for (const Vertex w : adj[v]) {
        ++out.work;
        if (w <= u) continue;
        if (codeg[w]++ == 0) touched.push_back(w);
      }
    }
    for (const Vertex w : touched) {
      const std::uint64_t c = codeg[w];
      out.cycles += c * (c - 1) / 2;
      codeg[w] = 0;
    }
    touched.clear();
  }
  return out;
}

}  // namespace detail

/// Exact number of 4-cycles by codegree accumulation in O(sum deg^2).
/// Each 4-cycle is seen once from each of its two diagonals.
inline C4Census count_c4_census(const Adjacency& adj, unsigned threads = 1) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(adj.size() / 64 + 1)));
  std::vector<C4Census> partial(threads);
  if (threads == 1) {
    partial[0] = detail::codegree_range(adj, 0, adj.size());
  } else {
    // Strided blocks balance the triangular u < w workload.
    constexpr std::size_t kBlock = 64;
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t b = t * kBlock; b < adj.size(); b += threads * kBlock) {
          const C4Census c = detail::codegree_range(adj, b, std::min(adj.size(), b + kBlock));
          partial[t].cycles += c.cycles;
          partial[t].work += c.work;
        }
      });
    }
  }
  C4Census total;
  for (const auto& c : partial) {
    total.cycles += c.cycles;
    total.work += c.work;
  }
  total.cycles /= 2;
  return total;
}

inline std::uint64_t count_c4(const Adjacency& adj, unsigned threads = 1) {
  return count_c4_census(adj, threads).cycles;
}

/// Groups the ordered pairs (a, b) in A x A by (2b - a) mod n and fails if a
/// class holds three pairs with pairwise distinct a's and pairwise distinct
/// b's. Witness: a1, b1, a2, b2, a3, b3.
inline OracleResult scan_triple_lemma(const SidonSet& A) {
  OracleResult r{"triple", true, std::nullopt, 0};
  struct Pair {
    Residue a;
    Residue b;
  };
  std::vector<std::vector<Pair>> classes(A.n);
  for (const Residue a : A.elements) {
    for (const Residue b : A.elements) {
      classes[(2 * std::uint64_t{b} + A.n - a) % A.n].push_back({a, b});
    }
  }
  for (const auto& cls : classes) {
    for (std::size_t x = 0; x < cls.size(); ++x) {
      for (std::size_t y = x + 1; y < cls.size(); ++y) {
        for (std::size_t z = y + 1; z < cls.size(); ++z) {
          ++r.work;
          const Pair& p1 = cls[x];
          const Pair& p2 = cls[y];
          const Pair& p3 = cls[z];
          const bool a_distinct = p1.a != p2.a && p1.a != p3.a && p2.a != p3.a;
          const bool b_distinct = p1.b != p2.b && p1.b != p3.b && p2.b != p3.b;
          if (a_distinct && b_distinct) {
            r.fail({p1.a, p1.b, p2.a, p2.b, p3.a, p3.b});
            return r;
          }
        }
      }
    }
  }
  return r;
}

/// For all pairs of distinct absolute vertices: a common neighbor exists iff
/// the pair is not antipodal. Witness: i, j, number of common neighbors.
inline OracleResult scan_pair_dichotomy(const BCGraph& G) {
  OracleResult r{"dichotomy", true, std::nullopt, 0};
  const auto& abs = G.absolute_vertices();
  const std::uint64_t half = G.n() / 2;
  for (std::size_t x = 0; x < abs.size(); ++x) {
    for (std::size_t y = x + 1; y < abs.size(); ++y) {
      const Vertex i = abs[x];
      const Vertex j = abs[y];
      const auto common = common_neighbors(G, i, j);
      r.work += G.degree(i) + G.degree(j);
      const bool antipodal = (j - i) == half;
      if (common.empty() != antipodal) {
        r.fail({i, j, common.size()});
        return r;
      }
    }
  }
  return r;
}

/// For all i != j: a common neighbor exists iff (i - j) mod n lies in
/// (A - A) \ {0}. Quadratic in n; intended for small q. Witness: i, j.
// Loops are dropped from G, so the iff is tested on the looped relation
// (x with i + x and j + x in A, x free to equal i or j). G's common
// neighbors must then be exactly that set minus {i, j}.
// Witness: i, j, |looped common|, |common in G|.
inline OracleResult scan_common_neighbor_criterion(const BCGraph& G, const DifferenceSet& D) {
  OracleResult r{"common_neighbor", true, std::nullopt, 0};
  const std::uint64_t n = G.n();
  const auto& A = G.sidon();
  std::vector<Vertex> looped;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      looped.clear();
      for (const Residue a : A.elements) {
        const auto x = static_cast<Vertex>((a + n - i) % n);
        if (A.contains(static_cast<Residue>((j + x) % n))) looped.push_back(x);
      }
      std::sort(looped.begin(), looped.end());
      const auto common = common_neighbors(G, i, j);
      r.work += A.size() + G.degree(i) + G.degree(j);
      std::vector<Vertex> expected;
      for (const Vertex x : looped) {
        if (x != i && x != j) expected.push_back(x);
      }
      if (looped.empty() == D.contains(static_cast<Residue>((i + n - j) % n)) || common != expected) {
        r.fail({i, j, looped.size(), common.size()});
        return r;
      }
    }
  }
  return r;
}

}  // namespace sidon_c4::oracle
