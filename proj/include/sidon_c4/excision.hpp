#pragma once

// Deletes a (q+1)-vertex set S = S1 u S2 u S3 from G_{q,theta}, leaving a
// C4-free graph on q^2 - q - 2 vertices, with exact edge accounting.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sidon_c4/errors.hpp"
#include "sidon_c4/graph.hpp"
#include "sidon_c4/number_theory.hpp"
#include "sidon_c4/oracle.hpp"

namespace sidon_c4 {

/// floor(sqrt(8q + 9) / 2 - 1/2) in integer arithmetic.
constexpr std::uint64_t select_k_closed_form(std::uint64_t q) {
  return (isqrt(8 * q + 9) - 1) / 2;
}

/// Largest k with k(k+1)/2 <= q+1, i.e. C(k,2) + k <= q+1.
inline std::uint64_t select_k(std::uint64_t q) {
  std::uint64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= q + 1) ++k;
  if (k != select_k_closed_form(q)) {
    throw InvariantViolation("k search and closed form disagree at q = " + std::to_string(q));
  }
  return k;
}

struct ExcisionPlan {
  /// k from select_k, before capping at t.
  std::uint64_t k_requested = 0;
  /// min(k_requested, t); the number of representatives actually used.
  std::uint64_t k = 0;
  bool capped = false;
  /// Some common neighbor in S2 is also a representative in S1.
  bool overlap = false;
  /// First k absolute representatives, ascending.
  std::vector<Vertex> s1;
  /// Common neighbor of each representative pair (j1 < j2), in pair order.
  std::vector<Vertex> s2;
  /// Filler vertices, ascending.
  std::vector<Vertex> s3;
  std::uint64_t t_s = 0;
  std::uint64_t e_s = 0;
  std::uint64_t e_cross = 0;

  /// S = S1 u S2 u S3, ascending.
  [[nodiscard]] std::vector<Vertex> members() const {
    std::vector<Vertex> all(s1);
    all.insert(all.end(), s2.begin(), s2.end());
    all.insert(all.end(), s3.begin(), s3.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }
};

inline ExcisionPlan build_plan(const BCGraph& G) {
  const std::uint64_t q = G.q();
  const std::uint64_t n = G.n();
  const auto pairs = absolute_pairs(G);
  const std::uint64_t t = pairs.size();

  ExcisionPlan plan;
  plan.k_requested = select_k(q);
  plan.k = std::min(plan.k_requested, t);
  plan.capped = plan.k < plan.k_requested;
  if (plan.k * (plan.k + 1) / 2 > q + 1) {
    throw KTooLarge("C(k,2) + k exceeds q + 1 for k = " + std::to_string(plan.k));
  }

  std::vector<bool> in_s(n, false);
  for (std::uint64_t j = 0; j < plan.k; ++j) {
    plan.s1.push_back(pairs[j].first);
    in_s[pairs[j].first] = true;
  }

  std::vector<bool> in_s2(n, false);
  for (std::size_t j1 = 0; j1 < plan.s1.size(); ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < plan.s1.size(); ++j2) {
      const auto common = common_neighbors(G, plan.s1[j1], plan.s1[j2]);
      if (common.empty()) {
        throw MissingCommonNeighbor("representatives " + std::to_string(plan.s1[j1]) + " and " +
                                    std::to_string(plan.s1[j2]) + " have no common neighbor");
      }
      if (common.size() > 1) {
        throw InvariantViolation("representatives " + std::to_string(plan.s1[j1]) + " and " +
                                 std::to_string(plan.s1[j2]) + " span a 4-cycle");
      }
      const Vertex x = common.front();
      if (in_s2[x]) {
        throw LemmaViolation("vertex " + std::to_string(x) +
                             " is the common neighbor of two representative pairs");
      }
      in_s2[x] = true;
      if (in_s[x]) plan.overlap = true;
      in_s[x] = true;
      plan.s2.push_back(x);
    }
  }

  std::uint64_t size = 0;
  for (std::uint64_t v = 0; v < n; ++v) size += in_s[v] ? 1 : 0;
  const std::uint64_t target = q + 1;
  // Non-absolute vertices first; lowest residue wins within each pass.
  for (const bool allow_absolute : {false, true}) {
    for (Vertex v = 0; v < n && size < target; ++v) {
      if (in_s[v] || (G.is_absolute(v) && !allow_absolute)) continue;
      in_s[v] = true;
      plan.s3.push_back(v);
      ++size;
    }
  }
  std::sort(plan.s3.begin(), plan.s3.end());

  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v]) continue;
    plan.t_s += G.is_absolute(v) ? 1 : 0;
    for (const Vertex u : G.neighbors(v)) {
      if (!in_s[u]) {
        ++plan.e_cross;
      } else if (v < u) {
        ++plan.e_s;
      }
    }
  }
  return plan;
}

/// Checks run by certify() in addition to the accounting done by excise().
struct LemmaChecks {
  bool sidon_ok = false;
  bool diffset_ok = false;
  bool c4_free_ok = false;
  bool atmost2_ok = false;
  bool pairing_ok = false;
  bool dichotomy_ok = false;
  bool triple_ok = false;

  [[nodiscard]] bool all() const {
    return sidon_ok && diffset_ok && c4_free_ok && atmost2_ok && pairing_ok && dichotomy_ok &&
           triple_ok;
  }
};

struct CertificateReport {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t e = 0;
  std::uint64_t n_before = 0;
  std::uint64_t n_after = 0;
  std::uint64_t m_before = 0;
  std::uint64_t m_after = 0;
  std::uint64_t t = 0;
  std::uint64_t t_s = 0;
  std::uint64_t e_s = 0;
  std::uint64_t e_cross = 0;
  std::uint64_t k_requested = 0;
  std::uint64_t k = 0;
  bool capped = false;
  bool overlap = false;
  /// (q^3 - 2q^2 - q + 2) / 2, the previous lower bound for odd q.
  std::int64_t abl_bound = 0;
  std::int64_t improvement = 0;
  /// 2 * (q^3/2 - q^2 - m_after); doubled to stay integral.
  std::int64_t twice_deficit = 0;
  /// Direct recount matched q^3/2 - q^2 - 3q/2 - t + t_S + e_S.
  bool eq2_ok = false;
  /// The excised graph was re-checked by the 4-cycle counter.
  bool excised_c4_checked = false;
  bool excised_c4_free = false;
  /// |t - q/2| <= 2 q^{3/4}; an empirical window, reported but not enforced.
  bool t_window_ok = false;
  double t_deviation = 0.0;
  LemmaChecks checks;
  std::uint64_t c4_work = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty() && eq2_ok && checks.all(); }
};

constexpr std::int64_t abl_bound(std::int64_t q) { return (q * q * q - 2 * q * q - q + 2) / 2; }

/// 2 * (q^3/2 - q^2 - 3q/2 - t + t_S + e_S).
constexpr std::int64_t twice_excised_edge_formula(std::int64_t q, std::int64_t t, std::int64_t t_s,
                                                  std::int64_t e_s) {
  return q * q * q - 2 * q * q - 3 * q - 2 * t + 2 * t_s + 2 * e_s;
}

struct ExciseOptions {
  /// Re-run the 4-cycle counter on the excised graph when q <= this.
  std::uint64_t c4_recheck_max_q = 31;
  unsigned threads = 1;
};

/// The graph left after deleting S: same vertex labels, deleted vertices have
/// empty neighbor lists.
inline Adjacency excised_adjacency(const BCGraph& G, const std::vector<bool>& removed) {
  Adjacency adj(G.n());
  for (Vertex u = 0; u < G.n(); ++u) {
    if (removed[u]) continue;
    for (const Vertex v : G.neighbors(u)) {
      if (!removed[v]) adj[u].push_back(v);
    }
  }
  return adj;
}

inline std::vector<bool> removal_mask(const BCGraph& G, const ExcisionPlan& plan) {
  std::vector<bool> removed(G.n(), false);
  for (const Vertex v : plan.members()) removed[v] = true;
  return removed;
}

inline CertificateReport excise(const BCGraph& G, const ExcisionPlan& plan,
                                const ExciseOptions& options = {}) {
  CertificateReport r;
  r.q = G.q();
  r.n_before = G.n();
  r.m_before = G.edge_count();
  r.t = G.sidon().t_even;
  r.k_requested = plan.k_requested;
  r.k = plan.k;
  r.capped = plan.capped;
  r.overlap = plan.overlap;
  r.t_s = plan.t_s;
  r.e_s = plan.e_s;
  r.e_cross = plan.e_cross;

  const auto removed = removal_mask(G, plan);
  const auto members = plan.members();
  if (members.size() != r.q + 1) {
    throw InvariantViolation("|S| = " + std::to_string(members.size()) + ", expected q + 1");
  }
  const Adjacency rest = excised_adjacency(G, removed);
  r.n_after = r.n_before - members.size();
  r.m_after = count_edges(rest);

  const auto q = static_cast<std::int64_t>(r.q);
  const std::int64_t twice_formula =
      twice_excised_edge_formula(q, static_cast<std::int64_t>(r.t), static_cast<std::int64_t>(r.t_s),
                                 static_cast<std::int64_t>(r.e_s));
  r.eq2_ok = 2 * static_cast<std::int64_t>(r.m_after) == twice_formula &&
             r.m_before - r.m_after == r.e_s + r.e_cross && r.n_after == r.q * r.q - r.q - 2;
  if (!r.eq2_ok) {
    throw AccountingMismatch("q = " + std::to_string(r.q) + ": recount m_after = " +
                             std::to_string(r.m_after) + ", formula gives " +
                             std::to_string(twice_formula) + "/2");
  }

  r.abl_bound = abl_bound(q);
  r.improvement = static_cast<std::int64_t>(r.m_after) - r.abl_bound;
  r.twice_deficit = q * q * q - 2 * q * q - 2 * static_cast<std::int64_t>(r.m_after);

  if (r.q <= options.c4_recheck_max_q) {
    r.excised_c4_checked = true;
    r.excised_c4_free = oracle::count_c4(rest, options.threads) == 0;
    if (!r.excised_c4_free) r.failures.emplace_back("excised graph contains a 4-cycle");
  }
  return r;
}

}  // namespace sidon_c4
