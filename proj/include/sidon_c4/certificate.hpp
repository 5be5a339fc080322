#pragma once

// End-to-end pipeline for one q (field -> Sidon set -> graph -> oracles ->
// excision) and the CSV / text renderings of its report.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sidon_c4/excision.hpp"
#include "sidon_c4/field.hpp"
#include "sidon_c4/graph.hpp"
#include "sidon_c4/number_theory.hpp"
#include "sidon_c4/oracle.hpp"
#include "sidon_c4/sidon.hpp"

namespace sidon_c4 {

struct CertifyOptions {
  std::uint64_t generator_index = 0;
  unsigned threads = 1;
  std::uint64_t c4_recheck_max_q = 31;
};

inline std::string describe_witness(const oracle::OracleResult& r) {
  std::ostringstream os;
  os << r.name << " failed";
  if (r.witness) {
    os << ", witness";
    for (const auto w : *r.witness) os << ' ' << w;
  }
  return os.str();
}

/// Empirical window |t - q/2| <= 2 q^{3/4}; returns the observed deviation.
inline double t_deviation(std::uint64_t q, std::uint64_t t) {
  return std::abs(static_cast<double>(t) - static_cast<double>(q) / 2.0);
}

inline bool t_within_window(std::uint64_t q, std::uint64_t t) {
  return t_deviation(q, t) <= 2.0 * std::pow(static_cast<double>(q), 0.75);
}

inline CertificateReport certify(std::uint64_t q, const CertifyOptions& options = {}) {
  const FieldParams ctx = make_field(q, options.generator_index);
  const SidonSet A = build_bose_chowla(ctx);

  LemmaChecks checks;
  std::vector<std::string> failures;

  checks.sidon_ok = verify_sidon(A);
  if (!checks.sidon_ok) failures.emplace_back("A(q, theta) is not a Sidon set");

  try {
    (void)difference_set(A);
    checks.diffset_ok = true;
  } catch (const LemmaViolation& ex) {
    failures.emplace_back(ex.what());
  }

  const BCGraph G = build_graph(A);

  const auto census = oracle::count_c4_census(G.adjacency(), options.threads);
  checks.c4_free_ok = census.cycles == 0;
  if (!checks.c4_free_ok) {
    failures.emplace_back("G contains " + std::to_string(census.cycles) + " 4-cycles");
  }

  const std::size_t max_abs = max_absolute_adjacency(G);
  checks.atmost2_ok = max_abs <= 2;
  if (!checks.atmost2_ok) {
    failures.emplace_back("a vertex has " + std::to_string(max_abs) + " absolute neighbors");
  }

  try {
    checks.pairing_ok = absolute_pairs(G).size() == A.t_even;
    if (!checks.pairing_ok) failures.emplace_back("absolute pair count differs from t");
  } catch (const PairingViolation& ex) {
    failures.emplace_back(ex.what());
  }

  const auto dichotomy = oracle::scan_pair_dichotomy(G);
  checks.dichotomy_ok = dichotomy.passed;
  if (!dichotomy.passed) failures.push_back(describe_witness(dichotomy));

  const auto triple = oracle::scan_triple_lemma(A);
  checks.triple_ok = triple.passed;
  if (!triple.passed) failures.push_back(describe_witness(triple));

  const ExcisionPlan plan = build_plan(G);
  CertificateReport r = excise(G, plan, {options.c4_recheck_max_q, options.threads});
  r.p = ctx.p;
  r.e = ctx.e;
  if (r.excised_c4_checked && !r.excised_c4_free) checks.c4_free_ok = false;
  r.checks = checks;
  r.c4_work = census.work;
  r.t_deviation = t_deviation(q, r.t);
  r.t_window_ok = t_within_window(q, r.t);
  r.failures.insert(r.failures.begin(), failures.begin(), failures.end());
  return r;
}

/// Certifies every odd prime power in [q_min, q_max] on up to `workers`
/// threads. Results are in ascending q regardless of completion order.
inline std::vector<CertificateReport> run_sweep(std::uint64_t q_min, std::uint64_t q_max,
                                                CertifyOptions options, unsigned workers = 1) {
  const auto qs = odd_prime_powers(q_min, q_max);
  std::vector<CertificateReport> rows(qs.size());
  options.threads = 1;
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(qs.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        // Largest q first keeps the tail short.
        for (std::size_t i = next++; i < qs.size(); i = next++) {
          const std::size_t idx = qs.size() - 1 - i;
          try {
            rows[idx] = certify(qs[idx], options);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

inline constexpr const char* kCsvHeader =
    "q,p,e,n_before,m_before,t,k,capped,t_S,e_S,n_after,m_after,abl_bound,improvement,sidon_ok,"
    "diffset_ok,c4_free_ok,atmost2_ok,pairing_ok,dichotomy_ok,triple_ok,eq2_ok";

inline void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& os, const CertificateReport& r) {
  const auto b = [](bool v) { return v ? 1 : 0; };
  const auto& c = r.checks;
  os << r.q << ',' << r.p << ',' << r.e << ',' << r.n_before << ',' << r.m_before << ',' << r.t
     << ',' << r.k << ',' << b(r.capped) << ',' << r.t_s << ',' << r.e_s << ',' << r.n_after << ','
     << r.m_after << ',' << r.abl_bound << ',' << r.improvement << ',' << b(c.sidon_ok) << ','
     << b(c.diffset_ok) << ',' << b(c.c4_free_ok) << ',' << b(c.atmost2_ok) << ','
     << b(c.pairing_ok) << ',' << b(c.dichotomy_ok) << ',' << b(c.triple_ok) << ','
     << b(r.eq2_ok) << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<CertificateReport>& rows) {
  write_csv_header(os);
  for (const auto& r : rows) write_csv_row(os, r);
}

/// Renders 2x / 2 as a decimal with at most one fractional digit.
inline std::string halves(std::int64_t twice) {
  std::ostringstream os;
  if (twice < 0) {
    os << '-';
    twice = -twice;
  }
  os << twice / 2;
  if (twice % 2 != 0) os << ".5";
  return os.str();
}

inline void write_text_report(std::ostream& os, const CertificateReport& r) {
  const auto yes = [](bool v) { return v ? "yes" : "NO"; };
  const auto& c = r.checks;
  os << "q = " << r.q << " (p = " << r.p << ", e = " << r.e << ")\n"
     << "  G_{q,theta}:      n = " << r.n_before << ", m = " << r.m_before << ", t = " << r.t
     << " (" << 2 * r.t << " absolute vertices)\n"
     << "  t window:         |t - q/2| = " << std::fixed << std::setprecision(2) << r.t_deviation
     << (r.t_window_ok ? " within" : " OUTSIDE") << " 2 q^{3/4}\n"
     << std::defaultfloat << "  excision set:     k = " << r.k;
  if (r.capped) os << " (capped from " << r.k_requested << " at t)";
  os << ", t_S = " << r.t_s << ", e(S) = " << r.e_s << ", e(S, ~S) = " << r.e_cross;
  if (r.overlap) os << ", S1/S2 overlap";
  os << '\n'
     << "  excised graph:    n = " << r.n_after << ", m = " << r.m_after << '\n'
     << "  edge identity:    " << yes(r.eq2_ok) << '\n'
     << "  previous bound:   " << r.abl_bound << ", improvement = " << r.improvement << '\n'
     << "  q^3/2 - q^2 - m:  " << halves(r.twice_deficit) << '\n'
     << "  sidon " << yes(c.sidon_ok) << ", difference set " << yes(c.diffset_ok) << ", C4-free "
     << yes(c.c4_free_ok) << (r.excised_c4_checked ? " (excised graph rechecked)" : "")
     << ", at most two " << yes(c.atmost2_ok) << ", pairing " << yes(c.pairing_ok)
     << ", dichotomy " << yes(c.dichotomy_ok) << ", triple " << yes(c.triple_ok) << '\n';
  for (const auto& f : r.failures) os << "  FAILURE: " << f << '\n';
}

}  // namespace sidon_c4
