#pragma once

// The Bose-Chowla Sidon set A(q, theta) = { a in Z_{q^2-1} : theta^a - theta in F_q }
// and the arithmetic facts the C4-free construction relies on.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sidon_c4/errors.hpp"
#include "sidon_c4/field.hpp"

namespace sidon_c4 {

using Residue = std::uint32_t;

struct SidonSet {
  /// |elements| for a Bose-Chowla set; the nominal size for arbitrary inputs.
  std::uint64_t q = 0;
  /// Group modulus, q^2 - 1 for a Bose-Chowla set.
  std::uint64_t n = 0;
  /// Sorted, distinct residues in [0, n).
  std::vector<Residue> elements;
  /// Number of even elements, reading residues as integers in [0, n).
  std::uint64_t t_even = 0;

  [[nodiscard]] bool contains(Residue r) const {
    return std::binary_search(elements.begin(), elements.end(), r);
  }
  [[nodiscard]] std::size_t size() const { return elements.size(); }
};

inline std::uint64_t even_count(const SidonSet& A) {
  return static_cast<std::uint64_t>(
      std::count_if(A.elements.begin(), A.elements.end(), [](Residue a) { return a % 2 == 0; }));
}

/// Wraps arbitrary residues mod n as a SidonSet (sorted, deduplicated). Used
/// for hand-built and adversarial inputs; it does not check the Sidon property.
inline SidonSet make_residue_set(std::uint64_t n, std::vector<Residue> residues) {
  SidonSet A;
  A.n = n;
  for (auto& r : residues) r = static_cast<Residue>(r % n);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  A.elements = std::move(residues);
  A.q = A.elements.size();
  A.t_even = even_count(A);
  return A;
}

inline SidonSet build_bose_chowla(const FieldParams& ctx) {
  SidonSet A;
  A.q = ctx.q;
  A.n = ctx.group_order();
  FieldElement power = one(ctx);
  for (std::uint64_t a = 0; a < A.n; ++a) {
    if (in_subfield(sub(power, ctx.theta, ctx), ctx)) {
      A.elements.push_back(static_cast<Residue>(a));
    }
    power = mul(power, ctx.theta, ctx);
  }
  if (A.elements.size() != ctx.q) {
    throw SizeMismatch("|A(q, theta)| = " + std::to_string(A.elements.size()) +
                       ", expected q = " + std::to_string(ctx.q));
  }
  A.t_even = even_count(A);
  return A;
}

/// Brute-force occupancy scan over all sums a + b (a <= b) mod n.
inline bool verify_sidon(const SidonSet& A) {
  std::vector<bool> seen(A.n, false);
  const auto& el = A.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i; j < el.size(); ++j) {
      const std::uint64_t s = (std::uint64_t{el[i]} + el[j]) % A.n;
      if (seen[s]) return false;
      seen[s] = true;
    }
  }
  return true;
}

struct DifferenceSet {
  /// present[r] iff r is in A - A.
  std::vector<bool> present;
  /// Residues not in A - A, ascending.
  std::vector<Residue> missing;

  [[nodiscard]] std::size_t size() const { return present.size() - missing.size(); }
  [[nodiscard]] bool contains(std::uint64_t r) const { return present[r]; }
};

/// A - A without any lemma check.
inline DifferenceSet compute_differences(const SidonSet& A) {
  DifferenceSet D;
  D.present.assign(A.n, false);
  for (const Residue a : A.elements) {
    for (const Residue b : A.elements) {
      D.present[(std::uint64_t{a} + A.n - b) % A.n] = true;
    }
  }
  for (std::uint64_t r = 0; r < A.n; ++r) {
    if (!D.present[r]) D.missing.push_back(static_cast<Residue>(r));
  }
  return D;
}

/// The nonzero multiples s(q+1), 1 <= s <= q-2, that A - A must miss.
inline std::vector<Residue> expected_missing_differences(std::uint64_t q) {
  std::vector<Residue> out;
  for (std::uint64_t s = 1; s + 2 <= q; ++s) out.push_back(static_cast<Residue>(s * (q + 1)));
  return out;
}

inline DifferenceSet difference_set(const SidonSet& A) {
  DifferenceSet D = compute_differences(A);
  const auto expected = expected_missing_differences(A.q);
  if (D.missing != expected) {
    throw LemmaViolation("A - A misses " + std::to_string(D.missing.size()) +
                         " residues, expected exactly the " + std::to_string(expected.size()) +
                         " nonzero multiples of q+1");
  }
  if (D.size() != A.q * (A.q - 1) + 1) {
    throw LemmaViolation("|A - A| = " + std::to_string(D.size()) + ", expected q(q-1)+1");
  }
  return D;
}

/// One residue per line, decimal, ascending.
inline void write_sidon_set(std::ostream& os, const SidonSet& A) {
  for (const Residue a : A.elements) os << a << '\n';
}

}  // namespace sidon_c4
