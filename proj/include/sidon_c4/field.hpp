#pragma once

// Arithmetic in GF(q^2) = GF(p^{2e}) for odd q = p^e, with elements stored as
// coefficient vectors over Z_p reduced modulo a monic irreducible polynomial.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sidon_c4/errors.hpp"
#include "sidon_c4/number_theory.hpp"

namespace sidon_c4 {

using Coeff = std::uint32_t;

/// An element of GF(p^d): coefficient i multiplies x^i.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  [[nodiscard]] std::span<const Coeff> coeffs() const { return coeffs_; }
  [[nodiscard]] Coeff operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;
  /// Monic modulus of degree 2e, low to high (2e + 1 entries, last is 1).
  std::vector<Coeff> modulus;
  /// Multiplicative generator; empty until a generator has been chosen.
  FieldElement theta;

  [[nodiscard]] std::size_t degree() const { return 2 * static_cast<std::size_t>(e); }
  [[nodiscard]] std::uint64_t size() const { return q * q; }
  [[nodiscard]] std::uint64_t group_order() const { return q * q - 1; }
};

inline FieldElement constant(const FieldParams& ctx, Coeff c) {
  std::vector<Coeff> v(ctx.degree(), 0);
  v[0] = c % ctx.p;
  return FieldElement(std::move(v));
}

inline FieldElement zero(const FieldParams& ctx) { return constant(ctx, 0); }
inline FieldElement one(const FieldParams& ctx) { return constant(ctx, 1); }

/// The residue class of x.
inline FieldElement variable(const FieldParams& ctx) {
  std::vector<Coeff> v(ctx.degree(), 0);
  v[1] = 1;
  return FieldElement(std::move(v));
}

inline bool is_valid(const FieldElement& a, const FieldParams& ctx) {
  if (a.size() != ctx.degree()) return false;
  for (const Coeff c : a.coeffs()) {
    if (c >= ctx.p) return false;
  }
  return true;
}

inline FieldElement add(const FieldElement& a, const FieldElement& b, const FieldParams& ctx) {
  std::vector<Coeff> v(ctx.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + b[i]) % ctx.p;
  return FieldElement(std::move(v));
}

inline FieldElement sub(const FieldElement& a, const FieldElement& b, const FieldParams& ctx) {
  std::vector<Coeff> v(ctx.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + ctx.p - b[i]) % ctx.p;
  return FieldElement(std::move(v));
}

inline FieldElement mul(const FieldElement& a, const FieldElement& b, const FieldParams& ctx) {
  const std::size_t d = ctx.degree();
  const std::uint64_t p = ctx.p;
  std::vector<std::uint64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  // x^d == -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i - d + j] = (prod[i - d + j] + (p - c) * ctx.modulus[j]) % p;
    }
  }
  std::vector<Coeff> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<Coeff>(prod[i]);
  return FieldElement(std::move(v));
}

/// Square-and-multiply; pow(a, 0) is 1.
inline FieldElement pow(FieldElement base, std::uint64_t n, const FieldParams& ctx) {
  FieldElement acc = one(ctx);
  while (n > 0) {
    if (n & 1U) acc = mul(acc, base, ctx);
    n >>= 1U;
    if (n > 0) base = mul(base, base, ctx);
  }
  return acc;
}

/// Frobenius test z^q == z, which holds exactly on the subfield F_q.
inline bool in_subfield(const FieldElement& z, const FieldParams& ctx) {
  return pow(z, ctx.q, ctx) == z;
}

/// Elements are ordered by the base-p integer whose most significant digit is
/// the coefficient of x^{d-1}.
inline FieldElement element_at(const FieldParams& ctx, std::uint64_t index) {
  std::vector<Coeff> v(ctx.degree());
  for (auto& c : v) {
    c = static_cast<Coeff>(index % ctx.p);
    index /= ctx.p;
  }
  return FieldElement(std::move(v));
}

inline std::uint64_t index_of(const FieldElement& z, const FieldParams& ctx) {
  std::uint64_t index = 0;
  for (std::size_t i = z.size(); i-- > 0;) index = index * ctx.p + z[i];
  return index;
}

/// True iff g is nonzero and g^((q^2-1)/r) != 1 for every prime r | q^2-1.
inline bool has_full_order(const FieldElement& g, const FieldParams& ctx,
                           std::span<const std::uint64_t> order_primes) {
  if (g == zero(ctx)) return false;
  const FieldElement unit = one(ctx);
  const std::uint64_t order = ctx.group_order();
  for (const std::uint64_t r : order_primes) {
    if (pow(g, order / r, ctx) == unit) return false;
  }
  return true;
}

inline bool has_full_order(const FieldElement& g, const FieldParams& ctx) {
  const auto primes = distinct_prime_factors(ctx.group_order());
  return has_full_order(g, ctx, primes);
}

/// The index-th generator of the multiplicative group (0 is the first) in
/// element_at order. Reads only p, e, q and the modulus from ctx.
inline FieldElement find_generator(const FieldParams& ctx, std::uint64_t index = 0) {
  const auto primes = distinct_prime_factors(ctx.group_order());
  std::uint64_t seen = 0;
  for (std::uint64_t i = 1; i < ctx.size(); ++i) {
    FieldElement g = element_at(ctx, i);
    if (!has_full_order(g, ctx, primes)) continue;
    if (seen++ == index) return g;
  }
  if (seen > 0) {
    throw std::invalid_argument("generator index " + std::to_string(index) + " out of range; GF(" +
                                std::to_string(ctx.size()) + ") has " + std::to_string(seen) +
                                " generators");
  }
  throw InvariantViolation("no multiplicative generator found in GF(" +
                           std::to_string(ctx.size()) + ")");
}

namespace detail {

/// Remainder of f modulo the monic g, both low to high over Z_p.
inline bool divides(std::span<const Coeff> g, std::vector<std::uint64_t> f, std::uint64_t p) {
  const std::size_t k = g.size() - 1;
  for (std::size_t i = f.size() - 1; i >= k; --i) {
    const std::uint64_t c = f[i] % p;
    if (c != 0) {
      for (std::size_t j = 0; j <= k; ++j) {
        f[i - k + j] = (f[i - k + j] + (p - c) * g[j]) % p;
      }
    }
    if (i == k) break;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (f[i] % p != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Trial division of the monic polynomial f by every monic polynomial of
/// degree 1 .. deg(f)/2 over Z_p.
inline bool is_irreducible(std::span<const Coeff> f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0 || f[n] != 1) return false;
  const std::vector<std::uint64_t> fv(f.begin(), f.end());
  std::vector<Coeff> g;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    g.assign(k + 1, 0);
    g[k] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<Coeff>(r % p);
        r /= p;
      }
      if (detail::divides(g, fv, p)) return false;
    }
  }
  return true;
}

/// The rank-th monic polynomial of degree d in Conway's ordering: writing
/// f = x^d - c_{d-1} x^{d-1} + c_{d-2} x^{d-2} - ... + (-1)^d c_0, polynomials
/// are compared on (c_{d-1}, ..., c_0) lexicographically.
inline std::vector<Coeff> conway_ordered_monic(std::uint32_t p, std::size_t d, std::uint64_t rank) {
  std::vector<Coeff> f(d + 1, 0);
  f[d] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    const auto c = static_cast<Coeff>(rank % p);
    rank /= p;
    f[i] = ((d - i) % 2 == 0) ? c : (p - c) % p;
  }
  return f;
}

inline std::string format_polynomial(std::span<const Coeff> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Coeff c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

inline std::string to_string(const FieldElement& z) { return format_polynomial(z.coeffs()); }

namespace detail {

inline FieldParams bare_params(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp || pp->prime == 2 || q < 3) throw NotOddPrimePower(q);
  if (q > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("q too large");
  FieldParams ctx;
  ctx.p = static_cast<std::uint32_t>(pp->prime);
  ctx.e = pp->exponent;
  ctx.q = q;
  return ctx;
}

}  // namespace detail

/// First monic polynomial of degree 2e in Conway's ordering that is
/// irreducible and has x as a multiplicative generator.
inline std::vector<Coeff> find_modulus(std::uint64_t q) {
  FieldParams ctx = detail::bare_params(q);
  const std::size_t d = ctx.degree();
  const auto primes = distinct_prime_factors(ctx.group_order());
  for (std::uint64_t rank = 0; rank < ctx.size(); ++rank) {
    auto f = conway_ordered_monic(ctx.p, d, rank);
    if (f[0] == 0 || !is_irreducible(f, ctx.p)) continue;
    ctx.modulus = std::move(f);
    if (has_full_order(variable(ctx), ctx, primes)) return ctx.modulus;
  }
  throw InvariantViolation("no primitive modulus of degree " + std::to_string(d) + " over Z_" +
                           std::to_string(ctx.p));
}

/// Field with an explicit modulus, validated for degree, monicity and
/// irreducibility.
inline FieldParams make_field(std::uint64_t q, std::vector<Coeff> modulus,
                              std::uint64_t generator_index = 0) {
  FieldParams ctx = detail::bare_params(q);
  if (modulus.size() != ctx.degree() + 1) {
    throw std::invalid_argument("modulus must have degree " + std::to_string(ctx.degree()));
  }
  for (const Coeff c : modulus) {
    if (c >= ctx.p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, ctx.p)) {
    throw std::invalid_argument("modulus " + format_polynomial(modulus) + " is reducible over Z_" +
                                std::to_string(ctx.p));
  }
  ctx.modulus = std::move(modulus);
  ctx.theta = find_generator(ctx, generator_index);
  return ctx;
}

inline FieldParams make_field(std::uint64_t q, std::uint64_t generator_index = 0) {
  return make_field(q, find_modulus(q), generator_index);
}

}  // namespace sidon_c4
