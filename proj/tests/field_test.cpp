#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "sidon_c4/field.hpp"
#include "sidon_c4/number_theory.hpp"

namespace sidon_c4 {
namespace {

// GF(9) with modulus x^2 - x - 1 = x^2 + 2x + 2 over Z_3.
FieldParams gf9() { return make_field(3, {2, 2, 1}); }

FieldElement elem(std::vector<Coeff> c) { return FieldElement(std::move(c)); }

TEST(NumberTheory, PrimePowerDecomposition) {
  EXPECT_EQ(as_prime_power(9), (PrimePower{3, 2}));
  EXPECT_EQ(as_prime_power(125), (PrimePower{5, 3}));
  EXPECT_EQ(as_prime_power(101), (PrimePower{101, 1}));
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_FALSE(as_prime_power(12));
  EXPECT_FALSE(is_odd_prime_power(4));
  EXPECT_FALSE(is_odd_prime_power(2));
  EXPECT_TRUE(is_odd_prime_power(27));
}

TEST(NumberTheory, OddPrimePowersUpTo31) {
  EXPECT_EQ(odd_prime_powers(3, 31),
            (std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31}));
}

TEST(NumberTheory, FactorizationOfGroupOrders) {
  for (std::uint64_t q = 3; q <= 101; ++q) {
    if (!is_odd_prime_power(q)) continue;
    const std::uint64_t n = q * q - 1;
    std::uint64_t product = 1;
    for (const auto& f : factorize(n)) {
      EXPECT_TRUE(is_prime(f.prime)) << f.prime;
      for (std::uint32_t i = 0; i < f.exponent; ++i) product *= f.prime;
    }
    EXPECT_EQ(product, n) << "q = " << q;
  }
}

TEST(NumberTheory, Isqrt) {
  for (std::uint64_t r = 0; r < 2000; ++r) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r > 0) {
      EXPECT_EQ(isqrt(r * r - 1), r - 1);
    }
  }
}

TEST(Field, MakeFieldRejectsNonOddPrimePowers) {
  for (const std::uint64_t q : {0, 1, 2, 4, 6, 8, 12, 15, 16, 100}) {
    EXPECT_THROW(make_field(q), NotOddPrimePower) << q;
  }
}

TEST(Field, DefaultGF9UsesModulusWithThetaX) {
  const auto ctx = make_field(3);
  EXPECT_EQ(ctx.p, 3U);
  EXPECT_EQ(ctx.e, 1U);
  EXPECT_EQ(ctx.modulus, (std::vector<Coeff>{2, 2, 1}));
  EXPECT_EQ(ctx.theta, elem({0, 1}));
}

TEST(Field, GF81HasDegreeFourModulus) {
  const auto ctx = make_field(9);
  EXPECT_EQ(ctx.p, 3U);
  EXPECT_EQ(ctx.e, 2U);
  EXPECT_EQ(ctx.modulus.size(), 5U);
  EXPECT_EQ(ctx.modulus.back(), 1U);
  EXPECT_TRUE(is_irreducible(ctx.modulus, 3));
  EXPECT_EQ(pow(ctx.theta, 80, ctx), one(ctx));
}

TEST(Field, QuadraticIrreducibilityMatchesRootTest) {
  // A monic quadratic is irreducible iff it has no root.
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    for (Coeff c0 = 0; c0 < p; ++c0) {
      for (Coeff c1 = 0; c1 < p; ++c1) {
        bool has_root = false;
        for (std::uint64_t x = 0; x < p; ++x) has_root |= (x * x + c1 * x + c0) % p == 0;
        EXPECT_EQ(is_irreducible(std::vector<Coeff>{c0, c1, 1}, p), !has_root)
            << "p=" << p << " c0=" << c0 << " c1=" << c1;
      }
    }
  }
}

TEST(Field, IrreducibleCountsMatchGaussFormula) {
  // Number of monic irreducibles of degree 4 over Z_3 is (3^4 - 3^2) / 4 = 18,
  // of degree 2 over Z_5 is (25 - 5) / 2 = 10.
  const auto count = [](std::uint32_t p, std::size_t d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    int irreducible = 0;
    for (std::uint64_t r = 0; r < total; ++r) {
      irreducible += is_irreducible(conway_ordered_monic(p, d, r), p) ? 1 : 0;
    }
    return irreducible;
  };
  EXPECT_EQ(count(3, 4), 18);
  EXPECT_EQ(count(5, 2), 10);
}

TEST(Field, MulExamplesInGF9) {
  const auto ctx = gf9();
  const auto theta = variable(ctx);
  EXPECT_EQ(mul(theta, theta, ctx), elem({1, 1}));
  EXPECT_EQ(pow(theta, 4, ctx), elem({2, 0}));
  FieldElement acc = one(ctx);
  for (int i = 0; i < 4; ++i) acc = mul(acc, theta, ctx);
  EXPECT_EQ(acc, constant(ctx, 2));
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    const auto a = element_at(ctx, i);
    EXPECT_EQ(mul(a, one(ctx), ctx), a);
  }
}

TEST(Field, PowExamplesInGF9) {
  const auto ctx = gf9();
  EXPECT_EQ(pow(ctx.theta, 0, ctx), one(ctx));
  EXPECT_EQ(pow(ctx.theta, 8, ctx), one(ctx));
  EXPECT_EQ(pow(ctx.theta, 7, ctx), elem({2, 1}));
  EXPECT_EQ(pow(ctx.theta, 5, ctx), elem({0, 2}));
  EXPECT_EQ(pow(ctx.theta, 6, ctx), elem({2, 2}));
}

TEST(Field, FindGeneratorSkipsXWhenItHasOrderFour) {
  const auto ctx = make_field(3, {1, 0, 1});  // x^2 + 1
  const auto x = variable(ctx);
  EXPECT_EQ(pow(x, 4, ctx), one(ctx));
  EXPECT_FALSE(has_full_order(x, ctx));
  EXPECT_NE(ctx.theta, x);
  EXPECT_EQ(ctx.theta, elem({1, 1}));
}

TEST(Field, GeneratorIndexSelectsLaterGenerators) {
  // GF(9)* has phi(8) = 4 generators.
  const auto base = gf9();
  std::vector<FieldElement> seen;
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto g = find_generator(base, i);
    EXPECT_TRUE(has_full_order(g, base));
    for (const auto& s : seen) EXPECT_NE(s, g);
    seen.push_back(g);
  }
  EXPECT_THROW(find_generator(base, 4), std::invalid_argument);
}

TEST(Field, MakeFieldRejectsReducibleModulus) {
  EXPECT_THROW(make_field(3, {2, 0, 1}), std::invalid_argument);  // x^2 - 1
  EXPECT_THROW(make_field(3, {1, 1}), std::invalid_argument);     // wrong degree
}

TEST(Field, InSubfieldExamples) {
  const auto ctx = gf9();
  EXPECT_TRUE(in_subfield(zero(ctx), ctx));
  EXPECT_FALSE(in_subfield(ctx.theta, ctx));
  EXPECT_TRUE(in_subfield(constant(ctx, 2), ctx));
}

TEST(Field, SubfieldHasExactlyQElements) {
  for (const std::uint64_t q : odd_prime_powers(3, 13)) {
    const auto ctx = make_field(q);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < ctx.size(); ++i) count += in_subfield(element_at(ctx, i), ctx) ? 1 : 0;
    EXPECT_EQ(count, q) << "q = " << q;
    if (ctx.e == 1) {
      for (std::uint64_t i = 0; i < ctx.size(); ++i) {
        const auto z = element_at(ctx, i);
        EXPECT_EQ(in_subfield(z, ctx), z[1] == 0);
      }
    }
  }
}

TEST(Field, GeneratorHasGroupOrder) {
  for (const std::uint64_t q : odd_prime_powers(3, 49)) {
    const auto ctx = make_field(q);
    EXPECT_EQ(pow(ctx.theta, ctx.group_order(), ctx), one(ctx)) << q;
    EXPECT_TRUE(has_full_order(ctx.theta, ctx)) << q;
  }
}

TEST(Field, RingLawsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (const std::uint64_t q : {3ULL, 9ULL, 25ULL, 27ULL, 31ULL}) {
    const auto ctx = make_field(q);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = element_at(ctx, pick(rng));
      const auto b = element_at(ctx, pick(rng));
      const auto c = element_at(ctx, pick(rng));
      EXPECT_EQ(mul(a, b, ctx), mul(b, a, ctx));
      EXPECT_EQ(mul(a, add(b, c, ctx), ctx), add(mul(a, b, ctx), mul(a, c, ctx), ctx));
      EXPECT_EQ(mul(mul(a, b, ctx), c, ctx), mul(a, mul(b, c, ctx), ctx));
      EXPECT_EQ(sub(add(a, b, ctx), b, ctx), a);
    }
  }
}

TEST(Field, PowIsPeriodicInGroupOrder) {
  std::mt19937_64 rng(11);
  for (const std::uint64_t q : {5ULL, 9ULL, 27ULL}) {
    const auto ctx = make_field(q);
    std::uniform_int_distribution<std::uint64_t> pick(0, 1'000'000);
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t m = pick(rng);
      EXPECT_EQ(pow(ctx.theta, m, ctx), pow(ctx.theta, m % ctx.group_order(), ctx));
    }
  }
}

TEST(Field, ElementIndexRoundTrips) {
  const auto ctx = make_field(9);
  for (std::uint64_t i = 0; i < ctx.size(); i += 7) EXPECT_EQ(index_of(element_at(ctx, i), ctx), i);
}

TEST(Field, FormatPolynomial) {
  EXPECT_EQ(format_polynomial(std::vector<Coeff>{2, 2, 1}), "x^2 + 2x + 2");
  EXPECT_EQ(format_polynomial(std::vector<Coeff>{0, 1}), "x");
  EXPECT_EQ(format_polynomial(std::vector<Coeff>{0, 0}), "0");
}

}  // namespace
}  // namespace sidon_c4
