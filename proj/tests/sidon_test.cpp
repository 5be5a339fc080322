#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "sidon_c4/field.hpp"
#include "sidon_c4/number_theory.hpp"
#include "sidon_c4/sidon.hpp"

namespace sidon_c4 {
namespace {

TEST(BoseChowla, QEquals3) {
  const auto A = build_bose_chowla(make_field(3));
  EXPECT_EQ(A.n, 8U);
  EXPECT_EQ(A.elements, (std::vector<Residue>{1, 2, 7}));
  EXPECT_EQ(A.t_even, 1U);
  EXPECT_EQ(even_count(A), 1U);
}

TEST(BoseChowla, SizeAndMembershipOfOne) {
  for (const std::uint64_t q : odd_prime_powers(3, 49)) {
    const auto A = build_bose_chowla(make_field(q));
    EXPECT_EQ(A.size(), q);
    EXPECT_TRUE(A.contains(1));
    EXPECT_LE(A.t_even, q);
    EXPECT_TRUE(std::is_sorted(A.elements.begin(), A.elements.end()));
  }
}

TEST(BoseChowla, EveryGeneratorGivesASidonSet) {
  const auto base = make_field(5);
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto ctx = make_field(5, base.modulus, idx);
    const auto A = build_bose_chowla(ctx);
    EXPECT_EQ(A.size(), 5U);
    EXPECT_TRUE(verify_sidon(A));
  }
}

TEST(BoseChowla, NonGeneratorThetaIsRejected) {
  auto ctx = make_field(3, {1, 0, 1});
  ctx.theta = variable(ctx);  // order 4, so A(q, theta) comes out wrong-sized
  EXPECT_THROW(build_bose_chowla(ctx), SizeMismatch);
}

TEST(VerifySidon, Examples) {
  EXPECT_TRUE(verify_sidon(make_residue_set(8, {1, 2, 7})));
  EXPECT_FALSE(verify_sidon(make_residue_set(8, {0, 1, 2})));
  EXPECT_TRUE(verify_sidon(make_residue_set(8, {5})));
}

TEST(DifferenceSet, QEquals3) {
  const auto A = build_bose_chowla(make_field(3));
  const auto D = difference_set(A);
  EXPECT_EQ(D.missing, (std::vector<Residue>{4}));
  EXPECT_TRUE(D.contains(0));
  EXPECT_EQ(D.size(), 7U);
}

TEST(DifferenceSet, MissesExactlyTheMultiplesOfQPlusOne) {
  for (const std::uint64_t q : odd_prime_powers(3, 49)) {
    const auto D = difference_set(build_bose_chowla(make_field(q)));
    EXPECT_EQ(D.missing.size(), q - 2);
    EXPECT_EQ(D.size(), q * (q - 1) + 1);
    EXPECT_TRUE(D.contains(0));
  }
}

TEST(DifferenceSet, WrongComplementRaises) {
  // {0,1,3,9,20} in Z_24 is Sidon but A - A misses {10, 12, 14}, not {6, 12, 18}.
  const auto A = make_residue_set(24, {0, 1, 3, 9, 20});
  ASSERT_TRUE(verify_sidon(A));
  EXPECT_THROW(difference_set(A), LemmaViolation);
}

TEST(EvenCount, HalvingCongruenceSolutions) {
  // 2x = a (mod q^2 - 1) has two solutions for even a and none for odd a.
  for (const std::uint64_t q : odd_prime_powers(3, 31)) {
    const auto A = build_bose_chowla(make_field(q));
    std::uint64_t solvable = 0;
    for (const Residue a : A.elements) {
      std::uint64_t solutions = 0;
      for (std::uint64_t x = 0; x < A.n; ++x) solutions += (2 * x) % A.n == a ? 1 : 0;
      EXPECT_EQ(solutions, a % 2 == 0 ? 2U : 0U) << "q = " << q << " a = " << a;
      solvable += solutions > 0 ? 1 : 0;
    }
    EXPECT_EQ(solvable, A.t_even);
  }
}

TEST(EvenCount, NearHalfOfQ) {
  for (const std::uint64_t q : odd_prime_powers(3, 101)) {
    const auto A = build_bose_chowla(make_field(q));
    const double deviation = std::abs(static_cast<double>(A.t_even) - q / 2.0);
    EXPECT_LE(deviation, 2.0 * std::pow(static_cast<double>(q), 0.75)) << "q = " << q;
  }
}

TEST(SidonSerialization, OneResiduePerLine) {
  std::ostringstream os;
  write_sidon_set(os, build_bose_chowla(make_field(3)));
  EXPECT_EQ(os.str(), "1\n2\n7\n");
}

}  // namespace
}  // namespace sidon_c4
