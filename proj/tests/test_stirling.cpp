#include "nekrasov/analysis.hpp"
#include "nekrasov/darcais.hpp"
#include "nekrasov/partitions.hpp"
#include "nekrasov/stirling.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nekrasov;

namespace {

std::vector<std::uint32_t> counts_of(const MultiplicityVector& k_vec) {
  std::vector<std::uint32_t> out;
  for (const auto& e : k_vec.entries()) out.push_back(e.count);
  return out;
}

}  // namespace

TEST(Stirling, Examples) {
  for (std::uint32_t n = 0; n <= 12; ++n) EXPECT_EQ(stirling_unsigned(n, n), 1);
  EXPECT_EQ(stirling_unsigned(4, 2), 11);
  EXPECT_EQ(stirling_unsigned(5, 1), 24);
  EXPECT_THROW(stirling_unsigned(3, 5), std::out_of_range);
  const StirlingTable table(5);
  EXPECT_THROW(table(6, 1), std::out_of_range);
}

TEST(Stirling, RowSumsAreFactorials) {
  const StirlingTable table(60);
  for (std::uint32_t n = 0; n <= 60; ++n) {
    BigInt sum = 0;
    for (const auto& v : table.row(n)) sum += v;
    ASSERT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Stirling, MatchesRisingFactorialAndPermutations) {
  const StirlingTable table(25);
  for (std::uint32_t n = 0; n <= 25; ++n) {
    const auto expected = oracle::rising_factorial_coeffs(n);
    for (std::uint32_t m = 0; m <= n; ++m) ASSERT_EQ(table(n, m), expected[m]) << n << "," << m;
  }
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto by_cycles = oracle::stirling_row_by_permutations(n);
    for (std::uint32_t m = 0; m <= n; ++m) ASSERT_EQ(table(n, m), by_cycles[m]);
  }
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(1), 1);
  EXPECT_EQ(harmonic(3), Rational(11, 6));
  EXPECT_EQ(harmonic(30), oracle::harmonic(30));
  EXPECT_EQ(harmonic_ceiling(1), 1u);
  EXPECT_EQ(harmonic_ceiling(3), 2u);
  EXPECT_EQ(harmonic_ceiling(4), 3u);  // 25/12
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(8), 3u);
  EXPECT_EQ(ceil_log2(9), 4u);
}

TEST(Sibuya, Examples) {
  const StirlingTable table(50);
  const auto r = sibuya_check(table, 4, 2);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.ratio, Rational(11, 6));
  EXPECT_EQ(r.middle, Rational(11, 6));
  const auto two = sibuya_check(table, 2, 2);
  EXPECT_TRUE(two.holds());
  EXPECT_EQ(two.ratio, 1);
  EXPECT_EQ(two.outer, 1);
  for (std::uint32_t n = 2; n <= 50; ++n) EXPECT_TRUE(sibuya_check(table, n, n).holds()) << n;
}

TEST(Sibuya, HoldsUpTo150) {
  const StirlingTable table(150);
  for (std::uint32_t n = 2; n <= 150; ++n) {
    for (std::uint32_t m = 2; m <= n; ++m) ASSERT_TRUE(sibuya_check(table, n, m).holds()) << n << "," << m;
  }
}

TEST(StirlingDecay, Examples) {
  const StirlingTable table(61);
  EXPECT_TRUE(stirling_ratio_decay_check(table, 20, 9, 0));
  EXPECT_TRUE(stirling_ratio_decay_check(table, 20, 9, 3));
  EXPECT_TRUE(stirling_ratio_decay_check(table, 50, 11, 5));
  EXPECT_THROW(stirling_ratio_decay_check(table, 20, 8, 1), PreconditionError);
  EXPECT_THROW(stirling_ratio_decay_check(table, 20, 9, 12), std::out_of_range);
}

TEST(QCoeffs, Examples) {
  EXPECT_EQ(q_coeffs(MultiplicityVector{{1, 1}}), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(q_coeffs(MultiplicityVector{{1, 2}}), (std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)}));
  std::vector<Rational> sum(4, Rational(0));
  for (const auto& lambda : Partitions(3)) {
    const auto q = q_coeffs(multiplicities(lambda));
    for (std::size_t i = 0; i < q.size(); ++i) sum[i] += q[i];
  }
  EXPECT_EQ(sum, (std::vector<Rational>{3, Rational(29, 6), 2, Rational(1, 6)}));
}

TEST(QCoeffs, MatchesSymbolicExpansion) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (const auto& lambda : Partitions(n)) {
      const auto k_vec = multiplicities(lambda);
      oracle::Poly expected{Rational(1)};
      for (const auto& e : k_vec.entries()) expected = oracle::poly_mul(expected, oracle::binom_z_plus(e.count));
      ASSERT_EQ(q_coeffs(k_vec), expected);
    }
  }
}

TEST(ConstrainedSums, DynamicProgramMatchesTupleEnumeration) {
  const StirlingTable table(13);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (const auto& lambda : Partitions(n)) {
      const auto k_vec = multiplicities(lambda);
      if (k_vec.total_count() > 12) continue;
      const auto sums = constrained_stirling_sums(k_vec, table);
      for (std::uint64_t l = 0; l < sums.size(); ++l) {
        ASSERT_EQ(sums[l], oracle::constrained_sum_bruteforce(counts_of(k_vec), l));
      }
    }
  }
}

TEST(ShiftedConstrainedSums, HoldForAllPartitionsUpTo18) {
  const StirlingTable table(19);
  for (std::uint32_t n = 2; n <= 18; ++n) {
    for (const auto& lambda : Partitions(n)) {
      const auto r = shifted_sum_check(multiplicities(lambda), n, table);
      ASSERT_TRUE(r.holds) << n;
      ASSERT_EQ(r.r, ceil_log2(n));
    }
  }
}

TEST(ShiftedConstrainedSums, ExplicitParameters) {
  const StirlingTable table(10);
  // n = 4, lambda = (1,1,1,1): r = 2, s = 2 ceil(H_4) + 2 + 1 = 9 > 4 so lhs = 0.
  const auto r = shifted_sum_check(MultiplicityVector{{1, 4}}, 4, table);
  EXPECT_EQ(r.r, 2u);
  EXPECT_EQ(r.s, 9u);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_TRUE(r.holds);
  EXPECT_THROW(shifted_sum_check(MultiplicityVector{{1, 1}}, 1, table), PreconditionError);
}

TEST(ModeBound, HoldsAndCoefficientsAreLogConcaveUpTo18) {
  const StirlingTable table(19);
  for (std::uint32_t n = 2; n <= 18; ++n) {
    for (const auto& lambda : Partitions(n)) {
      const auto k_vec = multiplicities(lambda);
      const auto m = mode_bound_check(k_vec, n, table);
      ASSERT_TRUE(m.holds);
      const auto q = q_coeffs(k_vec, table);
      ASSERT_FALSE(first_log_concavity_violation(std::span<const Rational>(q)).has_value());
      const auto u = check_unimodal(q);
      ASSERT_TRUE(u.unimodal);
      ASSERT_EQ(u.mode, m.mode);
    }
  }
}
