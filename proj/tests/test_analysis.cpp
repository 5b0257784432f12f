#include "nekrasov/analysis.hpp"
#include "nekrasov/darcais.hpp"
#include "nekrasov/partitions.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/stirling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nekrasov;

namespace {

std::optional<std::size_t> violation(std::vector<Rational> v) {
  return first_log_concavity_violation(std::span<const Rational>(v));
}

}  // namespace

TEST(LogConcavity, Examples) {
  EXPECT_FALSE(violation({1, 2, 3}));
  EXPECT_EQ(violation({1, 1, 2}), 1u);
  EXPECT_FALSE(violation({3, Rational(29, 6), 2, Rational(1, 6)}));
  const std::vector<BigInt> ints{BigInt(1), BigInt(1), BigInt(2)};
  EXPECT_EQ(first_log_concavity_violation(std::span<const BigInt>(ints)), 1u);
}

TEST(Unimodal, Examples) {
  const auto a = check_unimodal(std::vector<Rational>{1, 3, 2});
  EXPECT_TRUE(a.unimodal);
  EXPECT_EQ(a.mode, 1u);
  EXPECT_FALSE(check_unimodal(std::vector<Rational>{2, 1, 2}).unimodal);
  EXPECT_EQ(check_unimodal(std::vector<Rational>{1, 4, 4, 1}).mode, 1u);
  EXPECT_TRUE(check_unimodal(q_via_recursion(10).coeffs).unimodal);
  EXPECT_THROW(check_unimodal(std::vector<Rational>{}), std::invalid_argument);
}

TEST(TailMonotone, Examples) {
  EXPECT_FALSE(tail_monotone_from(std::vector<Rational>{1, 2, 1, 2}, 1));
  const auto q50 = q_via_recursion(50).coeffs;
  EXPECT_EQ(static_cast<std::size_t>(std::ceil(std::sqrt(50.0) * std::log(50.0))), 28u);
  EXPECT_TRUE(tail_monotone_from(q50, 28));
  const auto u = check_unimodal(q50);
  EXPECT_TRUE(tail_monotone_from(q50, u.mode));
  EXPECT_EQ(monotone_tail_start(q50), u.mode);
}

TEST(LogConcavity, ImpliesUnimodalOnRows) {
  const DarcaisTable table(300);
  for (std::uint32_t n = 0; n <= 300; ++n) {
    const auto row = table.row(n).coeffs;
    ASSERT_FALSE(first_log_concavity_violation(std::span<const Rational>(row)).has_value()) << n;
    ASSERT_TRUE(check_unimodal(row).unimodal) << n;
  }
}

TEST(Scan, SmallTableEntries) {
  ScanOptions exact;
  exact.mode = ScanMode::exact;
  const std::size_t expected[] = {6, 21, 39, 73};
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const auto r = scan_conjecture(k, 100, exact);
    EXPECT_EQ(r.n0, expected[k - 2]) << k;
    EXPECT_EQ(r.certification, Certification::exact);
  }
  const auto none = scan_conjecture(2, 5, exact);
  EXPECT_FALSE(none.n0.has_value());
  EXPECT_EQ(none.certification, Certification::exact);
}

TEST(Scan, KTwoHoldsBeforeSix) {
  const auto c = series_power(f_series(7), 2);
  for (std::size_t n = 2; n < 6; ++n) EXPECT_GE(c[n] * c[n], c[n - 1] * c[n + 1]) << n;
  EXPECT_LT(c[6] * c[6], c[5] * c[7]);
}

TEST(Scan, ExactAndFloatAgree) {
  ScanOptions exact;
  exact.mode = ScanMode::exact;
  const ScanOptions adaptive;
  for (std::uint32_t k = 2; k <= 6; ++k) {
    for (std::size_t n_max : {20ul, 100ul, 300ul}) {
      const auto a = scan_conjecture(k, n_max, exact);
      const auto b = scan_conjecture(k, n_max, adaptive);
      ASSERT_EQ(a.n0, b.n0) << k << "," << n_max;
      ASSERT_EQ(b.certification, Certification::adaptive_float);
    }
  }
}

TEST(Scan, PrecisionEscalation) {
  ScanOptions options;
  options.start_precision = 8;
  const auto r = scan_conjecture(5, 200, options);
  EXPECT_EQ(r.n0, 73u);
  EXPECT_GT(r.max_precision_used, 8u);
}

TEST(Scan, UncertifiedWhenLadderIsExhausted) {
  ScanOptions options;
  options.start_precision = 4;
  options.precision_cap = 4;
  options.exact_fallback = 0;
  const auto r = scan_conjecture(5, 200, options);
  EXPECT_EQ(r.certification, Certification::uncertified);
  EXPECT_FALSE(r.n0.has_value());
  EXPECT_TRUE(r.uncertified_at.has_value());

  options.exact_fallback = 2048;
  const auto rescued = scan_conjecture(5, 200, options);
  EXPECT_EQ(rescued.n0, 73u);
  EXPECT_NE(rescued.certification, Certification::uncertified);
}

TEST(Scan, CustomSeries) {
  ScanOptions exact;
  exact.mode = ScanMode::exact;
  const auto one = scan_conjecture_custom("remark-series", 1, 20, exact);
  // 1, 3/2, 1: 9/4 >= 1 holds, then 1 < 3/2 * 3/2 fails at n = 3.
  EXPECT_EQ(one.n0, 3u);
  const auto a = scan_conjecture_custom("remark-series", 2, 200, exact);
  const auto b = scan_conjecture_custom("remark-series", 2, 200, ScanOptions{});
  EXPECT_EQ(a.n0, b.n0);
  EXPECT_NE(b.certification, Certification::uncertified);
  // exact oracle
  const auto c = series_power(custom_series("remark-series", 200), 2);
  std::optional<std::size_t> first;
  for (std::size_t n = 2; n < 200 && !first; ++n) {
    if (c[n] * c[n] < c[n - 1] * c[n + 1]) first = n;
  }
  EXPECT_EQ(a.n0, first);
}

TEST(Scan, RunScansKeepsOrder) {
  std::vector<ScanJob> jobs;
  for (std::uint32_t k : {6u, 2u, 4u}) jobs.push_back({"sigma-minus-one", k, 0});
  const auto reports = run_scans(jobs, ScanOptions{}, 3);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].k, 6u);
  EXPECT_EQ(reports[0].n0, 135u);
  EXPECT_EQ(reports[1].n0, 6u);
  EXPECT_EQ(reports[2].n0, 39u);
  EXPECT_EQ(reports[0].n_max, default_scan_n_max(6));
}

TEST(Scan, Arguments) {
  EXPECT_THROW(scan_conjecture(1, 10, ScanOptions{}), std::invalid_argument);
  EXPECT_EQ(parse_scan_mode("exact"), ScanMode::exact);
  EXPECT_EQ(parse_scan_mode("adaptive-float"), ScanMode::adaptive_float);
  EXPECT_THROW(parse_scan_mode("float"), std::invalid_argument);
  EXPECT_EQ(to_string(Certification::uncertified), "uncertified");
}

TEST(Ratios, PowerPrefixSum) {
  const auto small = power_sum_ratio(3, 9);
  EXPECT_LE(small.ratio.lo, small.ratio.hi);
  for (auto [k, n] : {std::pair{1u, 100ul}, std::pair{2u, 1000ul}}) {
    const auto r = power_sum_ratio(k, n);
    EXPECT_LE(r.ratio.lo, r.ratio.hi);
    EXPECT_LE(r.deviation_bound(), 5 * k * k * std::log(static_cast<double>(n)) / static_cast<double>(n));
  }
  EXPECT_THROW(power_sum_ratio(3, 8), PreconditionError);
}

TEST(Ratios, HardyRamanujan) {
  const auto one = hardy_ramanujan_ratio(1);
  EXPECT_LE(one.ratio.lo, one.ratio.hi);
  const auto r500 = hardy_ramanujan_ratio(500);
  EXPECT_GE(r500.ratio.lo, 0.9);
  EXPECT_LE(r500.ratio.hi, 1.1);
  double previous = 1e9;
  for (std::uint32_t n : {100u, 200u, 400u}) {
    const double d = hardy_ramanujan_ratio(n).deviation_bound();
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(Surrogates, Values) {
  EXPECT_EQ(a_tilde(28, 1), Rational(partition_count(27) + partition_count(26)));
  EXPECT_EQ(a_hat(28, 0), Rational(partition_count(28)));
  EXPECT_THROW(a_tilde(26, 1), std::invalid_argument);
  const auto seq = a_tilde_sequence(3, 27, 40);
  for (std::uint32_t n = 27; n <= 40; ++n) EXPECT_EQ(seq[n - 27], a_tilde(n, 3));
  const auto hat = a_hat_sequence(4, 27, 40);
  for (std::uint32_t n = 27; n <= 40; ++n) EXPECT_EQ(hat[n - 27], a_hat(n, 4));
}

TEST(Surrogates, LogConcave) {
  const auto tilde = a_tilde_sequence(3, 27, 300);
  EXPECT_FALSE(first_log_concavity_violation(std::span<const Rational>(tilde)).has_value());
  for (std::uint32_t k = 2; k <= 8; ++k) {
    const std::uint32_t last = std::min<std::uint32_t>(1u << k, 400);
    if (last < 29) continue;
    const auto hat = a_hat_sequence(k, 27, last);
    EXPECT_FALSE(first_log_concavity_violation(std::span<const Rational>(hat)).has_value()) << k;
  }
}

TEST(RowReport, Rows) {
  const auto ten = row_shape_report(10);
  EXPECT_FALSE(ten.first_violation.has_value());
  EXPECT_TRUE(ten.unimodal);
  const auto hundred = row_shape_report(100);
  EXPECT_LE(static_cast<double>(hundred.tail_start), std::sqrt(100.0) * std::log(100.0));
  EXPECT_NEAR(hundred.tail_scale, 46.05, 0.01);
  EXPECT_EQ(row_shape_report(3).mode, 1u);
}
