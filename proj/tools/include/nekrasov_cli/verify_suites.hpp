#ifndef NEKRASOV_CLI_VERIFY_SUITES_HPP
#define NEKRASOV_CLI_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nekrasov::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// exp(f) = P, the column generating functions, four-way Q_n agreement,
/// boundary coefficients and the cross recursion, all up to n_max.
std::vector<CheckResult> run_identity_suite(std::uint32_t n_max);

/// Log-concavity and unimodality of Q_n rows, p(n) from 25 on, and the
/// binomial / divisor-power surrogate sums.
std::vector<CheckResult> run_logconcave_suite(std::uint32_t n_max);

/// Stirling row sums, Sibuya's inequality, the 2^{-t} decay bound, the shifted
/// constrained sums, the mode bound and log-concavity of q_coeffs.
std::vector<CheckResult> run_stirling_suite(std::uint32_t n_max);

inline constexpr std::uint32_t kDefaultIdentityNMax = 20;
inline constexpr std::uint32_t kDefaultLogconcaveNMax = 100;
inline constexpr std::uint32_t kDefaultStirlingNMax = 15;

}  // namespace nekrasov::cli

#endif  // NEKRASOV_CLI_VERIFY_SUITES_HPP
