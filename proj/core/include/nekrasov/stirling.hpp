#ifndef NEKRASOV_STIRLING_HPP
#define NEKRASOV_STIRLING_HPP

#include "nekrasov/partitions.hpp"
#include "nekrasov/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nekrasov {

/// Raised when a check's mathematical precondition fails, as opposed to an
/// index being out of range (std::out_of_range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unsigned Stirling numbers of the first kind [n m], 0 <= m <= n <= n_max:
/// sum_m [n m] t^m = t (t+1) ... (t+n-1). Immutable once built.
class StirlingTable {
 public:
  explicit StirlingTable(std::uint32_t n_max);

  std::uint32_t n_max() const noexcept { return static_cast<std::uint32_t>(rows_.size() - 1); }
  /// Throws std::out_of_range unless m <= n <= n_max.
  const BigInt& operator()(std::uint32_t n, std::uint32_t m) const;
  const std::vector<BigInt>& row(std::uint32_t n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling_unsigned(std::uint32_t n, std::uint32_t m);

/// H_n = sum_{i=1..n} 1/i. Throws std::invalid_argument for n = 0.
Rational harmonic(std::uint32_t n);

/// The smallest integer >= H_n, decided exactly.
std::uint32_t harmonic_ceiling(std::uint32_t n);

struct SibuyaResult {
  Rational ratio;   // [n m] / [n m-1]
  Rational middle;  // (n-m+1) H_{n-1} / ((n-1)(m-1))
  Rational outer;   // H_{n-1} / (m-1)
  bool first_holds = false;
  bool second_holds = false;
  bool holds() const noexcept { return first_holds && second_holds; }
};

/// Evaluates [n m]/[n m-1] <= (n-m+1) H_{n-1}/((n-1)(m-1)) <= H_{n-1}/(m-1)
/// exactly. Requires 2 <= m <= n <= table.n_max(); throws PreconditionError.
SibuyaResult sibuya_check(const StirlingTable& table, std::uint32_t n, std::uint32_t m);

/// Verifies [n+1, m+t+1] <= 2^{-t} [n+1, m+1]. Throws PreconditionError if
/// m < 2 H_n + 1 and std::out_of_range if m + t > n or n + 1 > table.n_max().
bool stirling_ratio_decay_check(const StirlingTable& table, std::uint32_t n, std::uint32_t m,
                                std::uint32_t t);

/// Coefficients q_0..q_K (K = sum_j k_j) of prod_j binom(k_j + z, k_j), via
/// q_l = C0 * sum_{sum l_j = l, l_j <= k_j} prod_j [k_j+1, l_j+1] with
/// C0 = prod_j 1/k_j!. The table must reach max_j k_j + 1.
std::vector<Rational> q_coeffs(const MultiplicityVector& k_vec, const StirlingTable& table);
std::vector<Rational> q_coeffs(const MultiplicityVector& k_vec);

/// Coefficients of prod_j sum_{l <= k_j} [k_j+1, l+1] z^l, i.e. every
/// constrained Stirling sum at once (index = total l).
std::vector<BigInt> constrained_stirling_sums(const MultiplicityVector& k_vec,
                                              const StirlingTable& table);

struct ShiftedSumResult {
  std::uint64_t r = 0;  // ceil(log2 n)
  std::uint64_t s = 0;  // sum_j s_j
  BigInt lhs;           // constrained sum at total s
  BigInt rhs;           // constrained sum at total s - r
  bool holds = false;
};

/// s_j = 2 ceil(H_{k_j}) + r + 1 for k_j != 0; checks lhs <= rhs. n >= 2 is
/// the size of the originating partition (taken explicitly).
ShiftedSumResult shifted_sum_check(const MultiplicityVector& k_vec, std::uint64_t n,
                            const StirlingTable& table);

struct ModeBound {
  std::size_t mode = 0;  // leftmost argmax of q_coeffs
  std::uint64_t s = 0;
  bool holds = false;
};

ModeBound mode_bound_check(const MultiplicityVector& k_vec, std::uint64_t n,
                           const StirlingTable& table);

/// ceil(log2 n) for n >= 1.
std::uint64_t ceil_log2(std::uint64_t n);

}  // namespace nekrasov

#endif  // NEKRASOV_STIRLING_HPP
