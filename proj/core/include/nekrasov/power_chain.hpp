#ifndef NEKRASOV_POWER_CHAIN_HPP
#define NEKRASOV_POWER_CHAIN_HPP

#include "nekrasov/enclosure.hpp"
#include "nekrasov/rational.hpp"
#include "nekrasov/series.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace nekrasov {

/// Outcome of deciding c_n^2 >= c_{n-1} c_{n+1} for one triple.
enum class TripleVerdict { holds, violated, ambiguous };

/// Coefficients 0..capacity-1 of base^1, ..., base^k, computed online in
/// blocks so a scan that stops early never pays for the full truncation.
/// Every power is extended one block at a time because the coefficients of
/// base^j in a block depend on those of base^{j-1} in the same block.
class PowerChain {
 public:
  virtual ~PowerChain() = default;

  std::uint32_t power() const noexcept { return power_; }
  std::size_t capacity() const noexcept { return capacity_; }
  /// Coefficients [0, computed()) of every power are available.
  std::size_t computed() const noexcept { return computed_; }

  /// Makes coefficient n of the top power available. Throws std::out_of_range
  /// if n >= capacity().
  void extend_to(std::size_t n);

  /// Decides the log-concavity inequality for the top power at n >= 1,
  /// extending the chain to n + 1 if necessary.
  TripleVerdict log_concavity_at(std::size_t n);

  /// Working precision in bits; 0 means exact.
  virtual unsigned precision_bits() const noexcept = 0;

 protected:
  PowerChain(std::uint32_t power, std::size_t capacity);

  /// Computes coefficients [lo, hi) of base^j (j >= 2) from base^{j-1}.
  virtual void compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) = 0;
  virtual TripleVerdict classify(std::size_t n) const = 0;

 private:
  std::uint32_t power_;
  std::size_t capacity_;
  std::size_t computed_ = 0;
};

/// Exact chain over integers: base scaled by the lcm D of its denominators,
/// so base^j is stored as integers scaled by D^j. Log-concavity is invariant
/// under that scaling.
class ExactPowerChain final : public PowerChain {
 public:
  ExactPowerChain(const RationalSeries& base, std::uint32_t power, std::size_t capacity);

  unsigned precision_bits() const noexcept override { return 0; }
  /// Coefficient n of base^power, exactly.
  Rational value(std::size_t n);

 protected:
  void compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) override;
  TripleVerdict classify(std::size_t n) const override;

 private:
  const std::vector<BigInt>& top() const { return powers_.back(); }
  BigInt scale_;
  std::vector<std::vector<BigInt>> powers_;  // powers_[j-1] holds base^j
};

/// Directed-rounding double enclosures of every coefficient. The base series
/// must be nonnegative, which keeps every lower/upper product monotone.
class DoubleIntervalPowerChain final : public PowerChain {
 public:
  DoubleIntervalPowerChain(const RationalSeries& base, std::uint32_t power, std::size_t capacity);

  unsigned precision_bits() const noexcept override { return 53; }
  Interval enclosure(std::size_t n);

 protected:
  void compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) override;
  TripleVerdict classify(std::size_t n) const override;

 private:
  std::vector<std::vector<double>> lo_;
  std::vector<std::vector<double>> hi_;
};

/// MPFR enclosures at an arbitrary working precision.
class MpfrIntervalPowerChain final : public PowerChain {
 public:
  MpfrIntervalPowerChain(const RationalSeries& base, std::uint32_t power, std::size_t capacity,
                         unsigned precision);

  unsigned precision_bits() const noexcept override { return precision_; }
  std::pair<BigFloat, BigFloat> enclosure(std::size_t n);

 protected:
  void compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) override;
  TripleVerdict classify(std::size_t n) const override;

 private:
  unsigned precision_;
  std::vector<std::vector<BigFloat>> lo_;
  std::vector<std::vector<BigFloat>> hi_;
};

namespace kernels {

/// out[n] = sum_{m <= n} prev[m] * base[n - m] for n in [lo, hi), under the
/// caller's rounding mode. Partial sums are taken over chunks of m and then
/// combined, which keeps the accumulated rounding error near
/// (chunk + n / chunk) ulps instead of n ulps.
void convolve_block(double* out, std::size_t lo, std::size_t hi, const double* prev,
                    const double* base, std::size_t prev_first_nonzero);

}  // namespace kernels

}  // namespace nekrasov

#endif  // NEKRASOV_POWER_CHAIN_HPP
