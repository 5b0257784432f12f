#ifndef NEKRASOV_SERIES_HPP
#define NEKRASOV_SERIES_HPP

#include "nekrasov/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nekrasov {

/// Truncated power series with exact rational coefficients c_0..c_N.
/// Arithmetic never reads beyond the truncation order N.
class RationalSeries {
 public:
  /// The zero series truncated at `order`.
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit RationalSeries(std::vector<Rational> coeffs);
  RationalSeries(std::initializer_list<Rational> coeffs)
      : RationalSeries(std::vector<Rational>(coeffs)) {}

  static RationalSeries one(std::size_t order);
  static RationalSeries monomial(std::size_t degree, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  void set(std::size_t i, Rational value);
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Same coefficients truncated at a smaller (or zero-extended to a larger) order.
  RationalSeries truncated(std::size_t order) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// sigma_{-1}(n) = sum_{d | n} 1/d = sigma(n)/n. Throws std::invalid_argument for n = 0.
Rational sigma_minus1(std::uint64_t n);

/// sigma(1), ..., sigma(n) (index 0 holds 0), by a divisor sieve.
std::vector<std::uint64_t> divisor_sums(std::size_t n);

/// f(q) = sum_{n>=1} sigma_{-1}(n) q^n truncated at N.
RationalSeries f_series(std::size_t order);

/// Cauchy product truncated at the common order.
/// Throws std::invalid_argument when the truncation orders differ.
RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b);

/// s^k by iterated multiplication; s^0 is the constant series 1.
RationalSeries series_power(const RationalSeries& s, std::uint32_t k);

/// s^0, s^1, ..., s^k.
std::vector<RationalSeries> series_powers(const RationalSeries& s, std::uint32_t k);

/// prod_{m>=1} (1 - q^m)^{-1} truncated at N, built by multiplying the
/// truncated geometric factors. Coefficient n is p(n).
RationalSeries partition_series(std::size_t order);

/// exp(s) via n e_n = sum_{j=1..n} j s_j e_{n-j}.
/// Throws std::invalid_argument if s has a nonzero constant term.
RationalSeries series_exp(const RationalSeries& s);

/// Named generating rules for base series. Built in: "sigma-minus-one"
/// (the divisor series f) and "remark-series" (z/(1-z) + z^2/(2(1-z^2))).
class SeriesRegistry {
 public:
  using Rule = std::function<RationalSeries(std::size_t order)>;

  static SeriesRegistry& instance();

  /// Replaces any rule registered under the same name.
  void add(std::string name, Rule rule);
  bool contains(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown rule name.
  RationalSeries make(std::string_view name, std::size_t order) const;
  std::vector<std::string> names() const;

 private:
  SeriesRegistry();
  std::vector<std::pair<std::string, Rule>> rules_;
};

RationalSeries custom_series(std::string_view rule, std::size_t order);

/// Exact integer image of a rational series: coeff_i = numerators[i] / denominator,
/// with one common denominator. Convolution on this form avoids a gcd per term.
struct ScaledSeries {
  std::vector<BigInt> numerators;
  BigInt denominator{1};

  static ScaledSeries from(const RationalSeries& s);
  RationalSeries to_rational() const;
  /// Divides numerators and denominator by their common content.
  void reduce();
  std::size_t order() const noexcept { return numerators.size() - 1; }
};

/// out[n] = sum_{m} a[m] * b[n - m] for n <= order, skipping leading zeros.
std::vector<BigInt> integer_convolution(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::size_t order);

}  // namespace nekrasov

#endif  // NEKRASOV_SERIES_HPP
