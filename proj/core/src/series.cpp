#include "nekrasov/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nekrasov {

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

RationalSeries RationalSeries::one(std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

RationalSeries RationalSeries::monomial(std::size_t degree, std::size_t order) {
  RationalSeries s(order);
  if (degree <= order) s.coeffs_[degree] = 1;
  return s;
}

void RationalSeries::set(std::size_t i, Rational value) {
  value.canonicalize();
  coeffs_.at(i) = std::move(value);
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
  RationalSeries out(order);
  std::copy_n(coeffs_.begin(), std::min(order + 1, coeffs_.size()), out.coeffs_.begin());
  return out;
}

std::vector<std::uint64_t> divisor_sums(std::size_t n) {
  std::vector<std::uint64_t> sigma(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t m = d; m <= n; m += d) sigma[m] += d;
  }
  return sigma;
}

Rational sigma_minus1(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_{-1} is defined for n >= 1");
  std::uint64_t sigma = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      sigma += d;
      if (d != n / d) sigma += n / d;
    }
  }
  Rational r(BigInt(static_cast<unsigned long>(sigma)), BigInt(static_cast<unsigned long>(n)));
  r.canonicalize();
  return r;
}

RationalSeries f_series(std::size_t order) {
  const auto sigma = divisor_sums(order);
  RationalSeries f(order);
  for (std::size_t n = 1; n <= order; ++n) {
    f.set(n, Rational(BigInt(static_cast<unsigned long>(sigma[n])),
                      BigInt(static_cast<unsigned long>(n))));
  }
  return f;
}

ScaledSeries ScaledSeries::from(const RationalSeries& s) {
  ScaledSeries out;
  for (const auto& c : s.coeffs()) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  out.numerators.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) {
    BigInt scaled = out.denominator / c.get_den();
    scaled *= c.get_num();
    out.numerators.push_back(std::move(scaled));
  }
  return out;
}

RationalSeries ScaledSeries::to_rational() const {
  std::vector<Rational> coeffs;
  coeffs.reserve(numerators.size());
  for (const auto& num : numerators) {
    Rational r(num, denominator);
    r.canonicalize();
    coeffs.push_back(std::move(r));
  }
  return RationalSeries(std::move(coeffs));
}

void ScaledSeries::reduce() {
  BigInt g = denominator;
  for (const auto& num : numerators) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 1) return;
  for (auto& num : numerators) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(denominator.get_mpz_t(), denominator.get_mpz_t(), g.get_mpz_t());
}

std::vector<BigInt> integer_convolution(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::size_t order) {
  std::vector<BigInt> out(order + 1);
  const auto first_nonzero = [](std::span<const BigInt> v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    return i;
  };
  const std::size_t a0 = first_nonzero(a);
  const std::size_t b0 = first_nonzero(b);
  const std::size_t a_end = std::min(a.size(), order + 1);
  for (std::size_t m = a0; m < a_end; ++m) {
    if (a[m] == 0) continue;
    const std::size_t n_end = std::min(order + 1, m + b.size());
    for (std::size_t n = m + b0; n < n_end; ++n) {
      mpz_addmul(out[n].get_mpz_t(), a[m].get_mpz_t(), b[n - m].get_mpz_t());
    }
  }
  return out;
}

RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series_multiply: truncation orders differ (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                                ")");
  }
  const auto sa = ScaledSeries::from(a);
  const auto sb = ScaledSeries::from(b);
  ScaledSeries product;
  product.numerators = integer_convolution(sa.numerators, sb.numerators, a.order());
  product.denominator = sa.denominator * sb.denominator;
  return product.to_rational();
}

RationalSeries series_power(const RationalSeries& s, std::uint32_t k) {
  auto result = RationalSeries::one(s.order());
  for (std::uint32_t i = 0; i < k; ++i) result = series_multiply(result, s);
  return result;
}

std::vector<RationalSeries> series_powers(const RationalSeries& s, std::uint32_t k) {
  std::vector<RationalSeries> powers;
  powers.reserve(k + 1);
  powers.push_back(RationalSeries::one(s.order()));
  for (std::uint32_t i = 1; i <= k; ++i) powers.push_back(series_multiply(powers.back(), s));
  return powers;
}

RationalSeries partition_series(std::size_t order) {
  // Multiplying by 1/(1 - q^m) is a strided prefix sum.
  std::vector<BigInt> p(order + 1, 0);
  p[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    for (std::size_t n = m; n <= order; ++n) p[n] += p[n - m];
  }
  std::vector<Rational> coeffs(p.begin(), p.end());
  return RationalSeries(std::move(coeffs));
}

RationalSeries series_exp(const RationalSeries& s) {
  if (s[0] != 0) throw std::invalid_argument("series_exp: constant term must be zero");
  const std::size_t order = s.order();
  std::vector<Rational> weighted(order + 1);
  for (std::size_t j = 1; j <= order; ++j) weighted[j] = s[j] * static_cast<unsigned long>(j);
  RationalSeries e(order);
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (weighted[j] != 0) acc += weighted[j] * coeffs[n - j];
    }
    acc /= static_cast<unsigned long>(n);
    coeffs[n] = std::move(acc);
  }
  return RationalSeries(std::move(coeffs));
}

SeriesRegistry::SeriesRegistry() {
  add("sigma-minus-one", [](std::size_t order) { return f_series(order); });
  add("remark-series", [](std::size_t order) {
    // z/(1-z) contributes 1 at every n >= 1; z^2/(2(1-z^2)) contributes 1/2 at even n >= 2.
    RationalSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s.set(n, n % 2 == 0 ? Rational(3, 2) : Rational(1));
    return s;
  });
}

SeriesRegistry& SeriesRegistry::instance() {
  static SeriesRegistry registry;
  return registry;
}

void SeriesRegistry::add(std::string name, Rule rule) {
  for (auto& [existing, r] : rules_) {
    if (existing == name) {
      r = std::move(rule);
      return;
    }
  }
  rules_.emplace_back(std::move(name), std::move(rule));
}

bool SeriesRegistry::contains(std::string_view name) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const auto& r) { return r.first == name; });
}

RationalSeries SeriesRegistry::make(std::string_view name, std::size_t order) const {
  for (const auto& [existing, rule] : rules_) {
    if (existing == name) return rule(order);
  }
  throw std::invalid_argument("unknown series rule '" + std::string(name) + "'");
}

std::vector<std::string> SeriesRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& r : rules_) out.push_back(r.first);
  return out;
}

RationalSeries custom_series(std::string_view rule, std::size_t order) {
  return SeriesRegistry::instance().make(rule, order);
}

}  // namespace nekrasov
