#ifndef NEKRASOV_RATIONAL_HPP
#define NEKRASOV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nekrasov {

using BigInt = mpz_class;
// gmpxx keeps every mpq_class result canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Lowest-term "p/q" in base 10; "/q" is omitted when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt factorial(std::uint32_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace nekrasov

#endif  // NEKRASOV_RATIONAL_HPP
