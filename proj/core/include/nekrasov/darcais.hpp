#ifndef NEKRASOV_DARCAIS_HPP
#define NEKRASOV_DARCAIS_HPP

#include "nekrasov/rational.hpp"
#include "nekrasov/series.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nekrasov {

/// Q_n(z) = sum_k A_{n,k} z^k as its exact coefficient list A_{n,0..n}.
struct QPolynomial {
  std::uint32_t n = 0;
  std::vector<Rational> coeffs;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// Largest n the partition-enumerating methods accept.
struct EnumerationBudget {
  static constexpr std::uint32_t kDefaultMaxN = 32;
  std::uint32_t max_n = kDefaultMaxN;

  /// Honours NEKRASOV_ENUM_LIMIT when it holds a non-negative integer.
  static EnumerationBudget from_environment();
};

class EnumerationLimitError : public std::runtime_error {
 public:
  EnumerationLimitError(std::uint32_t n, std::uint32_t limit);
  std::uint32_t limit() const noexcept { return limit_; }

 private:
  std::uint32_t limit_;
};

enum class QMethod { recursion, hooks, trivial_hooks, multiplicities };

std::string_view to_string(QMethod method);
/// Accepts "recursion", "hooks", "trivial-hooks", "multiplicities";
/// throws std::invalid_argument otherwise.
QMethod parse_q_method(std::string_view name);

/// A_{n,k} = (1/k!) sum_i p(n-i) c_{i,k}.
QPolynomial q_via_recursion(std::uint32_t n);
/// sum over |lambda| = n of prod over hooks h of (1 + z/h^2).
QPolynomial q_via_hooks(std::uint32_t n,
                        EnumerationBudget budget = EnumerationBudget::from_environment());
/// sum over |lambda| = n of prod over trivial-leg hooks h of (1 + z/h).
QPolynomial q_via_trivial_hooks(std::uint32_t n,
                                EnumerationBudget budget = EnumerationBudget::from_environment());
/// sum over |lambda| = n of prod_j binom(k_j + z, k_j).
QPolynomial q_via_multiplicities(std::uint32_t n,
                                 EnumerationBudget budget = EnumerationBudget::from_environment());

QPolynomial compute_q(QMethod method, std::uint32_t n,
                      EnumerationBudget budget = EnumerationBudget::from_environment());

/// Every A_{n,k} with n <= order, as the columns
///   G_k(q) = sum_n A_{n,k} q^n = f^k(q) P(q) / k!,
/// built by G_k = G_{k-1} f / k on a common-denominator integer form.
class DarcaisTable {
 public:
  explicit DarcaisTable(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }
  /// G_k truncated at order(); zero for k > order().
  const RationalSeries& column(std::uint32_t k) const { return columns_.at(k); }
  const Rational& coefficient(std::uint32_t n, std::uint32_t k) const;
  QPolynomial row(std::uint32_t n) const;

 private:
  std::uint32_t order_;
  std::vector<RationalSeries> columns_;
};

/// A_{n,b} = (a!/b!) sum_{i=0}^{n} A_{n-i,a} c_{i,b-a}, with the column
/// A_{.,a} and the powers f^{b-a} both cached up to `order`.
class CrossRecursion {
 public:
  explicit CrossRecursion(std::uint32_t order);

  /// Throws std::invalid_argument unless a < b <= n <= order().
  Rational value(std::uint32_t a, std::uint32_t b, std::uint32_t n) const;
  std::uint32_t order() const noexcept { return table_.order(); }

 private:
  DarcaisTable table_;
  std::vector<RationalSeries> f_powers_;
};

Rational a_cross_recursion(std::uint32_t a, std::uint32_t b, std::uint32_t n);

}  // namespace nekrasov

#endif  // NEKRASOV_DARCAIS_HPP
