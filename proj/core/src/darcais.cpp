#include "nekrasov/darcais.hpp"

#include "nekrasov/partitions.hpp"
#include "nekrasov/stirling.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace nekrasov {

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("NEKRASOV_ENUM_LIMIT")) {
    std::uint32_t value = 0;
    const auto* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end) budget.max_n = value;
  }
  return budget;
}

EnumerationLimitError::EnumerationLimitError(std::uint32_t n, std::uint32_t limit)
    : std::runtime_error("n = " + std::to_string(n) +
                         " exceeds the partition enumeration limit " + std::to_string(limit) +
                         " (set NEKRASOV_ENUM_LIMIT to raise it, or use the recursion method)"),
      limit_(limit) {}

std::string_view to_string(QMethod method) {
  switch (method) {
    case QMethod::recursion: return "recursion";
    case QMethod::hooks: return "hooks";
    case QMethod::trivial_hooks: return "trivial-hooks";
    case QMethod::multiplicities: return "multiplicities";
  }
  return "unknown";
}

QMethod parse_q_method(std::string_view name) {
  for (auto m : {QMethod::recursion, QMethod::hooks, QMethod::trivial_hooks,
                 QMethod::multiplicities}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

void check_budget(std::uint32_t n, EnumerationBudget budget) {
  if (n > budget.max_n) throw EnumerationLimitError(n, budget.max_n);
}

// Adds prod_d (1 + z/d) = prod_d (d + z) / prod_d d into `sum`.
void accumulate_product(std::vector<Rational>& sum, const std::vector<std::uint64_t>& divisors) {
  std::vector<BigInt> poly{BigInt(1)};
  BigInt denominator = 1;
  for (const auto d : divisors) {
    poly.emplace_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
      poly[i] *= static_cast<unsigned long>(d);
      poly[i] += poly[i - 1];
    }
    poly[0] *= static_cast<unsigned long>(d);
    denominator *= static_cast<unsigned long>(d);
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Rational term(poly[i], denominator);
    term.canonicalize();
    sum[i] += term;
  }
}

}  // namespace

QPolynomial q_via_recursion(std::uint32_t n) { return DarcaisTable(n).row(n); }

QPolynomial q_via_hooks(std::uint32_t n, EnumerationBudget budget) {
  check_budget(n, budget);
  std::vector<Rational> sum(n + 1);
  std::vector<std::uint64_t> divisors;
  for (const auto& lambda : Partitions(n)) {
    divisors.clear();
    for (const auto h : hook_lengths(lambda)) divisors.push_back(std::uint64_t{h} * h);
    accumulate_product(sum, divisors);
  }
  return {n, std::move(sum)};
}

QPolynomial q_via_trivial_hooks(std::uint32_t n, EnumerationBudget budget) {
  check_budget(n, budget);
  std::vector<Rational> sum(n + 1);
  std::vector<std::uint64_t> divisors;
  for (const auto& lambda : Partitions(n)) {
    divisors.clear();
    for (const auto h : trivial_leg_hooks(lambda)) divisors.push_back(h);
    accumulate_product(sum, divisors);
  }
  return {n, std::move(sum)};
}

QPolynomial q_via_multiplicities(std::uint32_t n, EnumerationBudget budget) {
  check_budget(n, budget);
  const StirlingTable table(n + 1);
  std::vector<Rational> sum(n + 1);
  for (const auto& lambda : Partitions(n)) {
    const auto q = q_coeffs(multiplicities(lambda), table);
    for (std::size_t k = 0; k < q.size(); ++k) sum[k] += q[k];
  }
  return {n, std::move(sum)};
}

QPolynomial compute_q(QMethod method, std::uint32_t n, EnumerationBudget budget) {
  switch (method) {
    case QMethod::recursion: return q_via_recursion(n);
    case QMethod::hooks: return q_via_hooks(n, budget);
    case QMethod::trivial_hooks: return q_via_trivial_hooks(n, budget);
    case QMethod::multiplicities: return q_via_multiplicities(n, budget);
  }
  throw std::invalid_argument("unknown method");
}

DarcaisTable::DarcaisTable(std::uint32_t order) : order_(order) {
  const auto f = ScaledSeries::from(f_series(order));
  ScaledSeries g = ScaledSeries::from(partition_series(order));
  columns_.reserve(order + 1);
  columns_.push_back(g.to_rational());
  for (std::uint32_t k = 1; k <= order; ++k) {
    g.numerators = integer_convolution(g.numerators, f.numerators, order);
    g.denominator *= f.denominator;
    g.denominator *= k;
    g.reduce();
    columns_.push_back(g.to_rational());
  }
}

const Rational& DarcaisTable::coefficient(std::uint32_t n, std::uint32_t k) const {
  return columns_.at(k)[n];
}

QPolynomial DarcaisTable::row(std::uint32_t n) const {
  if (n > order_) throw std::out_of_range("row beyond the table order");
  QPolynomial q{n, {}};
  q.coeffs.reserve(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) q.coeffs.push_back(columns_[k][n]);
  return q;
}

CrossRecursion::CrossRecursion(std::uint32_t order)
    : table_(order), f_powers_(series_powers(f_series(order), order)) {}

Rational CrossRecursion::value(std::uint32_t a, std::uint32_t b, std::uint32_t n) const {
  if (!(a < b && b <= n && n <= order())) {
    throw std::invalid_argument("cross recursion needs 0 <= a < b <= n <= " +
                                std::to_string(order()));
  }
  const auto& column = table_.column(a);
  const auto& power = f_powers_[b - a];
  Rational acc = 0;
  for (std::uint32_t i = 0; i <= n; ++i) {
    if (power[i] != 0 && column[n - i] != 0) acc += column[n - i] * power[i];
  }
  Rational scale(factorial(a), factorial(b));
  scale.canonicalize();
  return acc * scale;
}

Rational a_cross_recursion(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
  return CrossRecursion(n).value(a, b, n);
}

}  // namespace nekrasov
