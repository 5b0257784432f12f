#include "nekrasov/stirling.hpp"

#include <algorithm>
#include <string>

namespace nekrasov {

StirlingTable::StirlingTable(std::uint32_t n_max) : rows_(n_max + 1) {
  rows_[0] = {BigInt(1)};
  for (std::uint32_t n = 0; n < n_max; ++n) {
    // [n+1 m] = [n m-1] + n [n m]
    auto& next = rows_[n + 1];
    next.assign(n + 2, 0);
    for (std::uint32_t m = 1; m <= n + 1; ++m) {
      next[m] = rows_[n][m - 1];
      if (m <= n) next[m] += rows_[n][m] * n;
    }
  }
}

const BigInt& StirlingTable::operator()(std::uint32_t n, std::uint32_t m) const {
  if (n >= rows_.size() || m > n) {
    throw std::out_of_range("Stirling index [" + std::to_string(n) + " " + std::to_string(m) +
                            "] outside table of size " + std::to_string(rows_.size() - 1));
  }
  return rows_[n][m];
}

BigInt stirling_unsigned(std::uint32_t n, std::uint32_t m) {
  if (m > n) throw std::out_of_range("stirling_unsigned requires m <= n");
  return StirlingTable(n)(n, m);
}

Rational harmonic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("harmonic numbers start at H_1");
  Rational h = 0;
  for (std::uint32_t i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

std::uint32_t harmonic_ceiling(std::uint32_t n) {
  const Rational h = harmonic(n);
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return static_cast<std::uint32_t>(c.get_ui());
}

std::uint64_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2 requires n >= 1");
  std::uint64_t r = 0;
  while ((std::uint64_t{1} << r) < n) ++r;
  return r;
}

SibuyaResult sibuya_check(const StirlingTable& table, std::uint32_t n, std::uint32_t m) {
  if (n < 2 || m < 2 || m > n) {
    throw PreconditionError("Sibuya's inequality needs n >= 2 and 2 <= m <= n");
  }
  SibuyaResult r;
  r.ratio = Rational(table(n, m), table(n, m - 1));
  r.ratio.canonicalize();
  const Rational h = harmonic(n - 1);
  r.middle = Rational(n - m + 1) * h / Rational(BigInt(n - 1) * (m - 1));
  r.outer = h / Rational(m - 1);
  r.first_holds = r.ratio <= r.middle;
  r.second_holds = r.middle <= r.outer;
  return r;
}

bool stirling_ratio_decay_check(const StirlingTable& table, std::uint32_t n, std::uint32_t m,
                                std::uint32_t t) {
  if (n == 0) throw PreconditionError("the decay bound needs n >= 1");
  if (Rational(m) < 2 * harmonic(n) + 1) {
    throw PreconditionError("decay bound requires m >= 2 H_n + 1 (m = " + std::to_string(m) +
                            ", n = " + std::to_string(n) + ")");
  }
  if (std::uint64_t{m} + t > n) throw std::out_of_range("decay bound requires m + t <= n");
  BigInt lhs = table(n + 1, m + t + 1);
  lhs <<= t;
  return lhs <= table(n + 1, m + 1);
}

std::vector<BigInt> constrained_stirling_sums(const MultiplicityVector& k_vec,
                                              const StirlingTable& table) {
  // DP over the parts with running total l; each factor is the polynomial
  // (z+1)(z+2)...(z+k_j) = sum_l [k_j+1, l+1] z^l.
  std::vector<BigInt> acc{BigInt(1)};
  for (const auto& e : k_vec.entries()) {
    const auto& row = table.row(e.count + 1);
    std::vector<BigInt> next(acc.size() + e.count);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::uint32_t l = 0; l <= e.count; ++l) {
        mpz_addmul(next[a + l].get_mpz_t(), acc[a].get_mpz_t(), row[l + 1].get_mpz_t());
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Rational> q_coeffs(const MultiplicityVector& k_vec, const StirlingTable& table) {
  const auto sums = constrained_stirling_sums(k_vec, table);
  BigInt c0_den = 1;
  for (const auto& e : k_vec.entries()) c0_den *= factorial(e.count);
  std::vector<Rational> out;
  out.reserve(sums.size());
  for (const auto& s : sums) {
    Rational q(s, c0_den);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Rational> q_coeffs(const MultiplicityVector& k_vec) {
  std::uint32_t largest = 0;
  for (const auto& e : k_vec.entries()) largest = std::max(largest, e.count);
  return q_coeffs(k_vec, StirlingTable(largest + 1));
}

namespace {

std::uint64_t total_s(const MultiplicityVector& k_vec, std::uint64_t r) {
  std::uint64_t s = 0;
  for (const auto& e : k_vec.entries()) s += 2 * std::uint64_t{harmonic_ceiling(e.count)} + r + 1;
  return s;
}

}  // namespace

ShiftedSumResult shifted_sum_check(const MultiplicityVector& k_vec, std::uint64_t n,
                            const StirlingTable& table) {
  if (n < 2) throw PreconditionError("r = ceil(log2 n) needs n >= 2");
  ShiftedSumResult out;
  out.r = ceil_log2(n);
  out.s = total_s(k_vec, out.r);
  const auto sums = constrained_stirling_sums(k_vec, table);
  auto at = [&](std::uint64_t l) { return l < sums.size() ? sums[l] : BigInt(0); };
  out.lhs = at(out.s);
  out.rhs = out.s >= out.r ? at(out.s - out.r) : BigInt(0);
  out.holds = out.lhs <= out.rhs;
  return out;
}

ModeBound mode_bound_check(const MultiplicityVector& k_vec, std::uint64_t n,
                           const StirlingTable& table) {
  if (n < 2) throw PreconditionError("the mode bound uses r = ceil(log2 n), n >= 2");
  ModeBound out;
  out.s = total_s(k_vec, ceil_log2(n));
  // C0 > 0 scales every q_k alike, so the integer sums share their argmax.
  const auto sums = constrained_stirling_sums(k_vec, table);
  out.mode = static_cast<std::size_t>(std::max_element(sums.begin(), sums.end()) - sums.begin());
  out.holds = out.mode <= out.s;
  return out;
}

}  // namespace nekrasov
