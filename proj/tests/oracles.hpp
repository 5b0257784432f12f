// Slow, direct reference implementations used only by the tests. Nothing
// here calls into the library except for the Rational/BigInt typedefs.
#ifndef NEKRASOV_TESTS_ORACLES_HPP
#define NEKRASOV_TESTS_ORACLES_HPP

#include "nekrasov/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using nekrasov::BigInt;
using nekrasov::Rational;
using Parts = std::vector<std::uint32_t>;

// All partitions of n by recursion on the largest part, reverse-lex order.
inline std::vector<Parts> partitions(std::uint32_t n) {
  std::vector<Parts> out;
  Parts current;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t left, std::uint32_t cap) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t part = std::min(left, cap); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Hooks from the Young diagram grid: arm + leg + 1 per cell.
struct Cell {
  std::uint32_t hook;
  std::uint32_t leg;
};

inline std::vector<Cell> diagram_cells(const Parts& parts) {
  std::vector<Cell> cells;
  for (std::size_t row = 0; row < parts.size(); ++row) {
    for (std::uint32_t col = 0; col < parts[row]; ++col) {
      const std::uint32_t arm = parts[row] - col - 1;
      std::uint32_t leg = 0;
      for (std::size_t below = row + 1; below < parts.size() && parts[below] > col; ++below) ++leg;
      cells.push_back({arm + leg + 1, leg});
    }
  }
  return cells;
}

inline std::vector<std::uint32_t> sorted_desc(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<std::uint32_t> hooks(const Parts& parts) {
  std::vector<std::uint32_t> out;
  for (const auto& c : diagram_cells(parts)) out.push_back(c.hook);
  return sorted_desc(out);
}

inline std::vector<std::uint32_t> trivial_leg_hooks(const Parts& parts) {
  std::vector<std::uint32_t> out;
  for (const auto& c : diagram_cells(parts)) {
    if (c.leg == 0) out.push_back(c.hook);
  }
  return sorted_desc(out);
}

// Sum of 1/d over the divisors of n, by trial division.
inline Rational sigma_minus1(std::uint64_t n) {
  Rational s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += Rational(1, static_cast<unsigned long>(d));
  }
  return s;
}

// Coefficient of q^n in f^k as a sum over compositions n = n_1 + ... + n_k.
inline Rational composition_power_coefficient(std::uint32_t n, std::uint32_t k) {
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  Rational total = 0;
  for (std::uint32_t first = 1; first + (k - 1) <= n; ++first) {
    total += sigma_minus1(first) * composition_power_coefficient(n - first, k - 1);
  }
  return total;
}

// Polynomial helpers in z with rational coefficients.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// binom(z + k, k) = (z+1)(z+2)...(z+k) / k!.
inline Poly binom_z_plus(std::uint32_t k) {
  Poly p{Rational(1)};
  for (std::uint32_t i = 1; i <= k; ++i) {
    p = poly_mul(p, Poly{Rational(i), Rational(1)});
    for (auto& c : p) c /= i;
  }
  return p;
}

// Q_n(z) from the product prod_m (1 - q^m)^{-(z+1)} = prod_m sum_j binom(z+j, j) q^{mj},
// expanded as a bivariate series. Independent of f, hooks and partitions.
inline std::vector<Poly> q_from_product(std::uint32_t order) {
  std::vector<Poly> series(order + 1, Poly{Rational(0)});
  series[0] = Poly{Rational(1)};
  for (std::uint32_t m = 1; m <= order; ++m) {
    std::vector<Poly> next(order + 1, Poly{Rational(0)});
    for (std::uint32_t n = 0; n <= order; ++n) {
      for (std::uint32_t j = 0; n + m * j <= order; ++j) {
        next[n + m * j] = poly_add(next[n + m * j], poly_mul(series[n], binom_z_plus(j)));
      }
    }
    series = std::move(next);
  }
  for (auto& p : series) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
  return series;
}

// Unsigned Stirling numbers of the first kind by counting permutations by cycles.
inline std::vector<BigInt> stirling_row_by_permutations(std::uint32_t n) {
  std::vector<BigInt> row(n + 1, BigInt(0));
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    std::vector<bool> seen(n, false);
    std::uint32_t cycles = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::uint32_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    row[cycles] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

// Coefficients of the rising factorial t(t+1)...(t+n-1).
inline std::vector<BigInt> rising_factorial_coeffs(std::uint32_t n) {
  std::vector<BigInt> p{BigInt(1)};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(p.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d + 1] += p[d];
      next[d] += p[d] * i;
    }
    p = std::move(next);
  }
  return p;
}

// sum over tuples (l_j <= k_j, sum l_j = total) of prod_j [k_j + 1, l_j + 1],
// by explicit tuple enumeration. counts lists the k_j.
inline BigInt constrained_sum_bruteforce(const std::vector<std::uint32_t>& counts, std::uint64_t total) {
  BigInt acc = 0;
  std::vector<std::uint32_t> l(counts.size(), 0);
  while (true) {
    std::uint64_t s = 0;
    for (auto v : l) s += v;
    if (s == total) {
      BigInt prod = 1;
      for (std::size_t j = 0; j < counts.size(); ++j) prod *= rising_factorial_coeffs(counts[j] + 1)[l[j] + 1];
      acc += prod;
    }
    std::size_t pos = 0;
    while (pos < l.size() && l[pos] == counts[pos]) l[pos++] = 0;
    if (pos == l.size()) break;
    ++l[pos];
  }
  return acc;
}

inline Rational harmonic(std::uint32_t n) {
  Rational h = 0;
  for (std::uint32_t i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

}  // namespace oracle

#endif  // NEKRASOV_TESTS_ORACLES_HPP
