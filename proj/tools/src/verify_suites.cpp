#include "nekrasov_cli/verify_suites.hpp"

#include "nekrasov/analysis.hpp"
#include "nekrasov/darcais.hpp"
#include "nekrasov/partitions.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/stirling.hpp"

#include <algorithm>
#include <sstream>

namespace nekrasov::cli {

namespace {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string suite) : suite_(std::move(suite)) {}

  void record(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string first_failure(std::string_view what, std::uint64_t index) {
  std::ostringstream s;
  s << what << ' ' << index;
  return s.str();
}

}  // namespace

std::vector<CheckResult> run_identity_suite(std::uint32_t n_max) {
  SuiteRecorder rec("identities");
  const auto f = f_series(n_max);
  const auto p = partition_series(n_max);

  rec.record("exp_f_equals_partition_series", series_exp(f) == p,
             "N=" + std::to_string(n_max));

  const DarcaisTable table(n_max);
  {
    bool ok = true;
    std::string detail = "k<=5, N=" + std::to_string(n_max);
    auto power = RationalSeries::one(n_max);
    for (std::uint32_t k = 0; k <= std::min<std::uint32_t>(5, n_max) && ok; ++k) {
      if (k > 0) power = series_multiply(power, f);
      auto expected = series_multiply(power, p);
      Rational inv(BigInt(1), factorial(k));
      inv.canonicalize();
      for (std::size_t i = 0; i <= n_max; ++i) expected.set(i, expected[i] * inv);
      if (!(expected == table.column(k))) {
        ok = false;
        detail = first_failure("column mismatch at k =", k);
      }
    }
    rec.record("column_generating_functions", ok, detail);
  }

  {
    const auto p_exact = partition_counts(n_max);
    bool ok = true;
    std::string detail = "n<=" + std::to_string(n_max);
    for (std::uint32_t n = 0; n <= n_max && ok; ++n) {
      const Rational top(BigInt(1), factorial(n));
      if (table.coefficient(n, 0) != Rational(p_exact[n]) || table.coefficient(n, n) != top) {
        ok = false;
        detail = first_failure("boundary mismatch at n =", n);
      }
    }
    rec.record("boundary_coefficients", ok, detail);
  }

  {
    const auto budget = EnumerationBudget::from_environment();
    const std::uint32_t limit = std::min({n_max, budget.max_n, std::uint32_t{25}});
    bool ok = true;
    std::string detail = "n<=" + std::to_string(limit);
    for (std::uint32_t n = 0; n <= limit && ok; ++n) {
      const auto ref = table.row(n);
      for (auto m : {QMethod::hooks, QMethod::trivial_hooks, QMethod::multiplicities}) {
        if (!(compute_q(m, n, budget) == ref)) {
          ok = false;
          detail = std::string(to_string(m)) + " disagrees at n = " + std::to_string(n);
          break;
        }
      }
    }
    rec.record("four_way_agreement", ok, detail);
  }

  {
    const std::uint32_t limit = std::min<std::uint32_t>(n_max, 40);
    const CrossRecursion cross(limit);
    const DarcaisTable small(limit);
    bool ok = true;
    std::string detail = "a<b<=n<=" + std::to_string(limit);
    for (std::uint32_t n = 1; n <= limit && ok; ++n) {
      for (std::uint32_t b = 1; b <= n && ok; ++b) {
        for (std::uint32_t a = 0; a < b && ok; ++a) {
          if (cross.value(a, b, n) != small.coefficient(n, b)) {
            ok = false;
            detail = "mismatch at (a,b,n) = (" + std::to_string(a) + "," + std::to_string(b) +
                     "," + std::to_string(n) + ")";
          }
        }
      }
    }
    rec.record("cross_recursion", ok, detail);
  }
  return rec.take();
}

std::vector<CheckResult> run_logconcave_suite(std::uint32_t n_max) {
  SuiteRecorder rec("logconcave");
  const DarcaisTable table(n_max);
  {
    bool log_concave = true;
    bool unimodal = true;
    bool positive = true;
    std::string detail = "n<=" + std::to_string(n_max);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      const auto row = table.row(n);
      if (std::any_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return sgn(c) <= 0; })) {
        positive = false;
      }
      if (const auto v = first_log_concavity_violation(std::span<const Rational>(row.coeffs))) {
        if (log_concave) detail = "row " + std::to_string(n) + " fails at k = " + std::to_string(*v);
        log_concave = false;
      }
      if (!check_unimodal(row.coeffs).unimodal) unimodal = false;
    }
    rec.record("q_rows_positive", positive, "n<=" + std::to_string(n_max));
    rec.record("q_rows_log_concave", log_concave, detail);
    rec.record("q_rows_unimodal", unimodal, "n<=" + std::to_string(n_max));
  }
  {
    const std::uint32_t last = std::max<std::uint32_t>(n_max, 27);
    const auto p = partition_counts(last);
    std::vector<BigInt> tail(p.begin() + 25, p.end());
    const auto v = first_log_concavity_violation(std::span<const BigInt>(tail));
    rec.record("partition_numbers_log_concave_from_25", !v,
               v ? first_failure("fails at n =", *v + 25) : "25<=n<=" + std::to_string(last));
  }
  {
    const std::uint32_t last = std::max<std::uint32_t>(n_max, 28);
    bool ok = true;
    std::string detail = "k=2..5, 27<=n<=" + std::to_string(last);
    for (std::uint32_t k = 2; k <= 5 && ok; ++k) {
      const auto seq = a_tilde_sequence(k, 27, last);
      if (const auto v = first_log_concavity_violation(std::span<const Rational>(seq))) {
        ok = false;
        detail = "k=" + std::to_string(k) + " fails at n = " + std::to_string(*v + 27);
      }
    }
    rec.record("a_tilde_log_concave", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "k=2..8, 27<=n<=min(2^k,400)";
    for (std::uint32_t k = 2; k <= 8 && ok; ++k) {
      const std::uint32_t last = std::min<std::uint32_t>(1u << k, 400);
      if (last < 29) continue;  // fewer than three terms
      const auto seq = a_hat_sequence(k, 27, last);
      if (const auto v = first_log_concavity_violation(std::span<const Rational>(seq))) {
        ok = false;
        detail = "k=" + std::to_string(k) + " fails at n = " + std::to_string(*v + 27);
      }
    }
    rec.record("a_hat_log_concave", ok, detail);
  }
  return rec.take();
}

std::vector<CheckResult> run_stirling_suite(std::uint32_t n_max) {
  SuiteRecorder rec("stirling");
  const StirlingTable table(n_max + 2);
  {
    bool ok = true;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      BigInt sum = 0;
      for (const auto& v : table.row(n)) sum += v;
      ok = ok && sum == factorial(n);
    }
    rec.record("row_sums_factorial", ok, "n<=" + std::to_string(n_max));
  }
  {
    bool ok = true;
    std::string detail = "2<=m<=n<=" + std::to_string(n_max);
    for (std::uint32_t n = 2; n <= n_max && ok; ++n) {
      for (std::uint32_t m = 2; m <= n && ok; ++m) {
        if (!sibuya_check(table, n, m).holds()) {
          ok = false;
          detail = "fails at (n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
      }
    }
    rec.record("sibuya_inequality", ok, detail);
  }
  {
    bool ok = true;
    std::size_t checked = 0;
    for (std::uint32_t n = 1; n + 1 <= table.n_max() && n <= n_max; ++n) {
      const Rational threshold = 2 * harmonic(n) + 1;
      for (std::uint32_t m = 1; m <= n; ++m) {
        if (Rational(m) < threshold) continue;
        for (std::uint32_t t = 0; m + t <= n; ++t) {
          ++checked;
          ok = ok && stirling_ratio_decay_check(table, n, m, t);
        }
      }
    }
    rec.record("stirling_ratio_decay", ok, std::to_string(checked) + " triples");
  }
  {
    bool shifted = true;
    bool mode = true;
    bool concave = true;
    std::size_t vectors = 0;
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      for (const auto& lambda : Partitions(n)) {
        const auto k_vec = multiplicities(lambda);
        ++vectors;
        shifted = shifted && shifted_sum_check(k_vec, n, table).holds;
        mode = mode && mode_bound_check(k_vec, n, table).holds;
        const auto q = q_coeffs(k_vec, table);
        concave = concave && !first_log_concavity_violation(std::span<const Rational>(q));
      }
    }
    const std::string detail = std::to_string(vectors) + " multiplicity vectors, n<=" + std::to_string(n_max);
    rec.record("shifted_constrained_sums", shifted, detail);
    rec.record("mode_bound", mode, detail);
    rec.record("q_coeffs_log_concave", concave, detail);
  }
  return rec.take();
}

}  // namespace nekrasov::cli
