#include "nekrasov/analysis.hpp"

#include "nekrasov/partitions.hpp"
#include "nekrasov/power_chain.hpp"
#include "nekrasov/stirling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

namespace nekrasov {

// ---------------------------------------------------------------- sequences

namespace {

template <typename T>
std::optional<std::size_t> first_violation_impl(std::span<const T> seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> first_log_concavity_violation(std::span<const Rational> seq) {
  return first_violation_impl(seq);
}

std::optional<std::size_t> first_log_concavity_violation(std::span<const BigInt> seq) {
  return first_violation_impl(seq);
}

Unimodality check_unimodal(std::span<const Rational> seq) {
  if (seq.empty()) throw std::invalid_argument("unimodality of an empty sequence");
  Unimodality u;
  u.mode = static_cast<std::size_t>(std::max_element(seq.begin(), seq.end()) - seq.begin());
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  u.unimodal = i == seq.size();
  return u;
}

bool tail_monotone_from(std::span<const Rational> seq, std::size_t start) {
  if (start >= seq.size()) throw std::out_of_range("tail start beyond the sequence");
  for (std::size_t k = start; k + 1 < seq.size(); ++k) {
    if (seq[k] < seq[k + 1]) return false;
  }
  return true;
}

std::size_t monotone_tail_start(std::span<const Rational> seq) {
  if (seq.empty()) return 0;
  std::size_t start = seq.size() - 1;
  while (start > 0 && seq[start - 1] >= seq[start]) --start;
  return start;
}

// ---------------------------------------------------------------- scans

std::string_view to_string(ScanMode mode) {
  return mode == ScanMode::exact ? "exact" : "adaptive-float";
}

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::exact: return "exact";
    case Certification::adaptive_float: return "adaptive-float";
    case Certification::uncertified: return "uncertified";
  }
  return "unknown";
}

ScanMode parse_scan_mode(std::string_view text) {
  if (text == "exact") return ScanMode::exact;
  if (text == "adaptive-float") return ScanMode::adaptive_float;
  throw std::invalid_argument("unknown scan mode '" + std::string(text) + "'");
}

std::size_t default_scan_n_max(std::uint32_t k) {
  if (k >= 40) throw std::invalid_argument("default n_max overflows for k >= 40");
  return std::size_t{4} << k;
}

namespace {

// One rung of the precision ladder; its chain is built on first use.
struct Rung {
  unsigned precision;  // 0 = exact
  std::size_t capacity;
  std::unique_ptr<PowerChain> chain;
};

}  // namespace

ScanReport scan_series(const RationalSeries& base, std::uint32_t k, std::size_t n_max,
                       const ScanOptions& options) {
  if (k == 0) throw PreconditionError("scans need k >= 1");
  if (n_max < 3) throw PreconditionError("scans need n_max >= 3");
  if (base.order() < n_max) throw PreconditionError("base series truncated below n_max");

  const auto started = std::chrono::steady_clock::now();
  ScanReport report;
  report.k = k;
  report.n_max = n_max;
  report.mode = options.mode;
  report.certification =
      options.mode == ScanMode::exact ? Certification::exact : Certification::adaptive_float;
  report.max_precision_used = options.mode == ScanMode::exact ? 0 : options.start_precision;

  const std::size_t capacity = n_max + 1;
  std::vector<Rung> ladder;
  if (options.mode == ScanMode::exact) {
    ladder.push_back({0, capacity, nullptr});
  } else {
    if (options.start_precision > options.precision_cap) {
      throw PreconditionError("start precision exceeds the precision cap");
    }
    for (unsigned p = options.start_precision; p <= options.precision_cap; p *= 2) {
      ladder.push_back({p, capacity, nullptr});
    }
    const std::size_t exact_capacity = std::min(capacity, options.exact_fallback + 1);
    if (exact_capacity >= 4) ladder.push_back({0, exact_capacity, nullptr});
  }

  auto chain_of = [&](Rung& rung) -> PowerChain& {
    if (!rung.chain) {
      if (rung.precision == 0) {
        rung.chain = std::make_unique<ExactPowerChain>(base, k, rung.capacity);
      } else if (rung.precision == 53) {
        rung.chain = std::make_unique<DoubleIntervalPowerChain>(base, k, rung.capacity);
      } else {
        rung.chain = std::make_unique<MpfrIntervalPowerChain>(base, k, rung.capacity,
                                                              rung.precision);
      }
    }
    return *rung.chain;
  };

  for (std::size_t n = 2; n + 1 <= n_max; ++n) {
    TripleVerdict verdict = TripleVerdict::ambiguous;
    for (auto& rung : ladder) {
      if (n + 1 >= rung.capacity) continue;
      verdict = chain_of(rung).log_concavity_at(n);
      if (verdict != TripleVerdict::ambiguous) {
        if (rung.precision == 0) {
          report.max_precision_used = 0;
        } else if (report.max_precision_used != 0) {
          report.max_precision_used = std::max(report.max_precision_used, rung.precision);
        }
        break;
      }
    }
    if (verdict == TripleVerdict::ambiguous) {
      report.certification = Certification::uncertified;
      report.uncertified_at = n;
      break;
    }
    ++report.violations_checked;
    if (verdict == TripleVerdict::violated) {
      report.n0 = n;
      break;
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

ScanReport scan_conjecture(std::uint32_t k, std::size_t n_max, const ScanOptions& options) {
  if (k < 2) throw PreconditionError("the conjecture scan needs k >= 2");
  if (n_max < 3) throw PreconditionError("scans need n_max >= 3");
  return scan_series(f_series(n_max), k, n_max, options);
}

ScanReport scan_conjecture_custom(std::string_view rule, std::uint32_t k, std::size_t n_max,
                                  const ScanOptions& options) {
  if (n_max < 3) throw PreconditionError("scans need n_max >= 3");
  return scan_series(custom_series(rule, n_max), k, n_max, options);
}

std::vector<ScanReport> run_scans(const std::vector<ScanJob>& scan_jobs,
                                  const ScanOptions& options, unsigned jobs) {
  std::vector<ScanReport> reports(scan_jobs.size());
  std::vector<std::exception_ptr> errors(scan_jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scan_jobs.size(); i = next++) {
      const auto& job = scan_jobs[i];
      try {
        const std::size_t n_max = job.n_max != 0 ? job.n_max : default_scan_n_max(job.k);
        reports[i] = scan_conjecture_custom(job.rule, job.k, n_max, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(scan_jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

// ---------------------------------------------------------------- ratios

double RatioReport::deviation_bound() const noexcept {
  // Wide enough that subtracting 1 from any finite double is exact.
  BigFloat lo(2200);
  BigFloat hi(2200);
  mpfr_set_d(lo.get(), ratio.lo, MPFR_RNDN);
  mpfr_set_d(hi.get(), ratio.hi, MPFR_RNDN);
  mpfr_sub_ui(lo.get(), lo.get(), 1, MPFR_RNDN);
  mpfr_sub_ui(hi.get(), hi.get(), 1, MPFR_RNDN);
  mpfr_abs(lo.get(), lo.get(), MPFR_RNDN);
  mpfr_abs(hi.get(), hi.get(), MPFR_RNDN);
  mpfr_max(lo.get(), lo.get(), hi.get(), MPFR_RNDU);
  return lo.to_double(MPFR_RNDU);
}

namespace {

constexpr mpfr_prec_t kRatioPrecision = 192;

Interval ratio_of(const BigFloat& num_lo, const BigFloat& num_hi, const BigFloat& den_lo,
                  const BigFloat& den_hi) {
  BigFloat lo(kRatioPrecision);
  BigFloat hi(kRatioPrecision);
  mpfr_div(lo.get(), num_lo.get(), den_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), num_hi.get(), den_lo.get(), MPFR_RNDU);
  return to_interval(lo, hi);
}

}  // namespace

RatioReport power_sum_ratio(std::uint32_t k, std::uint64_t n) {
  if (k == 0) throw PreconditionError("power_sum_ratio needs k >= 1");
  if (n < 2 || n < std::uint64_t{k} * k) throw PreconditionError("power_sum_ratio needs n >= max(2, k^2)");

  RatioReport report;
  report.k = k;
  report.n = n;

  // Partial sum of c_{m,k}, m <= n, from directed-rounding enclosures.
  DoubleIntervalPowerChain chain(f_series(n), k, n + 1);
  BigFloat sum_lo(kRatioPrecision);
  BigFloat sum_hi(kRatioPrecision);
  for (std::uint64_t m = 0; m <= n; ++m) {
    const auto c = chain.enclosure(m);
    mpfr_add_d(sum_lo.get(), sum_lo.get(), c.lo, MPFR_RNDD);
    mpfr_add_d(sum_hi.get(), sum_hi.get(), c.hi, MPFR_RNDU);
  }
  report.lhs = to_interval(sum_lo, sum_hi);

  const auto [zeta_lo, zeta_hi] = pi_squared_over_six_enclosure();
  const BigInt choose = binomial(n, k);
  BigFloat ref_lo(kRatioPrecision);
  BigFloat ref_hi(kRatioPrecision);
  mpfr_set_q(ref_lo.get(), zeta_lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(ref_hi.get(), zeta_hi.get_mpq_t(), MPFR_RNDU);
  mpfr_pow_ui(ref_lo.get(), ref_lo.get(), k, MPFR_RNDD);
  mpfr_pow_ui(ref_hi.get(), ref_hi.get(), k, MPFR_RNDU);
  mpfr_mul_z(ref_lo.get(), ref_lo.get(), choose.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(ref_hi.get(), ref_hi.get(), choose.get_mpz_t(), MPFR_RNDU);
  report.reference = to_interval(ref_lo, ref_hi);
  report.ratio = ratio_of(sum_lo, sum_hi, ref_lo, ref_hi);

  BigFloat env(kRatioPrecision);
  mpfr_set_ui(env.get(), static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_log(env.get(), env.get(), MPFR_RNDD);
  mpfr_mul_ui(env.get(), env.get(), std::uint64_t{k} * k, MPFR_RNDD);
  mpfr_div_ui(env.get(), env.get(), static_cast<unsigned long>(n), MPFR_RNDD);
  report.envelope = env.to_double(MPFR_RNDD);
  return report;
}

RatioReport hardy_ramanujan_ratio(std::uint32_t n) {
  if (n == 0) throw PreconditionError("hardy_ramanujan_ratio needs n >= 1");
  RatioReport report;
  report.n = n;

  const BigInt p = partition_count(n);
  BigFloat p_lo(kRatioPrecision);
  BigFloat p_hi(kRatioPrecision);
  mpfr_set_z(p_lo.get(), p.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(p_hi.get(), p.get_mpz_t(), MPFR_RNDU);
  report.lhs = to_interval(p_lo, p_hi);

  // e^{pi sqrt(2n/3)} / (4 sqrt(3) n); every step is monotone in its inputs.
  auto formula = [n](mpfr_rnd_t up, mpfr_rnd_t down) {
    BigFloat num(kRatioPrecision);
    BigFloat den(kRatioPrecision);
    BigFloat pi(kRatioPrecision);
    mpfr_set_ui(num.get(), 2 * std::uint64_t{n}, up);
    mpfr_div_ui(num.get(), num.get(), 3, up);
    mpfr_sqrt(num.get(), num.get(), up);
    mpfr_const_pi(pi.get(), up);
    mpfr_mul(num.get(), num.get(), pi.get(), up);
    mpfr_exp(num.get(), num.get(), up);
    mpfr_set_ui(den.get(), 3, down);
    mpfr_sqrt(den.get(), den.get(), down);
    mpfr_mul_ui(den.get(), den.get(), 4 * std::uint64_t{n}, down);
    mpfr_div(num.get(), num.get(), den.get(), up);
    return num;
  };
  const BigFloat hr_lo = formula(MPFR_RNDD, MPFR_RNDU);
  const BigFloat hr_hi = formula(MPFR_RNDU, MPFR_RNDD);
  report.reference = to_interval(hr_lo, hr_hi);
  report.ratio = ratio_of(p_lo, p_hi, hr_lo, hr_hi);

  BigFloat env(kRatioPrecision);
  mpfr_set_ui(env.get(), n, MPFR_RNDU);
  mpfr_rec_sqrt(env.get(), env.get(), MPFR_RNDD);
  report.envelope = env.to_double(MPFR_RNDD);
  return report;
}

// ---------------------------------------------------------------- surrogates

namespace {

constexpr std::uint32_t kTrim = 26;

void require_surrogate_range(std::uint32_t first, std::uint32_t last) {
  if (first < kTrim + 1 || last < first) {
    throw PreconditionError("surrogate sums need 27 <= first <= last");
  }
}

}  // namespace

std::vector<Rational> a_tilde_sequence(std::uint32_t k, std::uint32_t first, std::uint32_t last) {
  if (k == 0) throw PreconditionError("the binomial surrogate needs k >= 1");
  require_surrogate_range(first, last);
  const auto p = partition_counts(last);
  Rational inv_fact(BigInt(1), factorial(k));
  inv_fact.canonicalize();
  std::vector<Rational> out;
  for (std::uint32_t n = first; n <= last; ++n) {
    BigInt acc = 0;
    for (std::uint32_t i = 1; i <= n - kTrim; ++i) acc += p[n - i] * binomial(i - 1, k - 1);
    out.push_back(Rational(acc) * inv_fact);
  }
  return out;
}

std::vector<Rational> a_hat_sequence(std::uint32_t k, std::uint32_t first, std::uint32_t last) {
  require_surrogate_range(first, last);
  const auto p = partition_counts(last);
  const auto c = ScaledSeries::from(series_power(f_series(last), k));
  std::vector<Rational> out;
  for (std::uint32_t n = first; n <= last; ++n) {
    BigInt acc = 0;
    for (std::uint32_t i = 0; i <= n - kTrim; ++i) {
      if (c.numerators[i] != 0) mpz_addmul(acc.get_mpz_t(), p[n - i].get_mpz_t(), c.numerators[i].get_mpz_t());
    }
    Rational v(acc, c.denominator * factorial(k));
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

Rational a_tilde(std::uint32_t n, std::uint32_t k) { return a_tilde_sequence(k, n, n).front(); }
Rational a_hat(std::uint32_t n, std::uint32_t k) { return a_hat_sequence(k, n, n).front(); }

// ---------------------------------------------------------------- reports

RowShapeReport row_shape_report(const QPolynomial& q) {
  if (q.n < 2) throw PreconditionError("row_shape_report needs n >= 2");
  RowShapeReport r;
  r.n = q.n;
  r.first_violation = first_log_concavity_violation(std::span<const Rational>(q.coeffs));
  const auto u = check_unimodal(q.coeffs);
  r.unimodal = u.unimodal;
  r.mode = u.mode;
  r.tail_start = monotone_tail_start(q.coeffs);
  const double n = q.n;
  r.log_concave_scale = std::pow(n, 1.0 / 6.0) / std::log(n);
  r.tail_scale = std::sqrt(n) * std::log(n);
  return r;
}

RowShapeReport row_shape_report(std::uint32_t n) { return row_shape_report(q_via_recursion(n)); }

}  // namespace nekrasov
