#ifndef NEKRASOV_ANALYSIS_HPP
#define NEKRASOV_ANALYSIS_HPP

#include "nekrasov/darcais.hpp"
#include "nekrasov/enclosure.hpp"
#include "nekrasov/rational.hpp"
#include "nekrasov/series.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nekrasov {

// ---------------------------------------------------------------- sequences

/// Smallest interior i with seq[i]^2 < seq[i-1] seq[i+1], if any.
std::optional<std::size_t> first_log_concavity_violation(std::span<const Rational> seq);
std::optional<std::size_t> first_log_concavity_violation(std::span<const BigInt> seq);

struct Unimodality {
  bool unimodal = false;
  std::size_t mode = 0;  // leftmost argmax
};

/// Weakly rising then weakly falling. Throws std::invalid_argument on an empty sequence.
Unimodality check_unimodal(std::span<const Rational> seq);

/// seq[k] >= seq[k+1] for all k >= start. Throws std::out_of_range unless start < size.
bool tail_monotone_from(std::span<const Rational> seq, std::size_t start);

/// Smallest start for which tail_monotone_from holds.
std::size_t monotone_tail_start(std::span<const Rational> seq);

// ---------------------------------------------------------------- scans

enum class ScanMode { exact, adaptive_float };
enum class Certification { exact, adaptive_float, uncertified };

std::string_view to_string(ScanMode mode);
std::string_view to_string(Certification c);
/// "exact" or "adaptive-float"; throws std::invalid_argument otherwise.
ScanMode parse_scan_mode(std::string_view text);

struct ScanOptions {
  ScanMode mode = ScanMode::adaptive_float;
  /// Highest floating precision tried before the exact fallback.
  unsigned precision_cap = 848;
  /// Triples with n + 1 <= exact_fallback may be settled by exact arithmetic.
  std::size_t exact_fallback = 2048;
  /// First rung of the ladder; 53 uses hardware doubles, anything else MPFR.
  unsigned start_precision = 53;
};

struct ScanReport {
  std::uint32_t k = 0;
  std::size_t n_max = 0;
  std::optional<std::size_t> n0;
  ScanMode mode = ScanMode::exact;
  Certification certification = Certification::exact;
  std::chrono::milliseconds elapsed{0};
  /// Triples decided with a certificate (the last one being n0, when present).
  std::size_t violations_checked = 0;
  /// Highest precision that had to be consulted; 0 when exact arithmetic decided a triple.
  unsigned max_precision_used = 53;
  /// Triple at which certification failed, for uncertified scans.
  std::optional<std::size_t> uncertified_at;
};

/// Smallest n in [2, n_max - 1] with c_{n,k}^2 < c_{n-1,k} c_{n+1,k}, where
/// c_{n,k} is the q^n coefficient of base^k. `base` must be truncated at
/// order >= n_max. In adaptive-float mode each triple is decided by
/// disjoint directed-rounding enclosures, doubling the precision on overlap
/// up to the cap and then falling back to exact arithmetic below the
/// fallback bound; otherwise the report is uncertified and carries no n0.
ScanReport scan_series(const RationalSeries& base, std::uint32_t k, std::size_t n_max,
                       const ScanOptions& options);

/// scan_series over the divisor series f. Requires k >= 2, n_max >= 3.
ScanReport scan_conjecture(std::uint32_t k, std::size_t n_max, const ScanOptions& options);
/// scan_series over a registered rule. Requires k >= 1, n_max >= 3.
ScanReport scan_conjecture_custom(std::string_view rule, std::uint32_t k, std::size_t n_max,
                                  const ScanOptions& options);

/// 4 * 2^k: covers every tabulated first violation (roughly 1.8 * 2^k).
std::size_t default_scan_n_max(std::uint32_t k);

struct ScanJob {
  std::string rule = "sigma-minus-one";
  std::uint32_t k = 2;
  std::size_t n_max = 0;
};

/// Runs independent scans on up to `jobs` threads; results in input order.
std::vector<ScanReport> run_scans(const std::vector<ScanJob>& scan_jobs,
                                  const ScanOptions& options, unsigned jobs);

// ---------------------------------------------------------------- ratios

struct RatioReport {
  std::uint32_t k = 0;
  std::uint64_t n = 0;
  Interval lhs;        // the exact-side quantity
  Interval reference;  // the asymptotic comparison value
  Interval ratio;      // lhs / reference
  double envelope = 0.0;  // error scale, rounded down

  /// Certified upper bound on |ratio - 1|.
  double deviation_bound() const noexcept;
};

/// sum_{m<=n} c_{m,k} / ((pi^2/6)^k binom(n,k)); envelope k^2 ln n / n.
/// Requires k >= 1 and n >= max(2, k^2); throws PreconditionError.
RatioReport power_sum_ratio(std::uint32_t k, std::uint64_t n);

/// p(n) / (e^{pi sqrt(2n/3)} / (4 sqrt(3) n)); envelope 1/sqrt(n). Requires n >= 1.
RatioReport hardy_ramanujan_ratio(std::uint32_t n);

// ---------------------------------------------------------------- surrogates

/// sum_{i=1}^{n-26} p(n-i) binom(i-1, k-1) / k!, i.e. the log-concave
/// surrogate without its constant (pi^2/6)^k factor. n >= 27, k >= 1.
Rational a_tilde(std::uint32_t n, std::uint32_t k);
/// sum_{i=0}^{n-26} p(n-i) c_{i,k} / k!. n >= 27.
Rational a_hat(std::uint32_t n, std::uint32_t k);

/// Values for n = first..last (inclusive), sharing the partition numbers and f^k.
std::vector<Rational> a_tilde_sequence(std::uint32_t k, std::uint32_t first, std::uint32_t last);
std::vector<Rational> a_hat_sequence(std::uint32_t k, std::uint32_t first, std::uint32_t last);

// ---------------------------------------------------------------- reports

struct RowShapeReport {
  std::uint32_t n = 0;
  std::optional<std::size_t> first_violation;
  bool unimodal = false;
  std::size_t mode = 0;
  std::size_t tail_start = 0;
  double log_concave_scale = 0.0;  // n^{1/6} / ln n
  double tail_scale = 0.0;         // sqrt(n) ln n
};

RowShapeReport row_shape_report(const QPolynomial& q);
RowShapeReport row_shape_report(std::uint32_t n);

}  // namespace nekrasov

#endif  // NEKRASOV_ANALYSIS_HPP
