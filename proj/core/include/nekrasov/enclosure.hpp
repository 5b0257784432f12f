#ifndef NEKRASOV_ENCLOSURE_HPP
#define NEKRASOV_ENCLOSURE_HPP

#include "nekrasov/rational.hpp"

#include <mpfr.h>

#include <cfenv>
#include <utility>

namespace nekrasov {

/// Sets the floating-point rounding direction of the calling thread for
/// the lifetime of the guard.
class RoundingGuard {
 public:
  explicit RoundingGuard(int mode) : saved_(std::fegetround()) { std::fesetround(mode); }
  ~RoundingGuard() { std::fesetround(saved_); }
  RoundingGuard(const RoundingGuard&) = delete;
  RoundingGuard& operator=(const RoundingGuard&) = delete;

 private:
  int saved_;
};

/// Owning MPFR value.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }
  BigFloat& operator=(BigFloat other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// A closed interval [lo, hi] of doubles known to contain a real value.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double width() const noexcept { return hi - lo; }
};

/// Encloses a rational by the adjacent doubles in each rounding direction.
Interval enclose(const Rational& value);
Interval enclose(const BigInt& value);

/// Dyadic rationals L <= pi^2/6 <= U with `fractional_bits` fractional bits.
std::pair<Rational, Rational> pi_squared_over_six_enclosure(unsigned fractional_bits = 128);

/// A dyadic rational <= ln(x), for x >= 1.
Rational log_lower_bound(const BigInt& x, unsigned fractional_bits = 128);

/// Round-toward lo/hi conversion of an MPFR pair into an Interval.
Interval to_interval(const BigFloat& lo, const BigFloat& hi);

}  // namespace nekrasov

#endif  // NEKRASOV_ENCLOSURE_HPP
