#include "nekrasov/power_chain.hpp"

#include <algorithm>
#include <cfenv>
#include <stdexcept>
#include <string>

namespace nekrasov {

namespace {

constexpr std::size_t kMinBlock = 64;

std::size_t first_nonzero(const std::vector<double>& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0.0) ++i;
  return i;
}

void require_nonnegative(const RationalSeries& base, std::size_t capacity) {
  for (std::size_t i = 0; i < std::min(capacity, base.order() + 1); ++i) {
    if (sgn(base[i]) < 0) {
      throw std::invalid_argument("interval power chains need a nonnegative base series");
    }
  }
}

void require_order(const RationalSeries& base, std::size_t capacity) {
  if (capacity == 0 || base.order() + 1 < capacity) {
    throw std::invalid_argument("base series truncated at " + std::to_string(base.order()) +
                                " cannot feed " + std::to_string(capacity) + " coefficients");
  }
}

// a^2 vs b*c, decided exactly from enclosures [x_lo, x_hi] with x_lo >= 0.
TripleVerdict classify_enclosures(mpfr_srcptr a_lo, mpfr_srcptr a_hi, mpfr_srcptr b_lo,
                                  mpfr_srcptr b_hi, mpfr_srcptr c_lo, mpfr_srcptr c_hi,
                                  mpfr_prec_t precision) {
  // Products of two p-bit values are exact at 2p bits.
  BigFloat lhs(2 * precision);
  BigFloat rhs(2 * precision);
  mpfr_mul(lhs.get(), a_lo, a_lo, MPFR_RNDD);
  mpfr_mul(rhs.get(), b_hi, c_hi, MPFR_RNDU);
  if (mpfr_greaterequal_p(lhs.get(), rhs.get())) return TripleVerdict::holds;
  mpfr_mul(lhs.get(), a_hi, a_hi, MPFR_RNDU);
  mpfr_mul(rhs.get(), b_lo, c_lo, MPFR_RNDD);
  if (mpfr_less_p(lhs.get(), rhs.get())) return TripleVerdict::violated;
  return TripleVerdict::ambiguous;
}

}  // namespace

PowerChain::PowerChain(std::uint32_t power, std::size_t capacity)
    : power_(power), capacity_(capacity) {
  if (power == 0) throw std::invalid_argument("power chains start at the first power");
}

void PowerChain::extend_to(std::size_t n) {
  if (n < computed_) return;
  if (n >= capacity_) {
    throw std::out_of_range("coefficient " + std::to_string(n) + " exceeds chain capacity " +
                            std::to_string(capacity_));
  }
  const std::size_t growth = std::max(kMinBlock, computed_ / 4);
  const std::size_t target = std::min(capacity_, std::max(n + 1, computed_ + growth));
  for (std::uint32_t j = 1; j <= power_; ++j) compute_block(j, computed_, target);
  computed_ = target;
}

TripleVerdict PowerChain::log_concavity_at(std::size_t n) {
  if (n == 0) throw std::invalid_argument("log-concavity needs an interior index");
  extend_to(n + 1);
  return classify(n);
}

// ---------------------------------------------------------------- exact

ExactPowerChain::ExactPowerChain(const RationalSeries& base, std::uint32_t power,
                                 std::size_t capacity)
    : PowerChain(power, capacity), powers_(power) {
  require_order(base, capacity);
  auto scaled = ScaledSeries::from(base.truncated(capacity - 1));
  scale_ = scaled.denominator;
  powers_[0] = std::move(scaled.numerators);
}

void ExactPowerChain::compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) {
  if (j == 1) return;  // the base is known up front
  const auto& base = powers_[0];
  const auto& prev = powers_[j - 2];
  auto& out = powers_[j - 1];
  out.resize(hi);
  for (std::size_t n = lo; n < hi; ++n) out[n] = 0;
  for (std::size_t m = 0; m < hi; ++m) {
    if (prev[m] == 0) continue;
    for (std::size_t n = std::max(lo, m); n < hi; ++n) {
      if (base[n - m] != 0) {
        mpz_addmul(out[n].get_mpz_t(), prev[m].get_mpz_t(), base[n - m].get_mpz_t());
      }
    }
  }
}

TripleVerdict ExactPowerChain::classify(std::size_t n) const {
  const auto& c = top();
  const BigInt lhs = c[n] * c[n];
  const BigInt rhs = c[n - 1] * c[n + 1];
  return lhs >= rhs ? TripleVerdict::holds : TripleVerdict::violated;
}

Rational ExactPowerChain::value(std::size_t n) {
  extend_to(n);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), scale_.get_mpz_t(), power());
  Rational r(top()[n], den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- double

DoubleIntervalPowerChain::DoubleIntervalPowerChain(const RationalSeries& base,
                                                   std::uint32_t power, std::size_t capacity)
    : PowerChain(power, capacity), lo_(power), hi_(power) {
  require_order(base, capacity);
  require_nonnegative(base, capacity);
  lo_[0].resize(capacity);
  hi_[0].resize(capacity);
  for (std::size_t i = 0; i < capacity; ++i) {
    const auto e = enclose(base[i]);
    lo_[0][i] = e.lo;
    hi_[0][i] = e.hi;
  }
}

void DoubleIntervalPowerChain::compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) {
  if (j == 1) return;
  auto run = [&](std::vector<std::vector<double>>& lane, int mode) {
    auto& out = lane[j - 1];
    out.resize(hi);
    const auto& prev = lane[j - 2];
    RoundingGuard guard(mode);
    kernels::convolve_block(out.data(), lo, hi, prev.data(), lane[0].data(), first_nonzero(prev));
  };
  run(lo_, FE_DOWNWARD);
  run(hi_, FE_UPWARD);
}

TripleVerdict DoubleIntervalPowerChain::classify(std::size_t n) const {
  const auto& lo = lo_.back();
  const auto& hi = hi_.back();
  auto make = [](double v) {
    BigFloat x(53);
    mpfr_set_d(x.get(), v, MPFR_RNDN);  // exact
    return x;
  };
  const BigFloat a_lo = make(lo[n]), a_hi = make(hi[n]);
  const BigFloat b_lo = make(lo[n - 1]), b_hi = make(hi[n - 1]);
  const BigFloat c_lo = make(lo[n + 1]), c_hi = make(hi[n + 1]);
  if (!mpfr_number_p(a_hi.get()) || !mpfr_number_p(b_hi.get()) || !mpfr_number_p(c_hi.get())) {
    return TripleVerdict::ambiguous;  // overflowed enclosure
  }
  return classify_enclosures(a_lo.get(), a_hi.get(), b_lo.get(), b_hi.get(), c_lo.get(),
                             c_hi.get(), 53);
}

Interval DoubleIntervalPowerChain::enclosure(std::size_t n) {
  extend_to(n);
  return {lo_.back()[n], hi_.back()[n]};
}

// ---------------------------------------------------------------- MPFR

MpfrIntervalPowerChain::MpfrIntervalPowerChain(const RationalSeries& base, std::uint32_t power,
                                               std::size_t capacity, unsigned precision)
    : PowerChain(power, capacity), precision_(precision), lo_(power), hi_(power) {
  if (precision < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  require_order(base, capacity);
  require_nonnegative(base, capacity);
  lo_[0].reserve(capacity);
  hi_[0].reserve(capacity);
  for (std::size_t i = 0; i < capacity; ++i) {
    lo_[0].emplace_back(precision);
    hi_[0].emplace_back(precision);
    mpfr_set_q(lo_[0].back().get(), base[i].get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_[0].back().get(), base[i].get_mpq_t(), MPFR_RNDU);
  }
}

void MpfrIntervalPowerChain::compute_block(std::uint32_t j, std::size_t lo, std::size_t hi) {
  if (j == 1) return;
  auto run = [&](std::vector<std::vector<BigFloat>>& lane, mpfr_rnd_t rnd) {
    auto& out = lane[j - 1];
    const auto& prev = lane[j - 2];
    const auto& base = lane[0];
    while (out.size() < hi) out.emplace_back(precision_);
    for (std::size_t n = lo; n < hi; ++n) mpfr_set_zero(out[n].get(), 1);
    for (std::size_t m = 0; m < hi; ++m) {
      if (mpfr_zero_p(prev[m].get())) continue;
      for (std::size_t n = std::max(lo, m); n < hi; ++n) {
        if (mpfr_zero_p(base[n - m].get())) continue;
        mpfr_fma(out[n].get(), prev[m].get(), base[n - m].get(), out[n].get(), rnd);
      }
    }
  };
  run(lo_, MPFR_RNDD);
  run(hi_, MPFR_RNDU);
}

TripleVerdict MpfrIntervalPowerChain::classify(std::size_t n) const {
  const auto& lo = lo_.back();
  const auto& hi = hi_.back();
  return classify_enclosures(lo[n].get(), hi[n].get(), lo[n - 1].get(), hi[n - 1].get(),
                             lo[n + 1].get(), hi[n + 1].get(),
                             static_cast<mpfr_prec_t>(precision_));
}

std::pair<BigFloat, BigFloat> MpfrIntervalPowerChain::enclosure(std::size_t n) {
  extend_to(n);
  return {lo_.back()[n], hi_.back()[n]};
}

}  // namespace nekrasov
