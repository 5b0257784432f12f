#include "nekrasov/enclosure.hpp"

#include <stdexcept>

namespace nekrasov {

Interval enclose(const Rational& value) {
  // Round the exact rational straight to double in each direction.
  BigFloat lo(53);
  BigFloat hi(53);
  mpfr_set_q(lo.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), value.get_mpq_t(), MPFR_RNDU);
  return {lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)};
}

Interval enclose(const BigInt& value) { return enclose(Rational(value)); }

Interval to_interval(const BigFloat& lo, const BigFloat& hi) {
  return {lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)};
}

namespace {

// Rounds x to a dyadic rational with the given fractional bits, toward -inf or +inf.
Rational to_dyadic(const BigFloat& x, unsigned fractional_bits, bool upward) {
  BigFloat scaled(x.precision() + 8);
  mpfr_mul_2ui(scaled.get(), x.get(), fractional_bits, MPFR_RNDN);  // exact
  BigInt integer;
  mpfr_get_z(integer.get_mpz_t(), scaled.get(), upward ? MPFR_RNDU : MPFR_RNDD);
  Rational r(integer);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), fractional_bits);
  return r;
}

}  // namespace

std::pair<Rational, Rational> pi_squared_over_six_enclosure(unsigned fractional_bits) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(fractional_bits) + 64;
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  mpfr_sqr(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_div_ui(lo.get(), lo.get(), 6, MPFR_RNDD);
  mpfr_div_ui(hi.get(), hi.get(), 6, MPFR_RNDU);
  return {to_dyadic(lo, fractional_bits, false), to_dyadic(hi, fractional_bits, true)};
}

Rational log_lower_bound(const BigInt& x, unsigned fractional_bits) {
  if (x < 1) throw std::invalid_argument("log_lower_bound requires x >= 1");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(fractional_bits) + 64;
  BigFloat v(prec);
  mpfr_set_z(v.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_log(v.get(), v.get(), MPFR_RNDD);
  return to_dyadic(v, fractional_bits, false);
}

}  // namespace nekrasov
