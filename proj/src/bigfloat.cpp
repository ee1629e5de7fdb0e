#include "conjdim/bigfloat.hpp"

#include <cmath>
#include <vector>

namespace conjdim {

namespace {
thread_local mpfr_prec_t g_precision = 256;
}

mpfr_prec_t working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_precision) { g_precision = bits; }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

mpfr_prec_t digits_to_bits(int digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16; }

BigFloat::BigFloat() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(long v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(double v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const Integer& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const Rational& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Integer BigFloat::round() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

namespace {
template <typename F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r;
  mpfr_set_prec(r.get(), std::max(x.precision(), working_precision()));
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
BigFloat pi() {
  BigFloat r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
BigFloat pow2(long e) {
  BigFloat r(1L);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat d = o.norm2();
  BigFloat r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}
BigFloat BigComplex::abs() const {
  BigFloat r;
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}
BigFloat BigComplex::arg() const { return atan2(im, re); }
std::string BigComplex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  std::string i = im.to_string(digits);
  if (i[0] == '-') return s + " - " + i.substr(1) + "*i";
  return s + " + " + i + "*i";
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

BigComplex csqrt(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return z;
  return polar(sqrt(z.abs()), z.arg() / BigFloat(2L));
}

BigComplex cpow(const BigComplex& z, long e) {
  if (e < 0) return BigComplex(BigFloat(1L)) / cpow(z, -e);
  BigComplex r(BigFloat(1L)), b = z;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace conjdim
