#pragma once

#include <mpfr.h>

#include <string>

#include "conjdim/rational.hpp"

namespace conjdim {

/// Working precision in bits for newly created BigFloat values on this thread.
mpfr_prec_t working_precision();

/// Sets the working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

mpfr_prec_t digits_to_bits(int digits);

/// Value-semantic wrapper over mpfr_t, round to nearest.
class BigFloat {
 public:
  BigFloat();
  BigFloat(long v);  // NOLINT(google-explicit-constructor)
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT
  explicit BigFloat(double v);
  explicit BigFloat(const Integer& v);
  explicit BigFloat(const Rational& v);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer.
  Integer round() const;
  /// Decimal string with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pi();
BigFloat pow2(long e);
BigFloat max(const BigFloat& a, const BigFloat& b);

struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i = BigFloat(0L)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  BigFloat norm2() const { return re * re + im * im; }
  BigFloat abs() const;
  BigFloat arg() const;
  std::string to_string(int digits = 20) const;
};

BigComplex polar(const BigFloat& r, const BigFloat& theta);
BigComplex csqrt(const BigComplex& z);
BigComplex cpow(const BigComplex& z, long e);

}  // namespace conjdim
