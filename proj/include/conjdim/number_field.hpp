#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conjdim/rational.hpp"

namespace conjdim {

/// How the irreducibility of a defining polynomial was established.
enum class IrreducibilityProvenance { Trivial, Certified, Asserted };

std::string to_string(IrreducibilityProvenance p);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q(theta) given by a monic defining polynomial, with
/// elements in the power basis 1, theta, ..., theta^(d-1).  Q itself is the
/// degree-1 field defined by x - 0.
class NumberField {
 public:
  /// `modulus` holds ascending coefficients of a monic polynomial of degree >= 1.
  /// Irreducibility is not checked here; see make_number_field() in poly_algebra.hpp.
  NumberField(std::vector<Rational> modulus, std::string label, IrreducibilityProvenance provenance);

  static FieldPtr create(std::vector<Rational> modulus, std::string label,
                         IrreducibilityProvenance provenance);
  static const FieldPtr& rationals();

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  const std::string& label() const { return label_; }
  IrreducibilityProvenance provenance() const { return provenance_; }
  bool is_rationals() const { return degree() == 1 && modulus_[0] == 0; }

  /// Same defining polynomial.  Labels are cosmetic.
  bool equivalent(const NumberField& other) const { return modulus_ == other.modulus_; }

  // Coordinate-level kernels shared by NFElem and dense matrix code.
  void multiply(std::span<const Rational> a, std::span<const Rational> b, std::span<Rational> out) const;
  void multiply_accumulate(std::span<const Rational> a, std::span<const Rational> b,
                           std::span<Rational> acc) const;
  std::vector<Rational> inverse(std::span<const Rational> a) const;

 private:
  std::vector<Rational> modulus_;
  std::string label_;
  IrreducibilityProvenance provenance_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a NumberField.  Immutable value semantics; arithmetic between
/// elements of different fields throws FieldMismatch.
class NFElem {
 public:
  NFElem();  // 0 in Q
  explicit NFElem(FieldPtr field);
  NFElem(FieldPtr field, const Rational& q);
  NFElem(FieldPtr field, std::vector<Rational> coords);

  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;

  NFElem inverse() const;
  NFElem pow(long e) const;

  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);
  NFElem& operator*=(const Rational& q);
  NFElem operator-() const;

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend NFElem operator*(NFElem a, const Rational& q) { return a *= q; }
  friend NFElem operator*(const Rational& q, NFElem a) { return a *= q; }
  friend bool operator==(const NFElem& a, const NFElem& b);

  /// "[c0, c1, ...]@label"
  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  void check_same(const NFElem& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

// Ring interface consumed by the generic polynomial templates.
inline NFElem zero_like(const NFElem& a) { return NFElem(a.field()); }
inline NFElem one_like(const NFElem& a) { return NFElem(a.field(), Rational(1)); }
inline bool is_zero(const NFElem& a) { return a.is_zero(); }
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a / b; }
inline NFElem from_integer_like(const NFElem& proto, long v) { return NFElem(proto.field(), Rational(v)); }

/// Q(omega_l) for 1 <= l <= 60, defined by the l-th cyclotomic polynomial.
/// l = 1, 2 give Q; l = 4 is labelled "Q(i)", others "Q(w<l>)".
FieldPtr cyclotomic_field(int l);

/// omega_l as an element of cyclotomic_field(l).
NFElem root_of_unity(int l);

/// Ascending coefficients of the l-th cyclotomic polynomial, by dividing
/// x^l - 1 by Phi_d for every proper divisor d.
std::vector<Rational> cyclotomic_polynomial(int l);

}  // namespace conjdim
