#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "conjdim/dense_poly.hpp"
#include "conjdim/number_field.hpp"

namespace conjdim {

using UniPoly = DensePoly<NFElem>;

/// Polynomial over `field` with rational coefficients given in ascending order.
UniPoly make_unipoly(const FieldPtr& field, const std::vector<Rational>& coeffs);
UniPoly make_unipoly(const FieldPtr& field, const std::vector<NFElem>& coeffs);
UniPoly unipoly_x(const FieldPtr& field);
std::string to_string(const UniPoly& p, const std::string& var = "x");

constexpr int kMaxVars = 8;
/// Exponent vector.  Lexicographic comparison of the array is the term order,
/// so the first variable is the most significant.
using Monomial = std::array<std::uint16_t, kMaxVars>;

/// Sparse multivariate polynomial over a NumberField.  Zero coefficients are
/// never stored.
class MultiPoly {
 public:
  MultiPoly();  // zero polynomial over Q with no variables
  MultiPoly(FieldPtr field, std::vector<std::string> vars);

  static MultiPoly constant(const FieldPtr& field, const std::vector<std::string>& vars, const NFElem& c);
  static MultiPoly variable(const FieldPtr& field, const std::vector<std::string>& vars, int index);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int arity() const { return static_cast<int>(vars_.size()); }
  int var_index(const std::string& name) const;
  const std::map<Monomial, NFElem>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  NFElem constant_term() const;
  NFElem coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const NFElem& c);

  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const NFElem& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const NFElem& c) { return a *= c; }
  friend MultiPoly operator*(const NFElem& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  NFElem evaluate(std::span<const NFElem> point) const;
  /// x_var -> value
  MultiPoly substitute(int var, const MultiPoly& value) const;
  /// x_i -> values[i] for every i; the results live in values' ring.
  MultiPoly substitute_all(std::span<const MultiPoly> values) const;

  /// View as a polynomial in x_var whose coefficients do not involve x_var.
  DensePoly<MultiPoly> as_univariate_in(int var) const;
  static MultiPoly from_univariate(const DensePoly<MultiPoly>& p, int var);
  /// Requires every other variable to be absent.
  UniPoly to_unipoly(int var) const;
  static MultiPoly from_unipoly(const UniPoly& p, const std::vector<std::string>& vars, int var);

  /// Same polynomial in a different variable list; `map[i]` is the new index of old var i.
  MultiPoly remap(const std::vector<std::string>& new_vars, const std::vector<int>& map) const;

  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  FieldPtr field_;
  std::vector<std::string> vars_;
  std::map<Monomial, NFElem> terms_;
};

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.field(), p.vars()); }
inline MultiPoly one_like(const MultiPoly& p) {
  return MultiPoly::constant(p.field(), p.vars(), NFElem(p.field(), Rational(1)));
}
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly from_integer_like(const MultiPoly& p, long v) {
  return MultiPoly::constant(p.field(), p.vars(), NFElem(p.field(), Rational(v)));
}
/// Exact division; throws Error if b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// Parses expressions such as "x1^2 - 3/2*x1*x2 + (1+i)*x2" over `field`.
/// The imaginary unit "i" is accepted when the field is Q(i); "w" names the
/// generator of any other field.
MultiPoly parse_multipoly(const std::string& text, const FieldPtr& field, const std::vector<std::string>& vars);

}  // namespace conjdim
