#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjdim/multi_poly.hpp"
#include "conjdim/resultant.hpp"

namespace conjdim {

UniPoly monic(const UniPoly& f);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

/// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);
bool is_squarefree(const UniPoly& f);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f).
NFElem discriminant(const UniPoly& f);

/// Newton's recurrence k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j.
/// Input p_1..p_n, output e_1..e_n.
std::vector<NFElem> powersums_to_elementary(const std::vector<NFElem>& p);

/// Elementary symmetric functions e_1..e_n of n variables as polynomials in
/// the power sums p_1..p_n (named by `p_vars`).
std::vector<MultiPoly> elementary_in_powersums(int n, const FieldPtr& field, const std::vector<std::string>& p_vars);

/// Power sums p_1..p_kmax of n variables as polynomials in p_1..p_n.
std::vector<MultiPoly> powersums_in_basis(int n, int kmax, const FieldPtr& field,
                                          const std::vector<std::string>& p_vars);

/// p_k of n variables as a polynomial in e_1..e_n (named by `e_vars`).
MultiPoly powersum_in_elementary(int k, int n, const FieldPtr& field, const std::vector<std::string>& e_vars);

/// `expr` is a polynomial in power sums p_{w_1}, ..., p_{w_m} of n variables,
/// where w_j = weights[j] is the index of expr's j-th variable.  Every p_k with
/// k > n is rewritten through Newton's identities; the result is the same
/// symmetric function as a polynomial in p_1..p_n named by `out_vars`.
MultiPoly newton_reduce(const MultiPoly& expr, const std::vector<int>& weights, int n,
                        const std::vector<std::string>& out_vars);

struct PowerRoot {
  UniPoly root;  // monic
  NFElem constant;  // R = constant * root^m
};

/// Finds monic P with R = c P^m; throws Error if R is not an m-th power up to a constant.
PowerRoot perfect_power_root(const UniPoly& r, int m);

/// a in Delta^Z * Q*^2, i.e. a or a*Delta is a rational square.
bool in_delta_square_class(const Rational& a, const Rational& delta);

/// A rational is a square in an odd-degree field iff it is a square in Q.
bool rational_square_in_odd_degree_field(const Rational& q, const NumberField& k);

/// Rational interval [lo, hi] containing exactly one real root of a rational polynomial.
struct RealInterval {
  Rational lo, hi;
};

/// Isolating intervals for every real root of a squarefree polynomial over Q, ascending.
std::vector<RealInterval> isolate_real_roots(const UniPoly& f);

/// Shrinks an isolating interval of f until its width is below `width`.
RealInterval refine_root(const UniPoly& f, RealInterval iv, const Rational& width);

/// A real embedding of a number field: the generator lies in `iv`, which
/// isolates one real root of the defining polynomial.
class RealEmbedding {
 public:
  RealEmbedding(FieldPtr field, RealInterval iv);
  /// Embedding at the largest real root of the defining polynomial.
  static RealEmbedding largest_real_root(const FieldPtr& field);
  static RealEmbedding rational(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const RealInterval& interval() const { return iv_; }
  /// Exact sign of an element under this embedding.
  int sign(const NFElem& a);

 private:
  FieldPtr field_;
  RealInterval iv_;
};

struct RealRootCount {
  int real_roots = 0;
  int negative_roots = 0;
  int positive_roots = 0;
  bool zero_is_root = false;
};

/// Sturm-sequence count of real roots of a squarefree f under a real embedding of its coefficient field.
RealRootCount count_real_roots(const UniPoly& f, RealEmbedding& emb);

/// Monic f, irreducibility certified unless `assert_irreducible`.  Throws on
/// non-monic input, on a reducible certificate, or on an inconclusive one
/// without assertion.
FieldPtr make_number_field(const UniPoly& defining_poly, const std::string& label, bool assert_irreducible = false);

/// Evaluates a polynomial with rational coefficients at a rational point.
Rational evaluate_rational(const UniPoly& f, const Rational& x);

/// Coefficients as rationals; throws if some coefficient is irrational.
std::vector<Rational> rational_coeffs(const UniPoly& f);

/// Scales a rational polynomial to a primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& f);

}  // namespace conjdim
