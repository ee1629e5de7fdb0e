#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjdim/conj_dim.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/irreducibility.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/tables.hpp"

namespace conjdim {

/// R(x1) = constant * P_N(x1)^power from eliminating x2..xn from I_j = c_j.
struct AuxiliaryPoly {
  UniPoly resultant{NFElem(), {}};
  UniPoly poly{NFElem(), {}};  // monic P_N
  NFElem constant;
  int power = 1;       // #G_1 = |G| / N
  int orbit_size = 0;  // N, orbit of e1
};

/// Throws DegenerateConstants (carrying the degree reached) when R is zero,
/// has the wrong degree, or P_N is not squarefree of degree N.
AuxiliaryPoly eliminate_to_auxiliary(const InvariantSystem& sys, const std::vector<NFElem>& c);

struct ShiftedMinpoly {
  UniPoly resultant{NFElem(), {}};
  UniPoly poly{NFElem(), {}};  // monic minimal polynomial of alpha
  int power = 1;               // resultant = const * poly^power when no factor had to be chosen
  IrreducibilityCertificate certificate;
  bool factor_selected = false;
  std::string note;
};

struct ShiftedOptions {
  bool certify = true;
  int digits = 30;  // numeric precision for factor selection
};

/// Minimal polynomial of alpha = b1 x1 + b2 x2 over a point of I_j = c_j,
/// n = 2, as the x2-resultant after substituting x1 = (y - b2 x2) / b1.
/// Weights are coordinates on x1, x2.
ShiftedMinpoly minpoly_by_shifted_resultant(const InvariantSystem& sys, const std::vector<NFElem>& c,
                                            const std::vector<Rational>& weights, const ShiftedOptions& opt = {});

/// Weights as used on the command line mapped to coordinates on x1, x2.  For
/// G2 the input is taken in the basis (beta, omega3 * beta), so (b1, b2) maps
/// to (b1, -b2); every other group uses coordinates directly.
std::vector<Rational> coordinate_weights(const std::string& group, const std::vector<Rational>& b);

/// A numeric point of the variety I_j = c_j (n = 2), from a root of P_N.
std::vector<BigComplex> numeric_point(const InvariantSystem& sys, const std::vector<NFElem>& c,
                                      const AuxiliaryPoly& aux, int digits);

struct F4Chain {
  std::vector<Rational> invariant_values;  // I2, I6, I8, I12
  Rational s2;
  UniPoly gamma_cubic{NFElem(), {}};  // monic, in gamma = s8
  IrreducibilityCertificate cubic_certificate;
  FieldPtr k;  // Q(gamma)
  NFElem s4, s6;
  UniPoly q4{NFElem(), {}};  // over Q(gamma), zeros beta_i^2
  Rational q4_discriminant;
  bool discriminant_rational = false;
  bool discriminant_is_square = false;  // in Q(gamma), decided through the odd degree of the field
  RealRootCount q4_roots;
  UniPoly cubic_resolvent{NFElem(), {}};  // over Q(gamma)
  IrreducibilityCertificate resolvent_certificate;
  UniPoly p24{NFElem(), {}};  // monic, over Q
  std::optional<IrreducibilityCertificate> p24_certificate;
};

/// Elimination of s4, s6 from the F4 invariant equations, Q4 and P24.
F4Chain f4_gamma_chain(const std::vector<Rational>& values = {30, 1410, 13670, 1161749}, bool certify_p24 = false);

/// The reference Q4 (over Q(gamma)) and P24 (over Q) as printed.
UniPoly f4_reference_q4(const FieldPtr& k);
UniPoly f4_reference_p24();

/// y - sum w_i u_i eliminated against the Cauchy modules of f(u^2): the product
/// of y - sum w_i eps_i sqrt(r_sigma(i)) over all signs and orderings.
UniPoly weighted_sqrt_tower(const UniPoly& f, const std::vector<Rational>& weights);

/// Same orbit product for alpha = prod ((1 + sqrt r_i) / (1 - sqrt r_i))^w_i.
UniPoly mult_sqrt_tower(const UniPoly& f, const std::vector<int>& exponents);

struct SqrtMinpoly {
  UniPoly poly{NFElem(), {}};
  IrreducibilityCertificate certificate;
  bool numeric_assisted = false;
  std::string note;
};

/// Minimal polynomial of sum w_i sqrt(r_i), r_i the roots of f.  Exact for
/// deg f <= 3; deg f = 4 goes through the numeric orbit product.
SqrtMinpoly minpoly_of_weighted_sqrts(const UniPoly& f, const std::vector<Rational>& weights, bool certify = true);

/// Orbit product at high precision, coefficients rounded to integers.  Requires
/// f monic integral and integer weights.  Throws Error if a coefficient is not
/// within 1e-20 of an integer.
UniPoly weighted_sqrt_numeric(const UniPoly& f, const std::vector<Rational>& weights);

/// Numeric conjugates sum w_i eps_i sqrt(r_sigma(i)), identity first.
std::vector<BigComplex> sqrt_conjugates(const UniPoly& f, const std::vector<Rational>& weights, int digits);

/// Numeric conjugates prod s_sigma(i)^(eps_i w_i), identity first.
std::vector<BigComplex> mult_conjugates(const UniPoly& f, const std::vector<int>& exponents, int digits);

struct SqrtCriteria {
  Rational leading;  // a_n, the constant term of f up to sign convention x^n + ... + a_n
  Rational discriminant;
  bool an_condition = false;  // a_n not in Delta^Z Q*^2
  RealRootCount roots;
  bool corollary_hypothesis = false;  // all real, exactly one negative
  std::string odd_condition;          // "not needed (n even)", "implied by the real-root pattern" or "not checked exactly"
};

SqrtCriteria check_sqrt_criteria(const UniPoly& f);

/// x - 2 for n = 1, x^n + (-1)^n (x - 1) otherwise.
UniPoly nonexceptional_poly(int n);

struct Construction {
  std::string kind;  // "group", "f4", "sqrt", "mult"
  std::string group_name;
  GroupPtr group;
  std::optional<InvariantSystem> invariants;
  std::vector<NFElem> c;
  std::vector<Rational> b;             // as given
  std::vector<Rational> coordinate_b;  // on x1..xn
  std::optional<AuxiliaryPoly> auxiliary;
  std::optional<UniPoly> base_poly;  // f for the square-root families
  std::optional<UniPoly> alpha_minpoly;
  std::optional<IrreducibilityCertificate> certificate;
  std::optional<IrreducibilityCertificate> auxiliary_certificate;
  Integer degree = 0;  // claimed degree of alpha
  int conj_dim_claimed = 0;
  Base base;
  std::optional<long long> orbit_size;
  std::optional<bool> stabilizer_trivial;
  std::optional<int> orbit_rank;
  std::optional<int> exponent_rank;
  std::optional<int> distinct_conjugates;
  std::optional<bool> numeric_cross_check;
  std::optional<DimReport> dim_report;
  std::optional<F4Chain> f4;
  BoundVerdict bounds = BoundVerdict::OK;
  bool numeric_assisted = false;
  std::vector<std::string> notes;
};

struct ConstructOptions {
  bool certify = true;
  bool verify = true;  // run the conj-dim verifier on minimal polynomials over Q
  int digits = 30;
  int max_trials = 200;  // constant search
};

/// Default constants for the built-in exceptional groups: (0, 2) for G2 and
/// (1 + i, 1) for ST8.  Empty when a search is needed.
std::vector<NFElem> default_constants(const InvariantSystem& sys);

/// Deterministic search over small integer constants; the first c whose P_N
/// is squarefree of degree N and certified irreducible wins.
std::vector<NFElem> search_constants(const InvariantSystem& sys, int max_trials, std::vector<std::string>* notes = nullptr);

/// The group pipeline for G2, ST8, Bn, Gl1n (and F4 through the gamma chain).
Construction construct(const std::string& group, int n, int l, std::optional<std::vector<NFElem>> c,
                       std::optional<std::vector<Rational>> b, const ConstructOptions& opt = {});

Construction build_nonexceptional(int n, const ConstructOptions& opt = {});
Construction build_mult_example(int n, const ConstructOptions& opt = {});

/// Parses "a,b,..." where each entry is an expression in the generator of `field`.
std::vector<NFElem> parse_constants(const std::string& text, const FieldPtr& field);
std::vector<Rational> parse_rationals(const std::string& text);

}  // namespace conjdim
