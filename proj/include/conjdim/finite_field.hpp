#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conjdim/irreducibility.hpp"

namespace conjdim {

/// Elements of F_{p^k} are residues mod the field modulus, ascending and
/// trimmed (zero is empty).
using FqElem = ModPoly;
/// Polynomials over F_{p^k}, ascending coefficients.
using FqPoly = std::vector<FqElem>;

class FqField {
 public:
  FqField(std::uint64_t p, int k, ModPoly modulus);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  const ModPoly& modulus() const { return modulus_; }
  std::uint64_t size() const { return size_; }

  FqElem zero() const { return {}; }
  FqElem one() const { return {1}; }
  FqElem x() const;
  FqElem scalar(std::uint64_t c) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem inv(const FqElem& a) const;
  /// a^(p^r)
  FqElem frobenius(const FqElem& a, int r = 1) const;

  /// Elements indexed 0..size-1 by base-p digits, constant term least significant.
  FqElem element(std::uint64_t index) const;
  std::uint64_t index(const FqElem& a) const;
  /// Coordinates on 1, x, ..., x^(k-1).
  std::vector<std::uint64_t> coords(const FqElem& a) const;

  std::string to_string(const FqElem& a, const std::string& var = "x") const;
  std::string modulus_string(const std::string& var = "x") const;

 private:
  std::uint64_t p_;
  int k_;
  ModPoly modulus_;
  std::uint64_t size_;
};

/// Rabin's test over F_p.
bool is_irreducible_mod_p(const ModPoly& f, std::uint64_t p);

/// F_{p^k} with the least irreducible monic modulus, comparing coefficients
/// from x^(k-1) down.  Throws BudgetExceeded when p^k > 2^32.
FqField ff_make(std::uint64_t p, int k);

/// Smallest-index element of order size - 1.
FqElem multiplicative_generator(const FqField& K);
std::uint64_t multiplicative_order(const FqField& K, const FqElem& a);

/// Prime p and exponent e with q = p^e; throws Error otherwise.
std::pair<std::uint64_t, int> prime_power_parts(std::uint64_t q);

/// The subfield F_q of K (q = p^e, e | k), as the powers of a fixed generator
/// of F_q^*; zero is not listed.
struct Subfield {
  std::uint64_t q = 0;
  FqElem zeta;  // generator of F_q^*
  std::vector<FqElem> basis;  // 1, zeta, ..., zeta^(e-1), an F_p-basis
};
Subfield subfield(const FqField& K, std::uint64_t q);
bool in_subfield(const FqField& K, const FqElem& a, std::uint64_t q);

/// Rank over F_p of the coordinate vectors.
int rank_mod_p(const FqField& K, const std::vector<FqElem>& v);
/// dim over F_q of the F_q-span of v.
int span_dimension(const FqField& K, const std::vector<FqElem>& v, const Subfield& fq);

/// Orbit of a under a -> a^q, starting at a.
std::vector<FqElem> frobenius_orbit(const FqField& K, const FqElem& a, std::uint64_t q);

// Polynomials over K.
void trim(const FqField& K, FqPoly& f);
FqPoly poly_mul(const FqField& K, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> poly_divmod(const FqField& K, const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(const FqField& K, const FqPoly& a, const FqPoly& b);
FqElem poly_eval(const FqField& K, const FqPoly& f, const FqElem& x);
std::string poly_to_string(const FqField& K, const FqPoly& f, const std::string& var = "X");

/// Irreducibility over F_q for f with coefficients in F_q inside K.
bool is_irreducible_over(const FqField& K, const FqPoly& f, std::uint64_t q);

/// sum c_i X^(q^i), coefficients in F_q inside `field`.
struct LinearizedPoly {
  std::uint64_t base_q = 0;
  std::vector<FqElem> coeffs;

  FqElem operator()(const FqField& K, const FqElem& x) const;
  /// Dense form sum c_i X^(q^i).
  FqPoly dense() const;
};

/// Throws Error unless f is monic, has coefficients in F_q and is irreducible over F_q.
LinearizedPoly linearized_from_minpoly(const FqField& K, const FqPoly& f, std::uint64_t q);

struct DqnReport {
  std::uint64_t q = 0;
  int n = 0;
  std::uint64_t p = 0;
  int e = 0;
  std::uint64_t d = 0;  // q^n - 1
  std::string small_field_modulus;  // F_{q^n}
  std::string generator;            // g in F_{q^n}
  std::string minpoly;              // f over F_q, coefficients written in K
  std::string linearized;           // L
  std::string field_modulus;        // K = F_{q^d}
  std::string alpha;
  std::vector<std::string> orbit;
  int orbit_size = 0;
  int span_dimension = 0;
  int root_space_dimension = 0;  // dim over F_q of the zeros of L in K
  bool roots_brute_forced = false;
  bool passed = false;
};

/// Builds g, f, L for (q, n), takes a nonzero zero alpha of L in F_{q^d},
/// d = q^n - 1, and measures the Frobenius orbit and the F_q-span of alpha.
/// Throws BudgetExceeded when q^d > 2^32.
DqnReport verify_Dqn(std::uint64_t q, int n);

struct ScanLevel {
  int m = 0;
  std::uint64_t elements = 0;
  std::uint64_t max_degree_within = 0;  // largest degree among elements of dimension <= n
  std::vector<std::string> violations;  // dimension <= n and degree > q^n - 1
};

struct ScanReport {
  std::uint64_t q = 0;
  int n = 0;
  std::uint64_t bound = 0;  // q^n - 1
  std::vector<ScanLevel> levels;
  bool passed = false;
};

/// Every alpha in F_{q^m}, 1 <= m <= m_max: degree and conjugate dimension over F_q.
ScanReport scan_upper_bound(std::uint64_t q, int n, int m_max);

struct SubspacePoly {
  FqPoly poly;  // prod (X - v)
  int dimension = 0;
  bool linearized = false;  // only exponents 1, q, ..., q^dim carry nonzero coefficients
};

/// Throws Error if V is not an F_q-subspace of K.
SubspacePoly linearized_poly_of_subspace(const FqField& K, const std::vector<FqElem>& V, std::uint64_t q);

}  // namespace conjdim
