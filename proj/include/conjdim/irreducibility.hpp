#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjdim/multi_poly.hpp"

namespace conjdim {

/// Dense polynomial over F_p, ascending coefficients in [0, p).
using ModPoly = std::vector<std::uint64_t>;

struct FactorDegreeProfile {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  // ascending, with multiplicity
  bool squarefree_mod_p = true;
};

struct ModpFactorization {
  FactorDegreeProfile profile;
  std::vector<ModPoly> factors;  // monic irreducible factors, repeated by multiplicity
  std::uint64_t leading = 1;     // f = leading * prod(factors) mod p
};

/// Complete factorization of f mod p.  f must have rational coefficients;
/// p must not divide the leading coefficient or any denominator.
ModpFactorization factor_mod_p(const UniPoly& f, std::uint64_t p);

enum class Verdict { Irreducible, Reducible, Unknown };
std::string to_string(Verdict v);

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::Unknown;
  std::vector<FactorDegreeProfile> evidence;
  bool recombination_checked = false;
  std::optional<UniPoly> witness_factor;
  int phase = 0;  // 1 = degree sets, 2 = Hensel lifting and recombination
  std::string note;
};

struct CertificateBudget {
  int primes = 25;
  std::uint64_t first_prime = 101;
  long long max_candidates = 1000000;
};

/// Certificate over the coefficient field of f.  Over a number field K the
/// question is reduced to Q through the norm of f(y - s*theta) for a small
/// shift s making the norm squarefree.
IrreducibilityCertificate irreducibility_certificate(const UniPoly& f, const CertificateBudget& budget = {});

/// Res_t(m(t), g(y, t)) where the coefficients of g are read as polynomials in
/// the generator t of their field and m is its defining polynomial.
UniPoly norm_to_q(const UniPoly& g);

/// Monic irreducible factors over Q with multiplicity, by Hensel lifting and
/// Zassenhaus recombination.  Throws BudgetExceeded if recombination runs
/// out of candidates.
std::vector<UniPoly> factor_over_q(const UniPoly& f, const CertificateBudget& budget = {});

/// Deterministic sequence of good primes for f (p > first, p not dividing the
/// leading coefficient, f squarefree mod p).
std::vector<std::uint64_t> good_primes(const UniPoly& f, int count, std::uint64_t first = 101);

namespace modp {
void trim(ModPoly& a);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly rem(const ModPoly& a, const ModPoly& b, std::uint64_t p);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly make_monic(const ModPoly& a, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
}  // namespace modp

bool is_prime(std::uint64_t n);

}  // namespace conjdim
