#pragma once

#include <optional>
#include <vector>

#include "conjdim/bigfloat.hpp"
#include "conjdim/multi_poly.hpp"

namespace conjdim {

struct ComplexBall {
  BigComplex mid;
  BigFloat rad;
};

struct RootSet {
  UniPoly poly{NFElem(), {}};
  int precision_digits = 0;
  std::vector<ComplexBall> roots;
  /// Every ball contains exactly one root: the balls are pairwise disjoint
  /// Weierstrass inclusion disks.
  bool certified = false;
};

/// Numeric value of the generator of `field` used to embed coefficients:
/// 0 for Q, i for Q(i), exp(2 pi i / l) for Q(omega_l), otherwise the largest
/// real root of the defining polynomial, or failing that the root with the
/// largest imaginary part.
BigComplex default_generator_value(const FieldPtr& field);

std::vector<BigComplex> numeric_coeffs(const UniPoly& f, const BigComplex& generator);
BigComplex numeric_value(const NFElem& a, const BigComplex& generator);
BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z);

/// All complex roots of a squarefree polynomial to `digits` decimal digits by
/// Aberth iteration over a doubling precision ladder.  Throws Error on
/// non-squarefree input and BudgetExceeded if iteration does not converge.
RootSet roots_numeric(const UniPoly& f, int digits, std::optional<BigComplex> generator = std::nullopt);

/// Roots of a polynomial with numeric coefficients (ascending), refined to
/// `digits` only as far as the coefficients allow.  Not certified.
std::vector<ComplexBall> complex_roots(const std::vector<BigComplex>& coeffs, int digits);

}  // namespace conjdim
