#pragma once

#include <optional>
#include <vector>

#include "conjdim/groups.hpp"
#include "conjdim/lattice.hpp"
#include "conjdim/roots.hpp"

namespace conjdim {

/// Integer relations found among the roots at one precision.
struct RelationLevel {
  int digits = 0;
  int dimension_upper = 0;
  std::vector<std::vector<Integer>> relations;
  std::vector<std::vector<Rational>> relation_space;  // rref of the relations
  bool roots_certified = false;
};

struct DimReport {
  int degree = 0;
  int dimension_lower = 0;
  int dimension_upper = 0;
  std::vector<std::vector<Integer>> relations;
  bool certified = false;  // lower == upper
  bool stable = false;     // two consecutive precision levels agree
  bool torsion = false;    // multiplicative mode: f is cyclotomic
  std::vector<std::pair<int, int>> precision_trail;  // (digits, upper)
  std::string note;
};

struct LadderOptions {
  int start_digits = 50;  // CONJDIM_DIGITS overrides this when set
  int max_digits = 400;
  int guard_digits = 10;
};

/// Start of the precision ladder: CONJDIM_DIGITS if set, else `fallback`.
int ladder_start_digits(int fallback);

/// Additive relations sum v_i alpha_i = 0 among the roots at a single precision.
RelationLevel qspan_level(const UniPoly& f, int digits, int guard_digits = 10);

/// Dimension of the Q-span of the roots of an irreducible f over Q.
DimReport qspan_dimension(const UniPoly& f, const LadderOptions& opt = {});

/// Multiplicative relations prod alpha_i^v_i = root of unity at a single precision.
RelationLevel mult_level(const UniPoly& f, int digits, int guard_digits = 10);

/// Rank of the multiplicative group generated by the roots; heuristic.
DimReport mult_rank_numeric(const UniPoly& f, const LadderOptions& opt = {});

/// Exact rank of a list of vectors over a number field.
int orbit_rank(const std::vector<Vector>& orbit);

int mult_rank_exponents(const IntMatrix& m);

/// All signed permutations of (1, ..., n) as rows.
IntMatrix signed_permutation_exponents(int n);

/// f is, up to a constant, a cyclotomic polynomial.
std::optional<int> cyclotomic_index(const UniPoly& f);

}  // namespace conjdim
