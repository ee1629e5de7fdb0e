#pragma once

#include <string>
#include <vector>

#include "conjdim/rational.hpp"

namespace conjdim {

struct BoundRow {
  int n = 0;
  int l = 0;  // root-of-unity count for cyclotomic bases, 0 otherwise
  Integer bound;
  std::string group;
  Rational ratio;  // bound / generic formula
  bool exceptional = false;
};

/// Largest order of a finite subgroup of GL_n(Q).
Integer d_max(int n);

/// Largest order of a finite subgroup of GL_n(Q(omega_l)), l even and >= 4.
Integer D_cyc(int l, int n);

/// q^n - 1 for a prime power q.
Integer D_finite(const Integer& q, int n);

bool is_prime_power(const Integer& q);

/// The exceptional rows exactly as tabulated.
const std::vector<BoundRow>& exceptional_rows_rational();
const std::vector<BoundRow>& exceptional_rows_cyclotomic();

struct Base {
  enum class Kind { Q, Cyclotomic, Finite } kind = Kind::Q;
  int l = 0;
  Integer q = 0;

  static Base rationals() { return {}; }
  static Base cyclotomic(int l) { return {Kind::Cyclotomic, l, 0}; }
  static Base finite(const Integer& q) { return {Kind::Finite, 0, q}; }
  std::string to_string() const;
};

/// Parses "q", "cyc:<l>" or "fq:<q>".
Base parse_base(const std::string& text);

Integer bound_for(const Base& base, int n);
std::vector<BoundRow> table_rows(const Base& base, int n_max);

enum class BoundVerdict { OK, ViolatesLower, ViolatesUpper };
std::string to_string(BoundVerdict v);

/// n <= d <= bound(n).  Over a finite field the lower bound is n as well.
BoundVerdict check_bounds(int n, const Integer& d, const Base& base = Base::rationals());

/// Smallest n with bound(n) >= d: every alpha of degree d has dimension at least this.
int min_dimension_for_degree(const Integer& d, const Base& base = Base::rationals());

}  // namespace conjdim
