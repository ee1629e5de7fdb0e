#pragma once

#include <string>
#include <vector>

#include "conjdim/groups.hpp"

namespace conjdim {

struct InvariantSystem {
  GroupPtr group;
  std::vector<MultiPoly> polys;  // in x1..xn
  std::vector<int> degrees;
  std::string name;
};

std::vector<std::string> x_vars(int n);

/// Elementary symmetric functions of x1^l, ..., xn^l, invariants of G(l,1,n).
InvariantSystem elem_symm_lpowers(int n, int l);

InvariantSystem g2_invariants();

/// F4 invariants I2, I6, I8, I12.  Derived from the power-sum formula by
/// Newton reduction and compared against the reference forms; a mismatch throws.
InvariantSystem f4_invariants();

/// I_{2k} = (8 - 2^(2k-1)) s_{2k} + sum_{j=1}^{k-1} C(2k,2j) s_{2j} s_{2k-2j}
/// as a polynomial in s2, s4, ..., s_{2k}.
MultiPoly f4_defining_form(int k);

/// I_{2k} for k = 1, 3, 4, 6 reduced to s2, s4, s6, s8 by Newton's identities.
MultiPoly f4_reduced_form(int k);

/// The reference expressions of I2, I6, I8, I12 in s2, s4, s6, s8.
MultiPoly f4_reference_form(int k);

const std::vector<std::string>& f4_s_vars();

/// The two explicit ST8 invariants over Q(i).
InvariantSystem st8_invariants();

/// Dispatch by group name as accepted by builtin_group().
InvariantSystem invariant_system(const std::string& group, int n = 0, int l = 0);

/// Every polynomial is homogeneous of its stated degree and invariant under
/// the group's natural action.
bool verify_system(const InvariantSystem& sys);

}  // namespace conjdim
