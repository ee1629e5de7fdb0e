#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conjdim/multi_poly.hpp"

namespace conjdim {

/// Dense square matrix over a number field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldPtr& field, int n);  // zero matrix
  Matrix(const FieldPtr& field, int n, const std::vector<Rational>& entries);
  Matrix(const FieldPtr& field, int n, std::vector<NFElem> entries);
  static Matrix identity(const FieldPtr& field, int n);

  int dim() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const NFElem& operator()(int r, int c) const { return a_[r * n_ + c]; }
  NFElem& operator()(int r, int c) { return a_[r * n_ + c]; }
  const std::vector<NFElem>& entries() const { return a_; }

  bool is_identity() const;
  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.a_ == b.a_; }
  NFElem determinant() const;
  std::uint64_t hash() const;

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<NFElem> a_;
};

using Vector = std::vector<NFElem>;

/// Row action sends v to v g; column action sends v to g v.
enum class Action { Row, Column };

Vector apply(const Vector& v, const Matrix& g, Action action);

class MatGroup;
using GroupPtr = std::shared_ptr<const MatGroup>;

/// Finite matrix group given by generators.  The element list is computed on
/// first request and cached.
class MatGroup {
 public:
  MatGroup(FieldPtr field, int dim, std::vector<Matrix> generators, std::string name,
           std::optional<long long> claimed_order, Action natural_action = Action::Row);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  std::optional<long long> claimed_order() const { return claimed_; }
  /// The action under which the built-in invariants are invariant.
  Action natural_action() const { return action_; }

  /// All elements in breadth-first order from the identity.  Throws
  /// BudgetExceeded past `cap` elements and Error if the count differs from
  /// the claimed order.
  const std::vector<Matrix>& elements(std::size_t cap = 10000000) const;
  long long order() const { return static_cast<long long>(elements().size()); }

 private:
  FieldPtr field_;
  int dim_;
  std::vector<Matrix> gens_;
  std::string name_;
  std::optional<long long> claimed_;
  Action action_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<Matrix>> elems_;
};

GroupPtr group_Bn(int n);
GroupPtr group_G2();
/// W(B4) together with the half matrix.
GroupPtr group_F4();
/// W(B4) alone, as the index-3 subgroup of group_F4().
GroupPtr group_WB4();
GroupPtr group_ST8();
/// Monomial matrices with l-th roots of unity as entries, over Q(omega_l)
/// unless another field containing omega_l is given.
GroupPtr group_Gl1n(int l, int n, FieldPtr field = nullptr);
/// Dispatches "Bn", "B<n>", "G2", "F4", "ST8", "Gl1n"; `n` and `l` are used where relevant.
GroupPtr builtin_group(const std::string& name, int n = 0, int l = 0);

/// A primitive l-th root of unity in `field`, if the field is Q or a
/// cyclotomic field containing one.
std::optional<NFElem> primitive_root_of_unity_in(const FieldPtr& field, int l);

struct Orbit {
  Vector base;
  std::vector<Vector> elements;
  std::vector<std::size_t> transversal;  // index into group.elements() mapping base to each image
};

Orbit orbit(const MatGroup& g, const Vector& v, std::optional<Action> action = std::nullopt);
long long stabilizer_order(const MatGroup& g, const Vector& v, std::optional<Action> action = std::nullopt);
bool stabilizer_is_trivial(const MatGroup& g, const Vector& v, std::optional<Action> action = std::nullopt);

/// f(x g) == f(x) for every generator under the chosen action, where x is the
/// vector of f's variables.  Rational polynomials are lifted into the group's field.
bool is_invariant(const MultiPoly& f, const MatGroup& g, std::optional<Action> action = std::nullopt);

/// f with its coefficients read in `field`; f must be over Q or over `field`.
MultiPoly lift_to_field(const MultiPoly& f, const FieldPtr& field);

int element_order(const Matrix& m);

/// { |G|/ord(g) copies of ord(g) : g in G }, each multiset sorted.
std::set<std::vector<int>> regular_cycle_types(const MatGroup& g);

Vector rational_vector(const FieldPtr& field, const std::vector<Rational>& v);

}  // namespace conjdim
