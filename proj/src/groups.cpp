#include "conjdim/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "conjdim/error.hpp"

namespace conjdim {

Matrix::Matrix(const FieldPtr& field, int n) : field_(field), n_(n), a_(n * n, NFElem(field)) {}

Matrix::Matrix(const FieldPtr& field, int n, const std::vector<Rational>& entries) : Matrix(field, n) {
  if (static_cast<int>(entries.size()) != n * n) throw Error("matrix: wrong number of entries");
  for (int i = 0; i < n * n; ++i) a_[i] = NFElem(field, entries[i]);
}

Matrix::Matrix(const FieldPtr& field, int n, std::vector<NFElem> entries)
    : field_(field), n_(n), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != n * n) throw Error("matrix: wrong number of entries");
  for (const auto& e : a_)
    if (!same_field(e.field(), field)) throw FieldMismatch();
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
  Matrix m(field, n);
  for (int i = 0; i < n; ++i) m(i, i) = NFElem(field, Rational(1));
  return m;
}

bool Matrix::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error("matrix: dimension mismatch");
  if (!same_field(a.field_, b.field_)) throw FieldMismatch();
  const int n = a.n_;
  Matrix m(a.field_, n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const NFElem& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

NFElem Matrix::determinant() const {
  std::vector<NFElem> m = a_;
  const int n = n_;
  NFElem det(field_, Rational(1));
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv * n + c].is_zero()) ++piv;
    if (piv == n) return NFElem(field_);
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[c * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    const NFElem inv = m[c * n + c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r * n + c].is_zero()) continue;
      const NFElem f = m[r * n + c] * inv;
      for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

std::uint64_t Matrix::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (const auto& e : a_) h = (h ^ e.hash()) * 0x100000001b3ULL;
  return h;
}

Vector apply(const Vector& v, const Matrix& g, Action action) {
  const int n = g.dim();
  if (static_cast<int>(v.size()) != n) throw Error("apply: dimension mismatch");
  Vector out(n, NFElem(g.field()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // row: out_i = sum_j v_j g(j, i); column: out_i = sum_j g(i, j) v_j
      const NFElem& m = action == Action::Row ? g(j, i) : g(i, j);
      if (!m.is_zero() && !v[j].is_zero()) out[i] += v[j] * m;
    }
  return out;
}

MatGroup::MatGroup(FieldPtr field, int dim, std::vector<Matrix> generators, std::string name,
                   std::optional<long long> claimed_order, Action natural_action)
    : field_(std::move(field)),
      dim_(dim),
      gens_(std::move(generators)),
      name_(std::move(name)),
      claimed_(claimed_order),
      action_(natural_action) {
  for (const auto& g : gens_) {
    if (g.dim() != dim_) throw Error("group " + name_ + ": generator has wrong dimension");
    if (!same_field(g.field(), field_)) throw FieldMismatch();
    if (g.determinant().is_zero()) throw Error("group " + name_ + ": singular generator");
  }
}

const std::vector<Matrix>& MatGroup::elements(std::size_t cap) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (elems_) return *elems_;
  std::vector<Matrix> out{Matrix::identity(field_, dim_)};
  std::unordered_multimap<std::uint64_t, std::size_t> seen{{out[0].hash(), 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens_) {
      Matrix h = out[head] * g;
      const auto key = h.hash();
      auto [lo, hi] = seen.equal_range(key);
      bool found = false;
      for (auto it = lo; it != hi && !found; ++it) found = out[it->second] == h;
      if (found) continue;
      if (out.size() >= cap) throw BudgetExceeded("group " + name_ + " exceeds " + std::to_string(cap) + " elements");
      seen.emplace(key, out.size());
      out.push_back(std::move(h));
    }
  }
  if (claimed_ && static_cast<long long>(out.size()) != *claimed_)
    throw Error("group " + name_ + ": enumerated " + std::to_string(out.size()) + " elements, expected " +
                std::to_string(*claimed_));
  elems_ = std::move(out);
  return *elems_;
}

namespace {

Matrix permutation_matrix(const FieldPtr& k, int n, int i, int j) {
  Matrix m = Matrix::identity(k, n);
  m(i, i) = m(j, j) = NFElem(k);
  m(i, j) = m(j, i) = NFElem(k, Rational(1));
  return m;
}

std::vector<Matrix> monomial_generators(const FieldPtr& k, int n, const NFElem& root) {
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(permutation_matrix(k, n, i, i + 1));
  Matrix d = Matrix::identity(k, n);
  d(n - 1, n - 1) = root;
  if (!d.is_identity()) gens.push_back(d);
  return gens;
}

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GroupPtr group_Bn(int n) {
  if (n < 1 || n > 10) throw Error("B_n: n must be in 1..10");
  const FieldPtr& q = NumberField::rationals();
  return std::make_shared<MatGroup>(q, n, monomial_generators(q, n, NFElem(q, Rational(-1))), "B" + std::to_string(n),
                                    (1LL << n) * factorial_ll(n));
}

GroupPtr group_G2() {
  const FieldPtr& q = NumberField::rationals();
  std::vector<Matrix> gens{Matrix(q, 2, {0, -1, 1, 1}), Matrix(q, 2, {0, 1, 1, 0})};
  return std::make_shared<MatGroup>(q, 2, gens, "G2", 12);
}

GroupPtr group_WB4() {
  auto b4 = group_Bn(4);
  return std::make_shared<MatGroup>(b4->field(), 4, b4->generators(), "W(B4)", 384);
}

GroupPtr group_F4() {
  const FieldPtr& q = NumberField::rationals();
  std::vector<Matrix> gens = group_Bn(4)->generators();
  const Rational h(1, 2);
  gens.push_back(Matrix(q, 4, {h, h, h, h, h, -h, h, -h, h, h, -h, -h, h, -h, -h, h}));
  return std::make_shared<MatGroup>(q, 4, gens, "F4", 1152);
}

GroupPtr group_ST8() {
  const FieldPtr& k = cyclotomic_field(4);
  const NFElem zero(k), one(k, Rational(1)), i = NFElem::generator(k);
  std::vector<Matrix> gens{Matrix(k, 2, {zero, one, one, i}), Matrix(k, 2, {zero, one, -i, zero})};
  return std::make_shared<MatGroup>(k, 2, gens, "ST8", 96, Action::Column);
}

std::optional<NFElem> primitive_root_of_unity_in(const FieldPtr& field, int l) {
  if (l < 1) throw Error("root of unity: l must be positive");
  if (l <= 2) return NFElem(field, Rational(l == 1 ? 1 : -1));
  auto has_order = [l](const NFElem& z) {
    if (!z.pow(l).is_one()) return false;
    for (int p = 2; p <= l; ++p)
      if (l % p == 0 && z.pow(l / p).is_one()) return false;
    return true;
  };
  for (int m = 3; m <= 60; ++m) {
    const FieldPtr cyc = cyclotomic_field(m);
    if (!field->equivalent(*cyc)) continue;
    // Roots of unity in Q(omega_m) are the powers of -omega_m (m odd) or omega_m.
    const NFElem z = NFElem::generator(field);
    for (int e = 0; e < 2 * m; ++e) {
      NFElem c = z.pow(e);
      if (has_order(c)) return c;
      if (has_order(-c)) return -c;
    }
  }
  return std::nullopt;
}

GroupPtr group_Gl1n(int l, int n, FieldPtr field) {
  if (l < 1 || n < 1) throw Error("G(l,1,n): l and n must be positive");
  if (!field) field = cyclotomic_field(l);
  auto root = primitive_root_of_unity_in(field, l);
  if (!root) throw Error("field " + field->label() + " does not contain a primitive " + std::to_string(l) + "-th root of unity");
  long long order = factorial_ll(n);
  for (int i = 0; i < n; ++i) order *= l;
  return std::make_shared<MatGroup>(field, n, monomial_generators(field, n, *root),
                                    "G(" + std::to_string(l) + ",1," + std::to_string(n) + ")", order);
}

GroupPtr builtin_group(const std::string& name, int n, int l) {
  if (name == "G2") return group_G2();
  if (name == "F4") return group_F4();
  if (name == "ST8") return group_ST8();
  if (name == "WB4") return group_WB4();
  if (name == "Bn") return group_Bn(n);
  if (name == "Gl1n") return group_Gl1n(l, n);
  if (name.size() > 1 && name[0] == 'B' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return group_Bn(std::stoi(name.substr(1)));
  throw Error("unknown group: " + name);
}

Orbit orbit(const MatGroup& g, const Vector& v, std::optional<Action> action) {
  const Action act = action.value_or(g.natural_action());
  if (std::all_of(v.begin(), v.end(), [](const NFElem& x) { return x.is_zero(); })) throw Error("orbit: zero vector");
  Orbit o{v, {}, {}};
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  const auto& elems = g.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    Vector w = apply(v, elems[k], act);
    std::uint64_t key = 0;
    for (const auto& x : w) key = (key ^ x.hash()) * 0x100000001b3ULL;
    auto [lo, hi] = seen.equal_range(key);
    bool found = false;
    for (auto it = lo; it != hi && !found; ++it) found = o.elements[it->second] == w;
    if (found) continue;
    seen.emplace(key, o.elements.size());
    o.elements.push_back(std::move(w));
    o.transversal.push_back(k);
  }
  return o;
}

long long stabilizer_order(const MatGroup& g, const Vector& v, std::optional<Action> action) {
  const Action act = action.value_or(g.natural_action());
  long long count = 0;
  for (const auto& m : g.elements())
    if (apply(v, m, act) == v) ++count;
  return count;
}

bool stabilizer_is_trivial(const MatGroup& g, const Vector& v, std::optional<Action> action) {
  return stabilizer_order(g, v, action) == 1;
}

MultiPoly lift_to_field(const MultiPoly& f, const FieldPtr& field) {
  if (same_field(f.field(), field)) return f;
  if (!f.field()->is_rationals()) throw FieldMismatch();
  MultiPoly out(field, f.vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, NFElem(field, c.to_rational()));
  return out;
}

bool is_invariant(const MultiPoly& f, const MatGroup& g, std::optional<Action> action) {
  if (f.arity() != g.dim()) throw Error("is_invariant: arity mismatch");
  const Action act = action.value_or(g.natural_action());
  const MultiPoly h = lift_to_field(f, g.field());
  const int n = g.dim();
  for (const auto& m : g.generators()) {
    std::vector<MultiPoly> image;
    for (int i = 0; i < n; ++i) {
      MultiPoly yi(g.field(), h.vars());
      for (int j = 0; j < n; ++j) {
        const NFElem& c = act == Action::Row ? m(j, i) : m(i, j);
        if (!c.is_zero()) yi += MultiPoly::variable(g.field(), h.vars(), j) * c;
      }
      image.push_back(std::move(yi));
    }
    if (!(h.substitute_all(image) == h)) return false;
  }
  return true;
}

int element_order(const Matrix& m) {
  Matrix p = m;
  for (int k = 1; k <= 100000; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw Error("element_order: element of infinite or huge order");
}

std::set<std::vector<int>> regular_cycle_types(const MatGroup& g) {
  std::set<std::vector<int>> out;
  const long long order = g.order();
  for (const auto& m : g.elements()) {
    const int o = element_order(m);
    out.insert(std::vector<int>(order / o, o));
  }
  return out;
}

Vector rational_vector(const FieldPtr& field, const std::vector<Rational>& v) {
  Vector out;
  for (const auto& x : v) out.emplace_back(field, x);
  return out;
}

}  // namespace conjdim
