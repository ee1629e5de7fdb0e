#include "conjdim/number_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "conjdim/error.hpp"

namespace conjdim {

std::string to_string(IrreducibilityProvenance p) {
  switch (p) {
    case IrreducibilityProvenance::Trivial: return "trivial";
    case IrreducibilityProvenance::Certified: return "certified";
    case IrreducibilityProvenance::Asserted: return "asserted";
  }
  return "unknown";
}

namespace {

using RVec = std::vector<Rational>;

void trim(RVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Division with remainder of ascending rational polynomials, b nonzero.
std::pair<RVec, RVec> divmod(RVec a, const RVec& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {RVec{}, a};
  RVec q(a.size() - b.size() + 1);
  const Rational inv_lc = 1 / b.back();
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    Rational t = a[k] * inv_lc;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= t * b[j];
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

RVec mul(const RVec& a, const RVec& b) {
  if (a.empty() || b.empty()) return {};
  RVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RVec sub(RVec a, const RVec& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

NumberField::NumberField(std::vector<Rational> modulus, std::string label,
                         IrreducibilityProvenance provenance)
    : modulus_(std::move(modulus)), label_(std::move(label)), provenance_(provenance) {
  trim(modulus_);
  if (modulus_.size() < 2) throw Error("defining polynomial must have degree >= 1");
  if (modulus_.back() != 1) throw Error("defining polynomial must be monic");
}

FieldPtr NumberField::create(std::vector<Rational> modulus, std::string label,
                             IrreducibilityProvenance provenance) {
  return std::make_shared<const NumberField>(std::move(modulus), std::move(label), provenance);
}

const FieldPtr& NumberField::rationals() {
  static const FieldPtr q = create({Rational(0), Rational(1)}, "Q", IrreducibilityProvenance::Trivial);
  return q;
}

void NumberField::multiply_accumulate(std::span<const Rational> a, std::span<const Rational> b,
                                      std::span<Rational> acc) const {
  const int d = degree();
  if (d == 1) {
    acc[0] += a[0] * b[0];
    return;
  }
  RVec prod(2 * d - 1);
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
      any = true;
    }
  }
  if (!any) return;
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    const Rational c = prod[k];
    for (int i = 0; i < d; ++i)
      if (modulus_[i] != 0) prod[k - d + i] -= c * modulus_[i];
  }
  for (int i = 0; i < d; ++i) acc[i] += prod[i];
}

void NumberField::multiply(std::span<const Rational> a, std::span<const Rational> b,
                           std::span<Rational> out) const {
  for (auto& x : out) x = 0;
  multiply_accumulate(a, b, out);
}

std::vector<Rational> NumberField::inverse(std::span<const Rational> a) const {
  // Extended Euclid: find s with s*a + t*m = 1.
  RVec r0(modulus_), r1(a.begin(), a.end());
  trim(r1);
  if (r1.empty()) throw DivisionByZero();
  RVec s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    RVec s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw Error("defining polynomial is reducible: zero divisor found");
  }
  const Rational inv = 1 / r1[0];
  RVec out(degree());
  for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] * inv;
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || a->equivalent(*b);
}

NFElem::NFElem() : NFElem(NumberField::rationals()) {}

NFElem::NFElem(FieldPtr field) : field_(std::move(field)), c_(field_->degree()) {}

NFElem::NFElem(FieldPtr field, const Rational& q) : NFElem(std::move(field)) { c_[0] = q; }

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), c_(std::move(coords)) {
  const std::size_t d = field_->degree();
  if (c_.size() > d) {
    // Reduce a longer coordinate vector modulo the defining polynomial.
    auto [q, r] = divmod(std::move(c_), field_->modulus());
    c_ = std::move(r);
  }
  c_.resize(d);
}

NFElem NFElem::generator(const FieldPtr& field) {
  std::vector<Rational> c{Rational(0), Rational(1)};
  return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool NFElem::is_one() const { return is_rational() && c_[0] == 1; }

Rational NFElem::to_rational() const {
  if (!is_rational()) throw Error("element is not rational: " + to_string());
  return c_[0];
}

void NFElem::check_same(const NFElem& o) const {
  if (!same_field(field_, o.field_)) throw FieldMismatch();
}

NFElem& NFElem::operator+=(const NFElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  a.check_same(b);
  NFElem r(a.field_);
  a.field_->multiply(a.c_, b.c_, r.c_);
  return r;
}

NFElem& NFElem::operator*=(const NFElem& o) { return *this = *this * o; }

NFElem& NFElem::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_rational()) {
    if (c_[0] == 0) throw DivisionByZero();
    return NFElem(field_, Rational(1 / c_[0]));
  }
  return NFElem(field_, field_->inverse(c_));
}

NFElem& NFElem::operator/=(const NFElem& o) {
  check_same(o);
  if (o.is_rational()) {
    if (o.c_[0] == 0) throw DivisionByZero();
    for (auto& x : c_) x /= o.c_[0];
    return *this;
  }
  return *this = *this * o.inverse();
}

NFElem NFElem::operator-() const {
  NFElem r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem result(field_, Rational(1)), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const NFElem& a, const NFElem& b) {
  return same_field(a.field_, b.field_) && a.c_ == b.c_;
}

std::string NFElem::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + "]@" + field_->label();
}

std::uint64_t NFElem::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& x : c_) h = (h ^ hash_rational(x)) * 0x100000001b3ull;
  return h;
}

std::vector<Rational> cyclotomic_polynomial(int l) {
  if (l < 1) throw Error("cyclotomic index must be positive");
  RVec p(l + 1);
  p[0] = -1;
  p[l] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

FieldPtr cyclotomic_field(int l) {
  if (l < 1 || l > 60) throw Error("cyclotomic field index out of supported range 1..60: " + std::to_string(l));
  if (l <= 2) return NumberField::rationals();
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[l];
  if (!slot) {
    std::string label = l == 4 ? "Q(i)" : "Q(w" + std::to_string(l) + ")";
    slot = NumberField::create(cyclotomic_polynomial(l), label, IrreducibilityProvenance::Trivial);
  }
  return slot;
}

NFElem root_of_unity(int l) {
  if (l == 1) return NFElem(NumberField::rationals(), Rational(1));
  if (l == 2) return NFElem(NumberField::rationals(), Rational(-1));
  return NFElem::generator(cyclotomic_field(l));
}

}  // namespace conjdim
