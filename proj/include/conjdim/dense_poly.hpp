#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "conjdim/error.hpp"

namespace conjdim {

/// Dense univariate polynomial over a ring R.  R must provide, via ADL:
///   zero_like(r), one_like(r), is_zero(r), exact_div(a, b)
/// and the usual +, -, * operators.  A zero element of the coefficient ring
/// travels with each polynomial so that contexts such as the number field or
/// the variable list of a multivariate ring are never lost.
template <class R>
class DensePoly {
 public:
  explicit DensePoly(R zero) : zero_(std::move(zero)) {}
  DensePoly(R zero, std::vector<R> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const R& c) {
    DensePoly p(zero_like(c));
    if (!is_zero(c)) p.c_.push_back(c);
    return p;
  }
  /// c * x^k
  static DensePoly monomial(const R& c, int k) {
    DensePoly p(zero_like(c));
    if (!is_zero(c)) {
      p.c_.assign(k + 1, p.zero_);
      p.c_[k] = c;
    }
    return p;
  }
  static DensePoly x(const R& zero) { return monomial(one_like(zero), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
  const R& lead() const { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& zero_element() const { return zero_; }
  R one_element() const { return one_like(zero_); }

  void set_coeff(int i, R v) {
    if (i >= static_cast<int>(c_.size())) {
      if (is_zero(v)) return;
      c_.resize(i + 1, zero_);
    }
    c_[i] = std::move(v);
    trim();
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }
  DensePoly& operator*=(const R& s) {
    if (is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x = x * s;
    trim();
    return *this;
  }
  DensePoly operator-() const {
    DensePoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const R& s) { return a *= s; }
  friend DensePoly operator*(const R& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r(a.zero_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Multiply by x^k.
  DensePoly shifted(int k) const {
    DensePoly r(zero_);
    if (c_.empty()) return r;
    r.c_.assign(k, zero_);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  DensePoly derivative() const {
    DensePoly r(zero_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      R term = c_[i];
      R k = from_integer_like(zero_, static_cast<long>(i));
      r.c_.push_back(term * k);
    }
    r.trim();
    return r;
  }

  R evaluate(const R& v) const {
    R acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  /// p(q(x)) by Horner.
  DensePoly compose(const DensePoly& q) const {
    DensePoly acc(zero_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant_or_zero(*it);
    return acc;
  }

  /// p(x) -> x^deg p(1/x).
  DensePoly reversed() const {
    DensePoly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

  DensePoly pow(unsigned e) const {
    DensePoly result = constant(one_like(zero_)), base(*this);
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Apply a coefficient map, producing a polynomial over another ring.
  template <class S, class F>
  DensePoly<S> map_coeffs(const S& new_zero, F&& f) const {
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return DensePoly<S>(new_zero, std::move(out));
  }

 private:
  DensePoly constant_or_zero(const R& c) const {
    DensePoly p(zero_);
    if (!is_zero(c)) p.c_.push_back(c);
    return p;
  }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  R zero_;
  std::vector<R> c_;
};

/// Quotient and remainder with a divisor whose leading coefficient divides
/// every intermediate leading coefficient (always true over a field).
template <class R>
std::pair<DensePoly<R>, DensePoly<R>> divmod(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  std::vector<R> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {DensePoly<R>(a.zero_element()), a};
  std::vector<R> q(da - db + 1, a.zero_element());
  for (int k = da; k >= db; --k) {
    if (is_zero(r[k])) continue;
    R t = exact_div(r[k], b.lead());
    for (int j = 0; j <= db; ++j)
      if (!is_zero(b[j])) r[k - db + j] -= t * b[j];
    q[k - db] = std::move(t);
  }
  r.resize(db, a.zero_element());
  return {DensePoly<R>(a.zero_element(), std::move(q)), DensePoly<R>(a.zero_element(), std::move(r))};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
DensePoly<R> prem(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lead();
  for (int k = da; k >= db; --k) {
    R t = r[k];
    for (int j = 0; j < k; ++j) r[j] = r[j] * lb;
    r[k] = a.zero_element();
    if (!is_zero(t)) {
      for (int j = 0; j < db; ++j)
        if (!is_zero(b[j])) r[k - db + j] -= t * b[j];
    }
  }
  r.resize(db, a.zero_element());
  return DensePoly<R>(a.zero_element(), std::move(r));
}

template <class R>
DensePoly<R> exact_div(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.is_constant()) {
    if (b.is_zero_poly()) throw DivisionByZero();
    std::vector<R> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(exact_div(x, b[0]));
    return DensePoly<R>(a.zero_element(), std::move(out));
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw Error("inexact polynomial division");
  return q;
}

// Ring interface so that DensePoly<DensePoly<R>> works.
template <class R>
DensePoly<R> zero_like(const DensePoly<R>& p) { return DensePoly<R>(p.zero_element()); }
template <class R>
DensePoly<R> one_like(const DensePoly<R>& p) { return DensePoly<R>::constant(one_like(p.zero_element())); }
template <class R>
bool is_zero(const DensePoly<R>& p) { return p.is_zero_poly(); }
template <class R>
DensePoly<R> from_integer_like(const DensePoly<R>& p, long v) {
  return DensePoly<R>::constant(from_integer_like(p.zero_element(), v));
}

}  // namespace conjdim
