#pragma once

#include <utility>

#include "conjdim/dense_poly.hpp"
#include "conjdim/multi_poly.hpp"

namespace conjdim {

template <class R>
R ring_pow(const R& base, unsigned e) {
  R result = one_like(base), b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

/// Resultant of a and b in their main variable by the subresultant PRS
/// (Cohen, Algorithm 3.3.7, without content removal).  Only exact divisions
/// occur, so R need only be an integral domain with exact_div.
template <class R>
R resultant(DensePoly<R> a, DensePoly<R> b) {
  const R zero = a.zero_element();
  if (a.is_zero_poly() || b.is_zero_poly()) return zero;
  bool negate = false;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 && b.degree() % 2) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = ring_pow(b.lead(), a.degree());
    return negate ? -r : r;
  }
  R g = one_like(zero), h = one_like(zero);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 && b.degree() % 2) negate = !negate;
    DensePoly<R> r = prem(a, b);
    a = std::move(b);
    b = exact_div(r, DensePoly<R>::constant(g * ring_pow(h, delta)));
    g = a.lead();
    h = delta == 0 ? h : exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    if (b.is_zero_poly()) return zero;
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  R res = exact_div(ring_pow(b.lead(), da), ring_pow(h, da - 1));
  return negate ? -res : res;
}

/// Resultant with respect to variable `var`; the result does not involve it.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Univariate resultant over a number field.
NFElem resultant(const UniPoly& f, const UniPoly& g);

using BiPoly = DensePoly<UniPoly>;

/// Bivariate polynomial in (main, coefficient) variables from a two-variable
/// MultiPoly: `main_var` becomes the outer variable.
BiPoly to_bipoly(const MultiPoly& f, int main_var);

}  // namespace conjdim
