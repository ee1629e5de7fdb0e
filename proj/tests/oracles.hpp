// Independent reference computations used to check the library.
#pragma once

#include <random>
#include <vector>

#include "conjdim/multi_poly.hpp"

namespace oracle {

using conjdim::NFElem;
using conjdim::Rational;
using conjdim::UniPoly;

/// Determinant over a field by Gaussian elimination.
inline NFElem determinant(std::vector<std::vector<NFElem>> m, const NFElem& zero) {
  const std::size_t n = m.size();
  NFElem det = one_like(zero);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return zero;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    NFElem inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      NFElem f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline NFElem sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const int m = f.degree(), n = g.degree();
  const NFElem zero = f.zero_element();
  std::vector<std::vector<NFElem>> s(m + n, std::vector<NFElem>(m + n, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
  return determinant(s, zero);
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 5);
  const int p = num(rng), q = den(rng);
  return conjdim::rational_normalize(p, q);
}

inline NFElem random_elem(std::mt19937_64& rng, const conjdim::FieldPtr& k, int bound = 20) {
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(random_rational(rng, bound));
  return NFElem(k, c);
}

inline UniPoly random_poly(std::mt19937_64& rng, const conjdim::FieldPtr& k, int degree, int bound = 20) {
  std::vector<NFElem> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_elem(rng, k, bound));
  while (c.back().is_zero()) c.back() = NFElem(k, Rational(1));
  return UniPoly(NFElem(k), c);
}

}  // namespace oracle
