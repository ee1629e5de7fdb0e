#include "conjdim/conj_dim.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/tables.hpp"

namespace conjdim {

int ladder_start_digits(int fallback) {
  if (const char* env = std::getenv("CONJDIM_DIGITS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 10) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

namespace {

Integer scaled_round(const BigFloat& x, const BigFloat& k) { return (x * k).round(); }

BigFloat pow10(int e) {
  BigFloat r(1L), ten(10L);
  for (int i = 0; i < std::abs(e); ++i) r *= ten;
  return e < 0 ? BigFloat(1L) / r : r;
}

Integer l1_norm(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::vector<std::vector<Rational>> to_rational_rows(const std::vector<std::vector<Integer>>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Lattice [I | K*c_1 | K*c_2 | ...] plus optional extra generator rows; returns
// the reduced rows whose residual columns are all at noise level.
struct LatticeProblem {
  std::vector<std::vector<BigFloat>> columns;  // per residual column, one value per root
  std::vector<std::vector<BigFloat>> extra;    // extra generator rows (residual values only)
};

std::vector<std::vector<Integer>> find_relations(const LatticeProblem& lp, int d, int digits, int guard) {
  const BigFloat k = pow10(digits - guard);
  const std::size_t nres = lp.columns.size();
  const int rows = d + static_cast<int>(lp.extra.size());
  const int idcols = rows;
  IntMatrix basis(rows, std::vector<Integer>(idcols + nres, 0));
  for (int i = 0; i < rows; ++i) {
    basis[i][i] = 1;
    for (std::size_t c = 0; c < nres; ++c)
      basis[i][idcols + c] = scaled_round(i < d ? lp.columns[c][i] : lp.extra[i - d][c], k);
  }
  lll_reduce(basis);
  // Accept rows whose exact residuals vanish to the working precision.
  const BigFloat tol = pow10(-digits);
  std::vector<std::vector<Integer>> rels;
  for (const auto& row : basis) {
    std::vector<Integer> v(row.begin(), row.begin() + idcols);
    if (std::all_of(v.begin(), v.begin() + d, [](const Integer& x) { return x == 0; })) continue;
    const BigFloat scale = BigFloat(Integer(l1_norm(v) + 1)) * tol;
    bool ok = true;
    for (std::size_t c = 0; c < nres && ok; ++c) {
      BigFloat s(0L);
      for (int i = 0; i < rows; ++i)
        if (v[i] != 0) s += BigFloat(v[i]) * (i < d ? lp.columns[c][i] : lp.extra[i - d][c]);
      ok = abs(s) < scale;
    }
    if (ok) rels.push_back(std::move(v));
  }
  return rels;
}

RelationLevel finish_level(int digits, int d, std::vector<std::vector<Integer>> rels, bool certified) {
  RelationLevel lvl;
  lvl.digits = digits;
  lvl.roots_certified = certified;
  std::vector<std::vector<Integer>> head;
  for (const auto& r : rels) head.emplace_back(r.begin(), r.begin() + d);
  lvl.relation_space = rational_rref(to_rational_rows(head));
  lvl.dimension_upper = d - static_cast<int>(lvl.relation_space.size());
  lvl.relations = std::move(rels);
  return lvl;
}

}  // namespace

RelationLevel qspan_level(const UniPoly& f, int digits, int guard_digits) {
  const int d = f.degree();
  PrecisionScope scope(digits_to_bits(digits + guard_digits + 10));
  RootSet rs = roots_numeric(f, digits + guard_digits + 10);
  LatticeProblem lp;
  lp.columns.resize(2);
  for (const auto& r : rs.roots) {
    lp.columns[0].push_back(r.mid.re);
    lp.columns[1].push_back(r.mid.im);
  }
  return finish_level(digits, d, find_relations(lp, d, digits, guard_digits), rs.certified);
}

RelationLevel mult_level(const UniPoly& f, int digits, int guard_digits) {
  const int d = f.degree();
  PrecisionScope scope(digits_to_bits(digits + guard_digits + 10));
  RootSet rs = roots_numeric(f, digits + guard_digits + 10);
  LatticeProblem lp;
  lp.columns.resize(2);
  for (const auto& r : rs.roots) {
    if (r.mid.abs() <= r.rad) throw Error("mult_rank: zero is a root");
    lp.columns[0].push_back(log(r.mid.abs()));
    lp.columns[1].push_back(r.mid.arg());
  }
  // Angles only matter modulo 2 pi.
  lp.extra.push_back({BigFloat(0L), BigFloat(2L) * pi()});
  return finish_level(digits, d, find_relations(lp, d, digits, guard_digits), rs.certified);
}

namespace {

// Lower bound from the real rank of the roots viewed as vectors in R^2.
int real_rank_lower(const UniPoly& f, int digits) {
  PrecisionScope scope(digits_to_bits(digits));
  RootSet rs = roots_numeric(f, digits);
  if (!rs.certified) return f.degree() > 0 ? 1 : 0;
  for (std::size_t a = 0; a < rs.roots.size(); ++a)
    for (std::size_t b = a + 1; b < rs.roots.size(); ++b) {
      const auto& x = rs.roots[a];
      const auto& y = rs.roots[b];
      BigFloat det = abs(x.mid.re * y.mid.im - x.mid.im * y.mid.re);
      BigFloat err = (x.mid.abs() + x.rad) * y.rad + (y.mid.abs() + y.rad) * x.rad;
      if (det > err * BigFloat(2L)) return 2;
    }
  return 1;
}

template <typename Level>
DimReport ladder(const UniPoly& f, const LadderOptions& opt, Level level) {
  DimReport rep;
  rep.degree = f.degree();
  std::optional<RelationLevel> prev;
  for (int digits = ladder_start_digits(opt.start_digits); digits <= opt.max_digits; digits *= 2) {
    RelationLevel lvl = level(f, digits, opt.guard_digits);
    rep.precision_trail.emplace_back(digits, lvl.dimension_upper);
    rep.dimension_upper = lvl.dimension_upper;
    rep.relations = lvl.relations;
    if (prev && prev->dimension_upper == lvl.dimension_upper && prev->relation_space == lvl.relation_space) {
      rep.stable = true;
      break;
    }
    prev = std::move(lvl);
  }
  return rep;
}

}  // namespace

DimReport qspan_dimension(const UniPoly& f, const LadderOptions& opt) {
  if (!f.zero_element().field()->is_rationals()) throw Error("qspan_dimension: polynomial must be over Q");
  if (f.degree() < 1) throw Error("qspan_dimension: constant polynomial");
  DimReport rep = ladder(f, opt, qspan_level);
  const int by_degree = min_dimension_for_degree(rep.degree);
  rep.dimension_lower = std::max({by_degree, real_rank_lower(f, 30), 1});
  if (f.degree() == 1 && f[0].is_zero()) rep.dimension_lower = rep.dimension_upper = 0;
  if (rep.dimension_lower > rep.dimension_upper)
    rep.note = "numeric relations contradict the exact lower bound; increase precision";
  rep.certified = rep.dimension_lower == rep.dimension_upper;
  return rep;
}

DimReport mult_rank_numeric(const UniPoly& f, const LadderOptions& opt) {
  if (!f.zero_element().field()->is_rationals()) throw Error("mult_rank_numeric: polynomial must be over Q");
  if (f.degree() < 1) throw Error("mult_rank_numeric: constant polynomial");
  if (f[0].is_zero()) throw Error("mult_rank_numeric: zero is a root");
  DimReport rep;
  if (auto m = cyclotomic_index(f)) {
    rep.degree = f.degree();
    rep.torsion = true;
    rep.certified = true;
    rep.stable = true;
    rep.note = "roots are primitive " + std::to_string(*m) + "-th roots of unity";
    return rep;
  }
  rep = ladder(f, opt, mult_level);
  // A root off the unit circle is not a root of unity, so the rank is at least 1.
  rep.dimension_lower = 0;
  {
    PrecisionScope scope(digits_to_bits(30));
    RootSet rs = roots_numeric(f, 30);
    for (const auto& r : rs.roots)
      if (abs(r.mid.abs() - BigFloat(1L)) > r.rad * BigFloat(2L)) rep.dimension_lower = 1;
  }
  rep.certified = rep.dimension_lower == rep.dimension_upper;
  rep.note = "multiplicative relations are detected numerically";
  return rep;
}

int orbit_rank(const std::vector<Vector>& orbit) {
  if (orbit.empty()) throw Error("orbit_rank: empty orbit");
  const std::size_t n = orbit[0].size();
  std::vector<Vector> m = orbit;
  for (const auto& v : m)
    if (v.size() != n) throw Error("orbit_rank: arity mismatch");
  int rank = 0;
  for (std::size_t c = 0; c < n && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const NFElem inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const NFElem f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

int mult_rank_exponents(const IntMatrix& m) { return integer_rank(m); }

IntMatrix signed_permutation_exponents(int n) {
  if (n < 0 || n > 8) throw Error("signed_permutation_exponents: n out of range");
  IntMatrix out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<Integer> row;
      for (int i = 0; i < n; ++i) row.emplace_back((signs >> i & 1) ? -perm[i] : perm[i]);
      out.push_back(std::move(row));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<int> cyclotomic_index(const UniPoly& f) {
  if (!f.zero_element().field()->is_rationals() || f.degree() < 1) return std::nullopt;
  const std::vector<Rational> mc = rational_coeffs(monic(f));
  const int d = f.degree();
  // phi(m) = d forces m <= 2 d^2 + 2 (crudely, phi(m) >= sqrt(m/2)).
  for (int m = 1; m <= 2 * d * d + 2; ++m) {
    int phi = m;
    for (int p = 2, x = m; p <= x; ++p)
      if (x % p == 0) {
        phi -= phi / p;
        while (x % p == 0) x /= p;
      }
    if (phi != d) continue;
    std::vector<Rational> c = cyclotomic_polynomial(m);
    if (c == mc) return m;
  }
  return std::nullopt;
}

}  // namespace conjdim
