#include "conjdim/lattice.hpp"

#include <algorithm>

#include "conjdim/bigfloat.hpp"
#include "conjdim/error.hpp"

namespace conjdim {

namespace {

BigFloat dot(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b) {
  BigFloat s(0L);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void lll_reduce(IntMatrix& b, double delta) {
  const int n = static_cast<int>(b.size());
  if (n < 2) return;
  const std::size_t m = b[0].size();
  std::size_t max_bits = 1;
  for (const auto& row : b) {
    if (row.size() != m) throw Error("lll_reduce: ragged basis");
    for (const auto& x : row) max_bits = std::max(max_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  PrecisionScope scope(static_cast<mpfr_prec_t>(2 * max_bits + 4 * n + 128));

  std::vector<std::vector<BigFloat>> bf(n);
  auto load = [&](int i) {
    bf[i].clear();
    for (const auto& x : b[i]) bf[i].emplace_back(x);
  };
  for (int i = 0; i < n; ++i) load(i);

  std::vector<std::vector<BigFloat>> mu(n, std::vector<BigFloat>(n));
  std::vector<BigFloat> bstar(n);  // squared norms of the Gram-Schmidt vectors
  // mu[i][j] = <b_i, b*_j> / |b*_j|^2, using <b_i, b*_j> = <b_i, b_j> - sum_{l<j} mu[j][l] <b_i, b*_l>.
  auto gso_row = [&](int i) {
    std::vector<BigFloat> r(i);
    for (int j = 0; j < i; ++j) {
      BigFloat s = dot(bf[i], bf[j]);
      for (int l = 0; l < j; ++l) s -= mu[j][l] * r[l];
      r[j] = s;
      mu[i][j] = s / bstar[j];
    }
    BigFloat s = dot(bf[i], bf[i]);
    for (int j = 0; j < i; ++j) s -= mu[i][j] * r[j];
    bstar[i] = s;
    if (!(bstar[i] > BigFloat(0L))) throw Error("lll_reduce: basis rows are dependent");
  };
  gso_row(0);
  const BigFloat half(0.5), dlt(delta);
  int k = 1;
  long long iterations = 0;
  while (k < n) {
    if (++iterations > 50000000LL) throw BudgetExceeded("lll_reduce: too many iterations");
    gso_row(k);
    bool changed = true;
    for (int pass = 0; changed && pass < 64; ++pass) {
      changed = false;
      for (int j = k - 1; j >= 0; --j) {
        if (abs(mu[k][j]) <= half) continue;
        const Integer q = mu[k][j].round();
        for (std::size_t c = 0; c < m; ++c) b[k][c] -= q * b[j][c];
        const BigFloat qf(q);
        for (int l = 0; l < j; ++l) mu[k][l] -= qf * mu[j][l];
        mu[k][j] -= qf;
        changed = true;
      }
      if (changed) {
        load(k);
        gso_row(k);
      }
    }
    const BigFloat lhs = bstar[k];
    const BigFloat rhs = (dlt - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1];
    if (lhs < rhs) {
      std::swap(b[k], b[k - 1]);
      std::swap(bf[k], bf[k - 1]);
      if (k - 1 == 0) gso_row(0);
      else gso_row(k - 1);
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
}

int integer_rank(const IntMatrix& m0) {
  IntMatrix m = m0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Integer a = m[rank][c], f = m[r][c];
      for (int k = c; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * f;
      // Keep entries small by dividing out the row content.
      Integer g = 0;
      for (int k = c; k < cols; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[r][k].get_mpz_t());
      if (g > 1)
        for (int k = c; k < cols; ++k) m[r][k] /= g;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rational_rref(const std::vector<std::vector<Rational>>& rows0) {
  auto rows = rows0;
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace conjdim
