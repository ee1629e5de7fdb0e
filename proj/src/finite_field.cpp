#include "conjdim/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "conjdim/error.hpp"

namespace conjdim {

namespace {

constexpr unsigned __int128 kSizeCap = static_cast<unsigned __int128>(1) << 32;

// p^k, or 0 when it exceeds 2^32.
std::uint64_t capped_power(std::uint64_t p, std::uint64_t k) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= p;
    if (r > kSizeCap) return 0;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

ModPoly powmod_poly(ModPoly a, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
  ModPoly r{1};
  a = modp::rem(a, f, p);
  while (e) {
    if (e & 1) r = modp::rem(modp::mul(r, a, p), f, p);
    e >>= 1;
    if (e) a = modp::rem(modp::mul(a, a, p), f, p);
  }
  return r;
}

}  // namespace

FqField::FqField(std::uint64_t p, int k, ModPoly modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  modp::trim(modulus_);
  if (k < 1 || static_cast<int>(modulus_.size()) != k + 1 || modulus_.back() != 1)
    throw Error("FqField: modulus must be monic of degree k");
  size_ = capped_power(p, k);
  if (!size_) throw BudgetExceeded("FqField: p^k exceeds 2^32");
}

FqElem FqField::x() const { return modp::rem({0, 1}, modulus_, p_); }

FqElem FqField::scalar(std::uint64_t c) const {
  FqElem r{c % p_};
  modp::trim(r);
  return r;
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
  FqElem r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p_;
  }
  modp::trim(r);
  return r;
}

FqElem FqField::neg(const FqElem& a) const {
  FqElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? p_ - a[i] : 0;
  return r;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const { return add(a, neg(b)); }

FqElem FqField::mul(const FqElem& a, const FqElem& b) const { return modp::rem(modp::mul(a, b, p_), modulus_, p_); }

FqElem FqField::pow(FqElem a, std::uint64_t e) const { return powmod_poly(std::move(a), e, modulus_, p_); }

FqElem FqField::inv(const FqElem& a) const {
  if (a.empty()) throw DivisionByZero();
  return pow(a, size_ - 2);
}

FqElem FqField::frobenius(const FqElem& a, int r) const {
  FqElem out = a;
  for (int i = 0; i < r; ++i) out = pow(out, p_);
  return out;
}

FqElem FqField::element(std::uint64_t index) const {
  if (index >= size_) throw Error("FqField: element index out of range");
  FqElem r;
  for (int i = 0; i < k_; ++i) {
    r.push_back(index % p_);
    index /= p_;
  }
  modp::trim(r);
  return r;
}

std::uint64_t FqField::index(const FqElem& a) const {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * p_ + a[i];
  return r;
}

std::vector<std::uint64_t> FqField::coords(const FqElem& a) const {
  std::vector<std::uint64_t> r(k_, 0);
  std::copy(a.begin(), a.end(), r.begin());
  return r;
}

std::string FqField::to_string(const FqElem& a, const std::string& var) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i] << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string FqField::modulus_string(const std::string& var) const { return to_string(modulus_, var); }

bool is_irreducible_mod_p(const ModPoly& f0, std::uint64_t p) {
  ModPoly f = f0;
  modp::trim(f);
  if (f.size() < 2) return false;
  f = modp::make_monic(f, p);
  const std::uint64_t n = f.size() - 1;
  if (n == 1) return true;
  // h[i] = x^(p^i) mod f
  std::vector<ModPoly> h{modp::rem({0, 1}, f, p)};
  for (std::uint64_t i = 1; i <= n; ++i) h.push_back(powmod_poly(h.back(), p, f, p));
  const ModPoly x = modp::rem({0, 1}, f, p);
  if (h[n] != x) return false;
  for (std::uint64_t r : prime_factors(n)) {
    if (modp::gcd(modp::sub(h[n / r], x, p), f, p).size() != 1) return false;
  }
  return true;
}

FqField ff_make(std::uint64_t p, int k) {
  if (!is_prime(p)) throw Error("ff_make: p must be prime");
  if (k < 1) throw Error("ff_make: k must be positive");
  const std::uint64_t size = capped_power(p, k);
  if (!size) throw BudgetExceeded("ff_make: p^k exceeds 2^32");
  for (std::uint64_t t = 0; t < size; ++t) {
    ModPoly f;
    std::uint64_t u = t;
    for (int i = 0; i < k; ++i) {
      f.push_back(u % p);
      u /= p;
    }
    f.push_back(1);
    if (is_irreducible_mod_p(f, p)) return FqField(p, k, f);
  }
  throw Error("ff_make: no irreducible modulus");  // unreachable
}

std::uint64_t multiplicative_order(const FqField& K, const FqElem& a) {
  if (a.empty()) throw Error("multiplicative_order: zero");
  std::uint64_t order = K.size() - 1;
  for (std::uint64_t r : prime_factors(order)) {
    while (order % r == 0 && K.pow(a, order / r) == K.one()) order /= r;
  }
  return order;
}

FqElem multiplicative_generator(const FqField& K) {
  for (std::uint64_t i = 1; i < K.size(); ++i) {
    FqElem a = K.element(i);
    if (multiplicative_order(K, a) == K.size() - 1) return a;
  }
  throw Error("multiplicative_generator: none found");  // unreachable
}

std::pair<std::uint64_t, int> prime_power_parts(std::uint64_t q) {
  if (q < 2) throw Error("not a prime power: " + std::to_string(q));
  const std::uint64_t p = prime_factors(q).front();
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) throw Error("not a prime power");
  return {p, e};
}

Subfield subfield(const FqField& K, std::uint64_t q) {
  const auto [p, e] = prime_power_parts(q);
  if (p != K.p() || K.k() % e) throw Error("subfield: F_" + std::to_string(q) + " is not a subfield");
  Subfield s;
  s.q = q;
  s.zeta = K.pow(multiplicative_generator(K), (K.size() - 1) / (q - 1));
  FqElem b = K.one();
  for (int i = 0; i < e; ++i) {
    s.basis.push_back(b);
    b = K.mul(b, s.zeta);
  }
  return s;
}

bool in_subfield(const FqField& K, const FqElem& a, std::uint64_t q) { return K.pow(a, q) == a; }

int rank_mod_p(const FqField& K, const std::vector<FqElem>& v) {
  const std::uint64_t p = K.p();
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& a : v) rows.push_back(K.coords(a));
  int rank = 0;
  for (int col = 0; col < K.k() && rank < static_cast<int>(rows.size()); ++col) {
    auto piv = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& r) { return r[col] != 0; });
    if (piv == rows.end()) continue;
    std::swap(*piv, rows[rank]);
    const std::uint64_t il = modp::inv(rows[rank][col], p);
    for (auto& x : rows[rank]) x = modp::mulmod(x, il, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || !rows[i][col]) continue;
      const std::uint64_t t = rows[i][col];
      for (int j = 0; j < K.k(); ++j) rows[i][j] = (rows[i][j] + p - modp::mulmod(t, rows[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

int span_dimension(const FqField& K, const std::vector<FqElem>& v, const Subfield& fq) {
  std::vector<FqElem> w;
  for (const auto& b : fq.basis)
    for (const auto& a : v) w.push_back(K.mul(b, a));
  return rank_mod_p(K, w) / static_cast<int>(fq.basis.size());
}

std::vector<FqElem> frobenius_orbit(const FqField& K, const FqElem& a, std::uint64_t q) {
  std::vector<FqElem> out{a};
  for (FqElem cur = K.pow(a, q); cur != a; cur = K.pow(cur, q)) out.push_back(cur);
  return out;
}

void trim(const FqField&, FqPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

FqPoly poly_mul(const FqField& K, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  trim(K, r);
  return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqField& K, const FqPoly& a, const FqPoly& b0) {
  FqPoly b = b0, r = a;
  trim(K, b);
  trim(K, r);
  if (b.empty()) throw DivisionByZero();
  if (r.size() < b.size()) return {{}, r};
  const FqElem il = K.inv(b.back());
  FqPoly q(r.size() - b.size() + 1);
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (r[k].empty()) continue;
    const FqElem t = K.mul(r[k], il);
    q[k - (b.size() - 1)] = t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      FqElem& x = r[k - (b.size() - 1) + j];
      x = K.sub(x, K.mul(t, b[j]));
    }
  }
  trim(K, q);
  trim(K, r);
  return {q, r};
}

FqPoly poly_gcd(const FqField& K, const FqPoly& a0, const FqPoly& b0) {
  FqPoly a = a0, b = b0;
  trim(K, a);
  trim(K, b);
  while (!b.empty()) {
    FqPoly r = poly_divmod(K, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const FqElem il = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, il);
  return a;
}

FqElem poly_eval(const FqField& K, const FqPoly& f, const FqElem& x) {
  FqElem r;
  for (std::size_t i = f.size(); i-- > 0;) r = K.add(K.mul(r, x), f[i]);
  return r;
}

std::string poly_to_string(const FqField& K, const FqPoly& f, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].empty()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = K.to_string(f[i], "x");
    const bool compound = c.find(' ') != std::string::npos || c.find('x') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + c + ")" : c);
      continue;
    }
    if (c != "1") os << (compound ? "(" + c + ")" : c) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

namespace {

FqPoly poly_powmod(const FqField& K, FqPoly a, std::uint64_t e, const FqPoly& f) {
  FqPoly r{K.one()};
  a = poly_divmod(K, a, f).second;
  while (e) {
    if (e & 1) r = poly_divmod(K, poly_mul(K, r, a), f).second;
    e >>= 1;
    if (e) a = poly_divmod(K, poly_mul(K, a, a), f).second;
  }
  return r;
}

FqPoly poly_sub(const FqField& K, FqPoly a, const FqPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
  trim(K, a);
  return a;
}

}  // namespace

bool is_irreducible_over(const FqField& K, const FqPoly& f0, std::uint64_t q) {
  FqPoly f = f0;
  trim(K, f);
  if (f.size() < 2) return false;
  for (const auto& c : f)
    if (!in_subfield(K, c, q)) throw Error("is_irreducible_over: coefficient outside F_q");
  const std::uint64_t n = f.size() - 1;
  if (n == 1) return true;
  const FqPoly x{K.zero(), K.one()};
  std::vector<FqPoly> h{poly_divmod(K, x, f).second};
  for (std::uint64_t i = 1; i <= n; ++i) h.push_back(poly_powmod(K, h.back(), q, f));
  if (h[n] != poly_divmod(K, x, f).second) return false;
  for (std::uint64_t r : prime_factors(n)) {
    if (poly_gcd(K, poly_sub(K, h[n / r], x), f).size() != 1) return false;
  }
  return true;
}

FqElem LinearizedPoly::operator()(const FqField& K, const FqElem& x) const {
  FqElem acc, cur = x;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = K.add(acc, K.mul(coeffs[i], cur));
    if (i + 1 < coeffs.size()) cur = K.pow(cur, base_q);
  }
  return acc;
}

FqPoly LinearizedPoly::dense() const {
  if (coeffs.empty()) return {};
  const std::uint64_t top = capped_power(base_q, coeffs.size() - 1);
  if (!top || top > (1u << 20)) throw BudgetExceeded("LinearizedPoly::dense: degree too large");
  FqPoly out(top + 1);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i, e *= base_q) out[e] = coeffs[i];
  return out;
}

LinearizedPoly linearized_from_minpoly(const FqField& K, const FqPoly& f0, std::uint64_t q) {
  FqPoly f = f0;
  trim(K, f);
  if (f.empty() || f.back() != K.one()) throw Error("linearized_from_minpoly: f must be monic");
  if (!is_irreducible_over(K, f, q)) throw Error("linearized_from_minpoly: f is reducible over F_q");
  return {q, f};
}

namespace {

// Left kernel of the rows over F_p, as coordinate vectors.
std::vector<std::vector<std::uint64_t>> left_kernel(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  const std::size_t m = rows.size(), w = m ? rows[0].size() : 0;
  std::vector<std::vector<std::uint64_t>> aug(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) aug[i][i] = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && !rows[piv][col]) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(aug[piv], aug[rank]);
    const std::uint64_t il = modp::inv(rows[rank][col], p);
    for (auto& x : rows[rank]) x = modp::mulmod(x, il, p);
    for (auto& x : aug[rank]) x = modp::mulmod(x, il, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || !rows[i][col]) continue;
      const std::uint64_t t = rows[i][col];
      for (std::size_t j = 0; j < w; ++j) rows[i][j] = (rows[i][j] + p - modp::mulmod(t, rows[rank][j], p)) % p;
      for (std::size_t j = 0; j < m; ++j) aug[i][j] = (aug[i][j] + p - modp::mulmod(t, aug[rank][j], p)) % p;
    }
    ++rank;
  }
  return {aug.begin() + rank, aug.end()};
}

}  // namespace

DqnReport verify_Dqn(std::uint64_t q, int n) {
  if (n < 1) throw Error("verify_Dqn: n must be positive");
  DqnReport rep;
  rep.q = q;
  rep.n = n;
  const auto [p, e] = prime_power_parts(q);
  rep.p = p;
  rep.e = e;
  const std::uint64_t qn = capped_power(q, n);
  if (!qn) throw BudgetExceeded("verify_Dqn: q^n exceeds 2^32");
  rep.d = qn - 1;
  if (!capped_power(p, static_cast<std::uint64_t>(e) * rep.d))
    throw BudgetExceeded("verify_Dqn: q^(q^n - 1) exceeds 2^32");

  // g generates F_{q^n}^*, f its minimal polynomial over F_q.
  const FqField Kn = ff_make(p, e * n);
  const FqElem g = multiplicative_generator(Kn);
  rep.small_field_modulus = Kn.modulus_string();
  rep.generator = Kn.to_string(g);
  FqPoly f{Kn.one()};
  FqElem root = g;
  for (int j = 0; j < n; ++j) {
    f = poly_mul(Kn, f, {Kn.neg(root), Kn.one()});
    root = Kn.pow(root, q);
  }

  // Carry F_q inside F_{q^n} to F_q inside K through generators with the same
  // minimal polynomial over F_p.
  const FqField K = ff_make(p, static_cast<int>(e * rep.d));
  rep.field_modulus = K.modulus_string();
  const FqElem zeta_n = Kn.pow(g, (qn - 1) / (q - 1));
  FqPoly mp{Kn.one()};
  root = zeta_n;
  for (int i = 0; i < e; ++i) {
    mp = poly_mul(Kn, mp, {Kn.neg(root), Kn.one()});
    root = Kn.pow(root, p);
  }
  FqPoly mpK;
  for (const auto& c : mp) mpK.push_back(K.scalar(c.empty() ? 0 : c[0]));
  const FqElem zeta0 = K.pow(multiplicative_generator(K), (K.size() - 1) / (q - 1));
  FqElem zeta;
  for (std::uint64_t j = 1; j < q; ++j) {
    if (std::gcd(j, q - 1) != 1) continue;
    FqElem z = K.pow(zeta0, j);
    if (poly_eval(K, mpK, z).empty()) {
      zeta = z;
      break;
    }
  }
  if (zeta.empty()) throw Error("verify_Dqn: no matching generator of F_q");
  auto carry = [&](const FqElem& c) -> FqElem {
    if (c.empty()) return {};
    FqElem z = Kn.one();
    for (std::uint64_t t = 0; t + 1 < q; ++t, z = Kn.mul(z, zeta_n))
      if (z == c) return K.pow(zeta, t);
    throw Error("verify_Dqn: coefficient outside F_q");
  };
  FqPoly fK;
  for (const auto& c : f) fK.push_back(carry(c));
  rep.minpoly = poly_to_string(K, fK);
  const LinearizedPoly L = linearized_from_minpoly(K, fK, q);
  rep.linearized = poly_to_string(K, L.dense());

  // Zeros of L in K: L is F_p-linear, so solve on the basis 1, x, ..., x^(m-1).
  std::vector<std::vector<std::uint64_t>> rows;
  FqElem basis = K.one();
  for (int j = 0; j < K.k(); ++j, basis = K.mul(basis, K.x())) rows.push_back(K.coords(L(K, basis)));
  const auto kernel = left_kernel(rows, p);
  rep.root_space_dimension = static_cast<int>(kernel.size()) / e;
  if (kernel.empty()) throw Error("verify_Dqn: L has no nonzero zero in K");
  FqElem alpha(kernel[0].begin(), kernel[0].end());
  modp::trim(alpha);
  if (!L(K, alpha).empty()) throw Error("verify_Dqn: kernel vector is not a zero of L");
  rep.alpha = K.to_string(alpha);

  const auto orb = frobenius_orbit(K, alpha, q);
  rep.orbit_size = static_cast<int>(orb.size());
  for (const auto& a : orb) rep.orbit.push_back(K.to_string(a));
  Subfield fq;
  fq.q = q;
  fq.zeta = zeta;
  FqElem b = K.one();
  for (int i = 0; i < e; ++i, b = K.mul(b, zeta)) fq.basis.push_back(b);
  rep.span_dimension = span_dimension(K, orb, fq);

  bool roots_ok = true;
  if (K.size() <= (1u << 16)) {
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < K.size(); ++i) zeros += L(K, K.element(i)).empty();
    rep.roots_brute_forced = true;
    roots_ok = zeros == capped_power(q, rep.root_space_dimension);
  }
  rep.passed = roots_ok && rep.orbit_size == static_cast<int>(rep.d) && rep.span_dimension == n &&
               rep.root_space_dimension == n;
  return rep;
}

ScanReport scan_upper_bound(std::uint64_t q, int n, int m_max) {
  const auto [p, e] = prime_power_parts(q);
  ScanReport rep;
  rep.q = q;
  rep.n = n;
  const std::uint64_t qn = capped_power(q, n);
  if (!qn) throw BudgetExceeded("scan_upper_bound: q^n exceeds 2^32");
  rep.bound = qn - 1;
  for (int m = 1; m <= m_max; ++m) {
    const FqField K = ff_make(p, e * m);
    if (K.size() > (1u << 20)) throw BudgetExceeded("scan_upper_bound: field too large for a full scan");
    const Subfield fq = subfield(K, q);
    ScanLevel lv;
    lv.m = m;
    lv.elements = K.size();
    for (std::uint64_t i = 0; i < K.size(); ++i) {
      const FqElem a = K.element(i);
      const auto orb = frobenius_orbit(K, a, q);
      if (span_dimension(K, orb, fq) > n) continue;
      lv.max_degree_within = std::max<std::uint64_t>(lv.max_degree_within, orb.size());
      if (orb.size() > rep.bound) lv.violations.push_back(K.to_string(a));
    }
    rep.levels.push_back(std::move(lv));
  }
  rep.passed = std::all_of(rep.levels.begin(), rep.levels.end(), [](const ScanLevel& l) { return l.violations.empty(); });
  return rep;
}

SubspacePoly linearized_poly_of_subspace(const FqField& K, const std::vector<FqElem>& V, std::uint64_t q) {
  std::set<std::uint64_t> idx;
  for (const auto& v : V) idx.insert(K.index(v));
  if (idx.size() != V.size()) throw Error("linearized_poly_of_subspace: repeated elements");
  if (!idx.count(0)) throw Error("linearized_poly_of_subspace: V does not contain 0");
  const Subfield fq = subfield(K, q);
  std::vector<FqElem> scalars{K.zero()};
  for (FqElem z = K.one(); scalars.size() < q; z = K.mul(z, fq.zeta)) scalars.push_back(z);
  for (const auto& a : V) {
    for (const auto& c : scalars)
      if (!idx.count(K.index(K.mul(c, a)))) throw Error("linearized_poly_of_subspace: not closed under F_q");
    for (const auto& b : V)
      if (!idx.count(K.index(K.add(a, b)))) throw Error("linearized_poly_of_subspace: not closed under addition");
  }
  SubspacePoly out;
  for (std::uint64_t s = V.size(); s > 1; s /= q) ++out.dimension;
  out.poly = {K.one()};
  for (const auto& v : V) out.poly = poly_mul(K, out.poly, {K.neg(v), K.one()});
  out.linearized = true;
  for (std::size_t i = 0; i < out.poly.size(); ++i) {
    if (out.poly[i].empty()) continue;
    std::uint64_t e = 1;
    int j = 0;
    while (e < i && j < out.dimension) {
      e *= q;
      ++j;
    }
    if (e != i) out.linearized = false;
  }
  return out;
}

}  // namespace conjdim
