#include "conjdim/poly_algebra.hpp"

#include <algorithm>

#include "conjdim/error.hpp"
#include "conjdim/irreducibility.hpp"

namespace conjdim {

UniPoly monic(const UniPoly& f) {
  if (f.is_zero_poly() || f.lead().is_one()) return f;
  return f * f.lead().inverse();
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  if (!same_field(f.zero_element().field(), g.zero_element().field())) throw FieldMismatch();
  UniPoly a = monic(f), b = monic(g);
  while (!b.is_zero_poly()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() < 1) return monic(f);
  UniPoly g = poly_gcd(f, f.derivative());
  return monic(exact_div(f, g));
}

bool is_squarefree(const UniPoly& f) {
  if (f.degree() < 1) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

NFElem discriminant(const UniPoly& f) {
  const int d = f.degree();
  if (d < 1) throw Error("discriminant of a constant polynomial");
  NFElem r = resultant(f, f.derivative()) / f.lead();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2) r = -r;
  return r;
}

std::vector<NFElem> powersums_to_elementary(const std::vector<NFElem>& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return {};
  const FieldPtr& k = p[0].field();
  std::vector<NFElem> e{NFElem(k, Rational(1))};
  for (int i = 1; i <= n; ++i) {
    NFElem acc(k);
    for (int j = 1; j <= i; ++j) {
      NFElem t = e[i - j] * p[j - 1];
      if (j % 2) acc += t;
      else acc -= t;
    }
    e.push_back(acc * Rational(1, i));
  }
  e.erase(e.begin());
  return e;
}

std::vector<MultiPoly> elementary_in_powersums(int n, const FieldPtr& field, const std::vector<std::string>& p_vars) {
  std::vector<MultiPoly> p, e{one_like(MultiPoly(field, p_vars))};
  for (int j = 0; j < n; ++j) p.push_back(MultiPoly::variable(field, p_vars, j));
  for (int i = 1; i <= n; ++i) {
    MultiPoly acc(field, p_vars);
    for (int j = 1; j <= i; ++j) {
      MultiPoly t = e[i - j] * p[j - 1];
      if (j % 2) acc += t;
      else acc -= t;
    }
    e.push_back(acc * NFElem(field, Rational(1, i)));
  }
  e.erase(e.begin());
  return e;
}

std::vector<MultiPoly> powersums_in_basis(int n, int kmax, const FieldPtr& field,
                                          const std::vector<std::string>& p_vars) {
  std::vector<MultiPoly> e = elementary_in_powersums(n, field, p_vars);
  std::vector<MultiPoly> p;
  for (int k = 1; k <= std::min(n, kmax); ++k) p.push_back(MultiPoly::variable(field, p_vars, k - 1));
  for (int k = n + 1; k <= kmax; ++k) {
    // p_k = sum_{i=1..n} (-1)^(i-1) e_i p_{k-i}
    MultiPoly acc(field, p_vars);
    for (int i = 1; i <= n; ++i) {
      MultiPoly t = e[i - 1] * p[k - i - 1];
      if (i % 2) acc += t;
      else acc -= t;
    }
    p.push_back(acc);
  }
  return p;
}

MultiPoly powersum_in_elementary(int k, int n, const FieldPtr& field, const std::vector<std::string>& e_vars) {
  std::vector<MultiPoly> p;  // p[j] = p_{j+1}
  auto e = [&](int i) { return MultiPoly::variable(field, e_vars, i - 1); };
  for (int m = 1; m <= k; ++m) {
    MultiPoly acc(field, e_vars);
    for (int i = 1; i <= std::min(m - 1, n); ++i) {
      MultiPoly t = e(i) * p[m - i - 1];
      if (i % 2) acc += t;
      else acc -= t;
    }
    if (m <= n) {
      MultiPoly t = e(m) * NFElem(field, Rational(m));
      if (m % 2) acc += t;
      else acc -= t;
    }
    p.push_back(acc);
  }
  return p[k - 1];
}

MultiPoly newton_reduce(const MultiPoly& expr, const std::vector<int>& weights, int n,
                        const std::vector<std::string>& out_vars) {
  if (static_cast<int>(weights.size()) != expr.arity()) throw Error("newton_reduce: one weight per variable");
  if (static_cast<int>(out_vars.size()) != n) throw Error("newton_reduce: need n output variables");
  const int kmax = weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
  std::vector<MultiPoly> p = powersums_in_basis(n, std::max(kmax, n), expr.field(), out_vars);
  std::vector<MultiPoly> values;
  for (int w : weights) {
    if (w < 1) throw Error("newton_reduce: power-sum index must be positive");
    values.push_back(p[w - 1]);
  }
  if (values.empty()) return MultiPoly::constant(expr.field(), out_vars, expr.constant_term());
  return expr.substitute_all(values);
}

PowerRoot perfect_power_root(const UniPoly& r, int m) {
  if (m < 1) throw Error("perfect_power_root: m must be positive");
  if (r.is_zero_poly()) throw Error("perfect_power_root: zero polynomial");
  const int big_d = r.degree();
  if (big_d % m) throw Error("perfect_power_root: degree not divisible by m");
  const int k = big_d / m;
  const NFElem c = r.lead();
  const UniPoly rm = monic(r);
  const FieldPtr& field = c.field();
  // s = reversed monic R, s_0 = 1; t = s^(1/m) as a power series to order k.
  std::vector<NFElem> s(big_d + 1, NFElem(field));
  for (int i = 0; i <= big_d; ++i) s[i] = rm[big_d - i];
  std::vector<NFElem> t{NFElem(field, Rational(1))};
  for (int j = 1; j <= k; ++j) {
    NFElem acc(field);
    for (int i = 1; i <= j && i <= big_d; ++i) {
      if (s[i].is_zero()) continue;
      Rational w = rational_normalize(i, m) - Rational(j - i);
      acc += s[i] * t[j - i] * w;
    }
    t.push_back(acc * Rational(1, j));
  }
  std::vector<NFElem> pc(k + 1, NFElem(field));
  for (int i = 0; i <= k; ++i) pc[i] = t[k - i];
  UniPoly p(NFElem(field), std::move(pc));
  if (!(p.pow(static_cast<unsigned>(m)) == rm)) throw Error("polynomial is not a perfect " + std::to_string(m) + "-th power");
  return {p, c};
}

bool in_delta_square_class(const Rational& a, const Rational& delta) {
  if (a == 0 || delta == 0) throw Error("in_delta_square_class: zero input");
  return rational_is_square(a) || rational_is_square(a * delta);
}

bool rational_square_in_odd_degree_field(const Rational& q, const NumberField& k) {
  if (k.degree() % 2 == 0) throw Error("square test only decided for odd-degree fields");
  return rational_is_square(q);
}

std::vector<Rational> rational_coeffs(const UniPoly& f) {
  std::vector<Rational> out;
  for (const auto& c : f.coeffs()) out.push_back(c.to_rational());
  return out;
}

Rational evaluate_rational(const UniPoly& f, const Rational& x) {
  Rational acc = 0;
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f[k].to_rational();
  return acc;
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& f) {
  std::vector<Rational> q = rational_coeffs(f);
  Integer l = denominator_lcm(q);
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& x : q) {
    Rational y = x * l;
    z.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g == 0) return z;
  if (!z.empty() && z.back() < 0) g = -g;
  for (auto& x : z) x /= g;
  return z;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    Rational t = a[k] / b.back();
    for (int j = 0; j <= db; ++j) a[k - db + j] -= t * b[j];
  }
  if (static_cast<int>(a.size()) > db) a.resize(db);
  qtrim(a);
  return a;
}

Rational qeval(const QPoly& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq{f};
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  qtrim(d);
  if (d.empty()) return seq;
  seq.push_back(d);
  for (;;) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    // Normalise to keep numbers small; only signs matter.
    Rational s = abs(r.back());
    for (auto& x : r) x /= s;
    seq.push_back(r);
  }
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last && s != last) ++v;
    last = s;
  }
  return v;
}

int changes_at(const std::vector<QPoly>& seq, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(sign_of(qeval(p, x)));
  return sign_changes(s);
}

Rational cauchy_bound(const QPoly& f) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) m = std::max(m, Rational(abs(f[i] / f.back())));
  return m + 1;
}

void isolate(const std::vector<QPoly>& seq, Rational lo, Rational hi, int vlo, int vhi, std::vector<RealInterval>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = changes_at(seq, mid);
  if (qeval(seq[0], mid) == 0) {
    // Exact rational root at mid: split around it.
    Rational eps = (hi - lo) / 4;
    while (changes_at(seq, mid - eps) - changes_at(seq, mid + eps) != 1) eps /= 2;
    isolate(seq, lo, mid - eps, vlo, changes_at(seq, mid - eps), out);
    out.push_back({mid, mid});
    isolate(seq, mid + eps, hi, changes_at(seq, mid + eps), vhi, out);
    return;
  }
  isolate(seq, lo, mid, vlo, vmid, out);
  isolate(seq, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<RealInterval> isolate_real_roots(const UniPoly& f) {
  QPoly q = rational_coeffs(f);
  if (q.size() < 2) return {};
  auto seq = sturm_sequence(q);
  Rational b = cauchy_bound(q);
  std::vector<RealInterval> out;
  isolate(seq, -b, b, changes_at(seq, -b), changes_at(seq, b), out);
  return out;
}

RealInterval refine_root(const UniPoly& f, RealInterval iv, const Rational& width) {
  QPoly q = rational_coeffs(f);
  if (iv.lo == iv.hi) return iv;
  int slo = sign_of(qeval(q, iv.lo));
  if (slo == 0) return {iv.lo, iv.lo};
  if (sign_of(qeval(q, iv.hi)) == 0) return {iv.hi, iv.hi};
  while (iv.hi - iv.lo >= width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sign_of(qeval(q, mid));
    if (s == 0) return {mid, mid};
    if (s == slo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

RealEmbedding::RealEmbedding(FieldPtr field, RealInterval iv) : field_(std::move(field)), iv_(std::move(iv)) {}

RealEmbedding RealEmbedding::largest_real_root(const FieldPtr& field) {
  UniPoly m = make_unipoly(NumberField::rationals(), field->modulus());
  auto roots = isolate_real_roots(m);
  if (roots.empty()) throw Error("field " + field->label() + " has no real embedding");
  return RealEmbedding(field, roots.back());
}

RealEmbedding RealEmbedding::rational(const FieldPtr& field) {
  if (field->degree() != 1) throw Error("not the rational field");
  Rational r = -field->modulus()[0];
  return RealEmbedding(field, {r, r});
}

int RealEmbedding::sign(const NFElem& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sign_of(a.coords()[0]);
  const UniPoly m = make_unipoly(NumberField::rationals(), field_->modulus());
  for (int iter = 0; iter < 100000; ++iter) {
    // Interval evaluation of sum c_k t^k for t in [lo, hi].
    Rational lo = 0, hi = 0;
    Rational plo = 1, phi = 1;  // interval for t^k
    for (std::size_t k = 0; k < a.coords().size(); ++k) {
      if (k > 0) {
        Rational cands[4] = {plo * iv_.lo, plo * iv_.hi, phi * iv_.lo, phi * iv_.hi};
        plo = *std::min_element(cands, cands + 4);
        phi = *std::max_element(cands, cands + 4);
      }
      const Rational& c = a.coords()[k];
      if (c >= 0) {
        lo += c * plo;
        hi += c * phi;
      } else {
        lo += c * phi;
        hi += c * plo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (iv_.lo == iv_.hi) return 0;
    iv_ = refine_root(m, iv_, (iv_.hi - iv_.lo) / 4);
  }
  throw Error("sign determination did not terminate");
}

RealRootCount count_real_roots(const UniPoly& f_in, RealEmbedding& emb) {
  RealRootCount out;
  UniPoly f = f_in;
  const NFElem zero(f.zero_element().field());
  while (f.degree() >= 1 && f[0].is_zero()) {
    out.zero_is_root = true;
    f = exact_div(f, unipoly_x(zero.field()));
  }
  std::vector<UniPoly> seq{f};
  if (f.degree() >= 1) {
    seq.push_back(f.derivative());
    for (;;) {
      UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero_poly()) break;
      // Positive rescaling keeps signs.
      NFElem lc = r.lead();
      int s = emb.sign(lc);
      r = r * (lc.inverse() * Rational(s));
      seq.push_back(-r);
    }
  }
  std::vector<int> at_neg_inf, at_zero, at_pos_inf;
  for (const auto& p : seq) {
    int s = emb.sign(p.lead());
    at_pos_inf.push_back(s);
    at_neg_inf.push_back(p.degree() % 2 ? -s : s);
    at_zero.push_back(emb.sign(p[0]));
  }
  const int vn = sign_changes(at_neg_inf), v0 = sign_changes(at_zero), vp = sign_changes(at_pos_inf);
  out.negative_roots = vn - v0;
  out.positive_roots = v0 - vp;
  out.real_roots = out.negative_roots + out.positive_roots + (out.zero_is_root ? 1 : 0);
  return out;
}

FieldPtr make_number_field(const UniPoly& defining_poly, const std::string& label, bool assert_irreducible) {
  if (!defining_poly.zero_element().field()->is_rationals()) throw Error("defining polynomial must have rational coefficients");
  if (defining_poly.degree() < 1) throw Error("defining polynomial must have degree >= 1");
  if (!defining_poly.lead().is_one()) throw Error("defining polynomial must be monic");
  std::vector<Rational> c = rational_coeffs(defining_poly);
  if (defining_poly.degree() == 1) return NumberField::create(c, label, IrreducibilityProvenance::Trivial);
  if (assert_irreducible) return NumberField::create(c, label, IrreducibilityProvenance::Asserted);
  IrreducibilityCertificate cert = irreducibility_certificate(defining_poly);
  if (cert.verdict == Verdict::Reducible) throw Error("defining polynomial is reducible");
  if (cert.verdict != Verdict::Irreducible)
    throw Error("irreducibility of the defining polynomial could not be certified; assert it explicitly");
  return NumberField::create(c, label, IrreducibilityProvenance::Certified);
}

}  // namespace conjdim
