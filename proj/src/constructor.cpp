#include "conjdim/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "conjdim/error.hpp"
#include "conjdim/resultant.hpp"

namespace conjdim {

namespace {

Action opposite(Action a) { return a == Action::Row ? Action::Column : Action::Row; }

NFElem lift(const NFElem& a, const FieldPtr& k) {
  if (same_field(a.field(), k)) return a;
  if (!a.is_rational()) throw FieldMismatch();
  return NFElem(k, a.to_rational());
}

Vector unit_vector(const FieldPtr& k, int n, int i) {
  Vector v(n, NFElem(k));
  v[i] = NFElem(k, Rational(1));
  return v;
}

std::vector<MultiPoly> equations(const InvariantSystem& sys, const std::vector<NFElem>& c) {
  const FieldPtr& k = sys.group->field();
  if (c.size() != sys.polys.size()) throw Error("expected " + std::to_string(sys.polys.size()) + " constants");
  std::vector<MultiPoly> e;
  for (std::size_t j = 0; j < c.size(); ++j) {
    MultiPoly p = lift_to_field(sys.polys[j], k);
    e.push_back(p - MultiPoly::constant(k, p.vars(), lift(c[j], k)));
  }
  return e;
}

// Eliminates x_n, ..., x_2 by pairwise resultants against a pivot, starting
// the equation list at `rotation`.
UniPoly elimination_chain(std::vector<MultiPoly> cur, int rotation) {
  std::rotate(cur.begin(), cur.begin() + rotation, cur.end());
  const int n = cur[0].arity();
  for (int v = n - 1; v >= 1; --v) {
    int piv = -1;
    for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
      const int d = cur[j].degree_in(v);
      if (d > 0 && (piv < 0 || d < cur[piv].degree_in(v))) piv = j;
    }
    if (piv < 0) throw Error("elimination: variable does not occur");
    std::vector<MultiPoly> next;
    for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
      if (j == piv) continue;
      next.push_back(cur[j].degree_in(v) > 0 ? resultant(cur[piv], cur[j], v) : cur[j]);
    }
    cur = std::move(next);
  }
  return cur.at(0).to_unipoly(0);
}

BigComplex eval_numeric(const MultiPoly& f, const std::vector<BigComplex>& pt, const BigComplex& gen) {
  BigComplex acc;
  for (const auto& [m, c] : f.terms()) {
    BigComplex t = numeric_value(c, gen);
    for (int i = 0; i < f.arity(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= pt[i];
    acc += t;
  }
  return acc;
}

BigFloat pow10(int e) {
  BigFloat r(1L), ten(10L);
  for (int i = 0; i < std::abs(e); ++i) r *= ten;
  return e < 0 ? BigFloat(1L) / r : r;
}

BigComplex eval_numeric(const UniPoly& f, const BigComplex& z, const BigComplex& gen) {
  return horner(numeric_coeffs(f, gen), z);
}

// Splits f into factors that the certificate could not split further.
std::vector<UniPoly> split_by_certificates(const UniPoly& f) {
  std::vector<UniPoly> out, stack{monic(f)};
  while (!stack.empty()) {
    UniPoly g = stack.back();
    stack.pop_back();
    if (g.degree() <= 1) {
      out.push_back(g);
      continue;
    }
    IrreducibilityCertificate cert = irreducibility_certificate(g);
    if (cert.verdict == Verdict::Reducible && cert.witness_factor && cert.witness_factor->degree() > 0 &&
        cert.witness_factor->degree() < g.degree()) {
      const UniPoly w = monic(*cert.witness_factor);
      stack.push_back(w);
      stack.push_back(monic(exact_div(g, w)));
    } else {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

AuxiliaryPoly eliminate_to_auxiliary(const InvariantSystem& sys, const std::vector<NFElem>& c) {
  const MatGroup& g = *sys.group;
  const int n = g.dim();
  if (static_cast<int>(c.size()) != n) throw Error("eliminate_to_auxiliary: need " + std::to_string(n) + " constants");
  const std::vector<MultiPoly> e = equations(sys, c);
  const long long order = g.order();
  AuxiliaryPoly aux;
  aux.orbit_size = static_cast<int>(orbit(g, unit_vector(g.field(), n, 0), opposite(g.natural_action())).elements.size());
  aux.power = static_cast<int>(order / aux.orbit_size);
  if (n == 1) {
    aux.resultant = e[0].to_unipoly(0);
  } else {
    aux.resultant = elimination_chain(e, 0);
  }
  const UniPoly& r = aux.resultant;
  if (r.is_zero_poly()) throw DegenerateConstants("eliminate_to_auxiliary: resultant vanishes identically", 0);
  if (n <= 2) {
    if (r.degree() != order)
      throw DegenerateConstants("eliminate_to_auxiliary: resultant has degree " + std::to_string(r.degree()) +
                                    ", expected " + std::to_string(order),
                                squarefree_part(r).degree());
    try {
      PowerRoot pr = perfect_power_root(r, aux.power);
      aux.poly = pr.root;
      aux.constant = pr.constant;
    } catch (const Error&) {
      throw DegenerateConstants("eliminate_to_auxiliary: resultant is not a perfect power", squarefree_part(r).degree());
    }
  } else {
    // A single chain can pick up extraneous factors; intersect several.
    UniPoly acc = r;
    for (int rot = 1; rot < std::min(n, 3); ++rot) acc = poly_gcd(acc, elimination_chain(e, rot));
    aux.poly = monic(squarefree_part(acc));
    aux.constant = r.lead();
  }
  if (!is_squarefree(aux.poly) || aux.poly.degree() != aux.orbit_size)
    throw DegenerateConstants("eliminate_to_auxiliary: P_N has degree " + std::to_string(squarefree_part(aux.poly).degree()) +
                                  " after removing repeated roots, expected " + std::to_string(aux.orbit_size),
                              squarefree_part(aux.poly).degree());
  return aux;
}

std::vector<Rational> coordinate_weights(const std::string& group, const std::vector<Rational>& b) {
  if (group == "G2") {
    if (b.size() != 2) throw Error("G2 weights need two entries");
    return {b[0], -b[1]};
  }
  return b;
}

std::vector<BigComplex> numeric_point(const InvariantSystem& sys, const std::vector<NFElem>& c,
                                      const AuxiliaryPoly& aux, int digits) {
  const int n = sys.group->dim();
  if (n > 2) throw Error("numeric_point: only n <= 2");
  PrecisionScope scope(digits_to_bits(digits + 10));
  const BigComplex gen = default_generator_value(sys.group->field());
  RootSet rs = roots_numeric(aux.poly, digits + 10, gen);
  const BigComplex beta = rs.roots.at(0).mid;
  if (n == 1) return {beta};
  const std::vector<MultiPoly> e = equations(sys, c);
  int pick = -1;
  for (int j = 0; j < 2; ++j)
    if (e[j].degree_in(1) > 0 && (pick < 0 || e[j].degree_in(1) < e[pick].degree_in(1))) pick = j;
  if (pick < 0) throw Error("numeric_point: x2 does not occur");
  std::vector<BigComplex> coeffs(e[pick].degree_in(1) + 1);
  for (const auto& [m, a] : e[pick].terms()) {
    BigComplex t = numeric_value(a, gen);
    for (int k = 0; k < m[0]; ++k) t *= beta;
    coeffs[m[1]] += t;
  }
  const auto cand = complex_roots(coeffs, digits + 10);
  const MultiPoly& other = e[1 - pick];
  std::optional<BigComplex> best;
  BigFloat best_err(0L);
  for (const auto& z : cand) {
    const BigFloat err = eval_numeric(other, {beta, z.mid}, gen).abs();
    if (!best || err < best_err) {
      best = z.mid;
      best_err = err;
    }
  }
  return {beta, *best};
}

ShiftedMinpoly minpoly_by_shifted_resultant(const InvariantSystem& sys, const std::vector<NFElem>& c,
                                            const std::vector<Rational>& weights, const ShiftedOptions& opt) {
  const MatGroup& g = *sys.group;
  if (g.dim() != 2) throw Error("minpoly_by_shifted_resultant: needs n = 2");
  if (weights.size() != 2 || weights[0] == 0) throw Error("minpoly_by_shifted_resultant: need weights (b1, b2) with b1 != 0");
  const FieldPtr& k = g.field();
  const std::vector<std::string> vars{"y", "x2"};
  const std::vector<MultiPoly> e = equations(sys, c);
  // x1 = (y - b2 x2) / b1
  const MultiPoly y = MultiPoly::variable(k, vars, 0), x2 = MultiPoly::variable(k, vars, 1);
  const MultiPoly x1 = (y - x2 * NFElem(k, weights[1])) * NFElem(k, 1 / weights[0]);
  std::vector<MultiPoly> f;
  for (const auto& ej : e) f.push_back(ej.remap(vars, {0, 1}).substitute(0, x1));
  ShiftedMinpoly out;
  out.resultant = resultant(f[0], f[1], 1).to_unipoly(0);
  if (out.resultant.is_zero_poly()) throw DegenerateConstants("shifted resultant vanishes identically", 0);
  const Vector bvec = rational_vector(k, weights);
  const long long orb = static_cast<long long>(orbit(g, bvec, opposite(g.natural_action())).elements.size());
  out.power = static_cast<int>(g.order() / orb);
  UniPoly p{NFElem(k)};
  try {
    p = perfect_power_root(out.resultant, out.power).root;
  } catch (const Error&) {
    p = monic(squarefree_part(out.resultant));
    out.note = "resultant is not a " + std::to_string(out.power) + "-th power; using its squarefree part";
  }
  if (!is_squarefree(p)) {
    p = monic(squarefree_part(p));
    out.note = "repeated roots removed";
  }
  out.poly = p;
  if (!opt.certify) return out;
  out.certificate = irreducibility_certificate(p);
  if (out.certificate.verdict != Verdict::Reducible) return out;
  // Pick the factor vanishing at the numeric alpha.
  const std::vector<UniPoly> parts = split_by_certificates(p);
  const AuxiliaryPoly aux = eliminate_to_auxiliary(sys, c);
  PrecisionScope scope(digits_to_bits(opt.digits + 10));
  const std::vector<BigComplex> pt = numeric_point(sys, c, aux, opt.digits);
  const BigComplex alpha = pt[0] * BigComplex(BigFloat(weights[0])) + pt[1] * BigComplex(BigFloat(weights[1]));
  const BigComplex gen = default_generator_value(k);
  std::size_t best = 0;
  BigFloat best_err(0L);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const BigFloat err = eval_numeric(parts[i], alpha, gen).abs();
    if (i == 0 || err < best_err) {
      best = i;
      best_err = err;
    }
  }
  out.poly = parts[best];
  out.factor_selected = true;
  out.note = "resultant is reducible; kept the factor of degree " + std::to_string(out.poly.degree()) +
             " vanishing at the numeric alpha";
  out.certificate = irreducibility_certificate(out.poly);
  return out;
}

// ---------------------------------------------------------------------------
// F4

namespace {

// f over Q with the variables in `values` replaced by field elements, read as
// a polynomial in `keep`.
UniPoly specialize(const MultiPoly& f, int keep, const std::vector<std::pair<int, NFElem>>& values, const FieldPtr& k) {
  MultiPoly h = lift_to_field(f, k);
  for (const auto& [var, val] : values) h = h.substitute(var, MultiPoly::constant(k, h.vars(), val));
  return h.to_unipoly(keep);
}

}  // namespace

UniPoly f4_reference_q4(const FieldPtr& k) {
  return parse_multipoly(
             "x^4 - 5*x^3 + 20261200695/3175710433*x^2 + 34560/3175710433*x^2*gamma^2"
             " - 47690820/3175710433*x^2*gamma + 36679035170/9527131299*x - 28800/3175710433*x*gamma^2"
             " + 39742350/3175710433*x*gamma - 203476507483/38108525196 - 72000/3175710433*gamma^2"
             " - 56249419/12702841732*gamma",
             k, {"x"})
      .to_unipoly(0);
}

UniPoly f4_reference_p24() {
  return parse_multipoly(
             "x^24 - 15*x^22 + 375/4*x^20 - 2405/8*x^18 + 65435/128*x^16 - 25905/64*x^14"
             " - 181583/3072*x^12 + 8367137/18432*x^10 - 28198575/65536*x^8 + 1338226651/5308416*x^6"
             " - 895964239/8847360*x^4 + 4234139/294912*x^2 - 24389830879/1592524800",
             NumberField::rationals(), {"x"})
      .to_unipoly(0);
}

F4Chain f4_gamma_chain(const std::vector<Rational>& values, bool certify_p24) {
  if (values.size() != 4) throw Error("f4_gamma_chain: need I2, I6, I8, I12");
  const FieldPtr& q = NumberField::rationals();
  F4Chain ch;
  ch.invariant_values = values;
  ch.s2 = values[0] / 6;  // I2 = 6 s2
  const auto& sv = f4_s_vars();  // s2, s4, s6, s8
  const int ks[3] = {3, 4, 6};
  std::vector<MultiPoly> eq;
  for (int i = 0; i < 3; ++i) {
    MultiPoly f = f4_reduced_form(ks[i]).substitute(0, MultiPoly::constant(q, sv, NFElem(q, ch.s2)));
    eq.push_back(f - MultiPoly::constant(q, sv, NFElem(q, values[i + 1])));
  }
  const MultiPoly a = resultant(eq[0], eq[1], 2);  // in s4, s8
  const MultiPoly b = resultant(eq[0], eq[2], 2);
  const MultiPoly cubic = resultant(a, b, 1);
  ch.gamma_cubic = monic(cubic.to_unipoly(3));
  ch.cubic_certificate = irreducibility_certificate(ch.gamma_cubic);
  if (ch.cubic_certificate.verdict != Verdict::Irreducible)
    throw DegenerateConstants("f4_gamma_chain: the s8 polynomial is not certified irreducible", ch.gamma_cubic.degree());
  ch.k = make_number_field(ch.gamma_cubic, "Q(gamma)", true);
  const NFElem gamma = NFElem::generator(ch.k);
  const UniPoly g = poly_gcd(specialize(a, 1, {{3, gamma}}, ch.k), specialize(b, 1, {{3, gamma}}, ch.k));
  if (g.degree() != 1) throw DegenerateConstants("f4_gamma_chain: s4 is not determined by s8", g.degree());
  ch.s4 = -g[0];
  const UniPoly e6 = specialize(eq[0], 2, {{1, ch.s4}, {3, gamma}}, ch.k);
  if (e6.degree() != 1) throw Error("f4_gamma_chain: I6 is not linear in s6");
  ch.s6 = -e6[0] / e6[1];
  // Power sums of the z_i^2 are s2, s4, s6, s8.
  const std::vector<NFElem> e =
      powersums_to_elementary({NFElem(ch.k, ch.s2), ch.s4, ch.s6, gamma});
  ch.q4 = make_unipoly(ch.k, std::vector<NFElem>{e[3], -e[2], e[1], -e[0], NFElem(ch.k, Rational(1))});
  const NFElem disc = discriminant(ch.q4);
  ch.discriminant_rational = disc.is_rational();
  if (ch.discriminant_rational) {
    ch.q4_discriminant = disc.to_rational();
    ch.discriminant_is_square = rational_square_in_odd_degree_field(ch.q4_discriminant, *ch.k);
  }
  RealEmbedding emb = RealEmbedding::largest_real_root(ch.k);
  ch.q4_roots = count_real_roots(ch.q4, emb);
  // Depressed quartic z^4 + b2 z^2 + b1 z + b0 and its cubic resolvent.
  const UniPoly shift = make_unipoly(ch.k, std::vector<NFElem>{e[0] * Rational(1, 4), NFElem(ch.k, Rational(1))});
  const UniPoly dq = ch.q4.compose(shift);
  const NFElem b2 = dq[2], b1 = dq[1], b0 = dq[0];
  ch.cubic_resolvent =
      make_unipoly(ch.k, std::vector<NFElem>{-(b1 * b1), b2 * b2 - b0 * Rational(4), b2 * Rational(2), NFElem(ch.k, Rational(1))});
  ch.resolvent_certificate = irreducibility_certificate(ch.cubic_resolvent);
  const UniPoly x2 = make_unipoly(ch.k, std::vector<Rational>{0, 0, 1});
  ch.p24 = monic(norm_to_q(ch.q4.compose(x2)));
  if (certify_p24) ch.p24_certificate = irreducibility_certificate(ch.p24);
  return ch;
}

// ---------------------------------------------------------------------------
// Square-root towers

namespace {

std::vector<std::string> tower_vars(int n) {
  std::vector<std::string> v{"y"};
  for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

// T_k = C_k(u_1^2, ..., u_k^2), C_k = sum_j a_j h_{j-k+1}: the Cauchy modules of f.
std::vector<MultiPoly> cauchy_modules(const std::vector<Rational>& a, const std::vector<std::string>& vars) {
  const FieldPtr& q = NumberField::rationals();
  const int n = static_cast<int>(a.size()) - 1;
  const MultiPoly zero(q, vars), one = one_like(zero);
  std::vector<MultiPoly> h(n + 1, zero);  // h_m over the squares added so far
  h[0] = one;
  std::vector<MultiPoly> t(n + 1, zero);
  for (int k = 1; k <= n; ++k) {
    const MultiPoly u = MultiPoly::variable(q, vars, k);
    const MultiPoly z = u * u;
    for (int m = 1; m <= n; ++m) h[m] = h[m] + z * h[m - 1];
    MultiPoly c = zero;
    for (int j = k - 1; j <= n; ++j) c += h[j - k + 1] * NFElem(q, a[j]);
    t[k] = c;
  }
  return t;
}

UniPoly run_tower(MultiPoly l, const std::vector<MultiPoly>& t) {
  const int n = static_cast<int>(t.size()) - 1;
  for (int k = n; k >= 1; --k) l = resultant(l, t[k], k);
  return monic(l.to_unipoly(0));
}

// Squarefree mod some good prime implies squarefree over Q, and avoids a
// rational gcd on large coefficients.
bool squarefree_by_prime(const UniPoly& f, int tries = 40) {
  const std::vector<Rational> q = rational_coeffs(f);
  int tried = 0;
  for (std::uint64_t p = 1000003; tried < tries; p += 2) {
    if (!is_prime(p)) continue;
    bool bad = false;
    ModPoly fp(q.size()), dp;
    for (std::size_t i = 0; i < q.size() && !bad; ++i) {
      const std::uint64_t den = mpz_fdiv_ui(q[i].get_den_mpz_t(), p);
      if (den == 0) bad = true;
      else fp[i] = modp::mulmod(mpz_fdiv_ui(q[i].get_num_mpz_t(), p), modp::inv(den, p), p);
    }
    if (bad || fp.back() == 0) continue;
    ++tried;
    for (std::size_t i = 1; i < fp.size(); ++i) dp.push_back(modp::mulmod(fp[i], i % p, p));
    modp::trim(dp);
    if (modp::gcd(fp, dp, p).size() == 1) return true;
  }
  return false;
}

std::vector<Rational> monic_rational(const UniPoly& f) {
  if (!f.zero_element().field()->is_rationals()) throw Error("polynomial must be over Q");
  if (f.degree() < 1) throw Error("polynomial must be nonconstant");
  return rational_coeffs(monic(f));
}

}  // namespace

UniPoly weighted_sqrt_tower(const UniPoly& f, const std::vector<Rational>& weights) {
  const std::vector<Rational> a = monic_rational(f);
  const int n = f.degree();
  if (static_cast<int>(weights.size()) != n) throw Error("weighted_sqrt_tower: need one weight per root");
  if (n > 7) throw Error("weighted_sqrt_tower: too many variables");
  const auto vars = tower_vars(n);
  const FieldPtr& q = NumberField::rationals();
  MultiPoly l = MultiPoly::variable(q, vars, 0);
  for (int i = 0; i < n; ++i) l -= MultiPoly::variable(q, vars, i + 1) * NFElem(q, weights[i]);
  return run_tower(l, cauchy_modules(a, vars));
}

UniPoly mult_sqrt_tower(const UniPoly& f, const std::vector<int>& exponents) {
  const std::vector<Rational> a = monic_rational(f);
  const int n = f.degree();
  if (static_cast<int>(exponents.size()) != n) throw Error("mult_sqrt_tower: need one exponent per root");
  if (n > 7) throw Error("mult_sqrt_tower: too many variables");
  if (a[0] == 0 || evaluate_rational(f, 1) == 0) throw Error("mult_sqrt_tower: roots 0 and 1 are excluded");
  const auto vars = tower_vars(n);
  const FieldPtr& q = NumberField::rationals();
  const MultiPoly one = one_like(MultiPoly(q, vars));
  MultiPoly num = one, den = one;
  for (int i = 0; i < n; ++i) {
    if (exponents[i] < 0) throw Error("mult_sqrt_tower: exponents must be nonnegative");
    const MultiPoly u = MultiPoly::variable(q, vars, i + 1);
    num *= (one + u).pow(exponents[i]);
    den *= (one - u).pow(exponents[i]);
  }
  return run_tower(MultiPoly::variable(q, vars, 0) * den - num, cauchy_modules(a, vars));
}

namespace {

template <typename Value>
std::vector<BigComplex> orbit_values(const UniPoly& f, int digits, Value value) {
  const int n = f.degree();
  PrecisionScope scope(digits_to_bits(digits + 10));
  RootSet rs = roots_numeric(f, digits + 10);
  std::vector<BigComplex> s;
  for (const auto& r : rs.roots) s.push_back(csqrt(r.mid));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BigComplex> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<BigComplex> u;
      for (int i = 0; i < n; ++i) u.push_back((signs >> i & 1) ? -s[perm[i]] : s[perm[i]]);
      out.push_back(value(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<BigComplex> sqrt_conjugates(const UniPoly& f, const std::vector<Rational>& weights, int digits) {
  if (static_cast<int>(weights.size()) != f.degree()) throw Error("sqrt_conjugates: need one weight per root");
  return orbit_values(f, digits, [&](const std::vector<BigComplex>& u) {
    BigComplex acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * BigComplex(BigFloat(weights[i]));
    return acc;
  });
}

std::vector<BigComplex> mult_conjugates(const UniPoly& f, const std::vector<int>& exponents, int digits) {
  if (static_cast<int>(exponents.size()) != f.degree()) throw Error("mult_conjugates: need one exponent per root");
  return orbit_values(f, digits, [&](const std::vector<BigComplex>& u) {
    BigComplex acc(BigFloat(1L));
    const BigComplex one(BigFloat(1L));
    for (std::size_t i = 0; i < u.size(); ++i) {
      const BigComplex s = (one + u[i]) / (one - u[i]);
      for (int e = 0; e < exponents[i]; ++e) acc *= s;
    }
    return acc;
  });
}

UniPoly weighted_sqrt_numeric(const UniPoly& f, const std::vector<Rational>& weights) {
  const std::vector<Rational> a = monic_rational(f);
  for (const auto& x : a)
    if (x.get_den() != 1) throw Error("weighted_sqrt_numeric: f must be monic with integer coefficients");
  for (const auto& w : weights)
    if (w.get_den() != 1) throw Error("weighted_sqrt_numeric: weights must be integers");
  // Coefficient size from prod (1 + |v|) at low precision.
  double log10_bound = 0;
  for (const auto& v : sqrt_conjugates(f, weights, 20)) log10_bound += std::log10(1 + v.abs().to_double());
  const int digits = static_cast<int>(log10_bound) + 40;
  const std::vector<BigComplex> vals = sqrt_conjugates(f, weights, digits);
  PrecisionScope scope(digits_to_bits(digits + 10));
  std::vector<BigComplex> c{BigComplex(BigFloat(1L))};
  for (const auto& v : vals) {
    std::vector<BigComplex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * v;
    }
    c = std::move(next);
  }
  const BigFloat tol = pow10(-20);
  std::vector<Rational> coeffs;
  for (const auto& z : c) {
    const Integer r = z.re.round();
    if (abs(z.re - BigFloat(r)) > tol || abs(z.im) > tol)
      throw Error("weighted_sqrt_numeric: coefficient is not within 1e-20 of an integer");
    coeffs.emplace_back(r);
  }
  const UniPoly p = make_unipoly(NumberField::rationals(), coeffs);
  // The rounded polynomial must still vanish at every conjugate.
  std::vector<BigComplex> pc;
  for (const auto& x : coeffs) pc.emplace_back(BigFloat(x));
  for (const auto& v : vals) {
    BigFloat scale(0L), pw(1L);
    const BigFloat av = v.abs();
    for (const auto& x : coeffs) {
      scale += abs(BigFloat(x)) * pw;
      pw *= av;
    }
    if (horner(pc, v).abs() > tol * scale) throw Error("weighted_sqrt_numeric: rounded polynomial misses a conjugate");
  }
  return p;
}

SqrtMinpoly minpoly_of_weighted_sqrts(const UniPoly& f, const std::vector<Rational>& weights, bool certify) {
  if (!is_squarefree(f)) throw Error("minpoly_of_weighted_sqrts: f must be squarefree");
  const int n = f.degree();
  if (static_cast<int>(weights.size()) != n) throw Error("minpoly_of_weighted_sqrts: need one weight per root");
  SqrtMinpoly out;
  if (n > 4) throw BudgetExceeded("minpoly_of_weighted_sqrts: degree " + std::to_string(n) + " is beyond both modes");
  if (n == 4) {
    out.poly = weighted_sqrt_numeric(f, weights);
    out.numeric_assisted = true;
    out.note = "numeric-assisted: orbit product rounded to integer coefficients";
  } else {
    out.poly = weighted_sqrt_tower(f, weights);
  }
  if (!squarefree_by_prime(out.poly) && !is_squarefree(out.poly)) {
    out.poly = monic(squarefree_part(out.poly));
    out.note += std::string(out.note.empty() ? "" : "; ") + "conjugates collide, squarefree part taken";
  }
  if (certify) out.certificate = irreducibility_certificate(out.poly);
  return out;
}

SqrtCriteria check_sqrt_criteria(const UniPoly& f) {
  if (!is_squarefree(f)) throw Error("check_sqrt_criteria: f must be squarefree");
  const std::vector<Rational> a = monic_rational(f);
  const int n = f.degree();
  SqrtCriteria out;
  out.leading = (n % 2 ? -a[0] : a[0]);  // product of the roots
  out.discriminant = discriminant(monic(f)).to_rational();
  out.an_condition = out.leading != 0 && !in_delta_square_class(out.leading, out.discriminant);
  RealEmbedding emb = RealEmbedding::rational(NumberField::rationals());
  out.roots = count_real_roots(f, emb);
  out.corollary_hypothesis = out.roots.real_roots == n && out.roots.negative_roots == 1 && !out.roots.zero_is_root;
  if (n % 2 == 0) {
    out.odd_condition = "not needed (n even)";
  } else if (out.corollary_hypothesis) {
    out.odd_condition = "implied by the real-root pattern";
  } else if (out.leading != 0) {
    // r1 = c g^2 forces c = a_n mod squares, and then f(a_n t^2) splits.
    std::vector<Rational> sub(2 * n + 1, Rational(0));
    Rational pw = 1;
    for (int j = 0; j <= n; ++j) {
      sub[2 * j] = a[j] * pw;
      pw *= out.leading;
    }
    const IrreducibilityCertificate cert = irreducibility_certificate(make_unipoly(NumberField::rationals(), sub));
    if (cert.verdict == Verdict::Irreducible) out.odd_condition = "holds: f(a_n t^2) is irreducible";
    else if (cert.verdict == Verdict::Reducible) out.odd_condition = "may fail: f(a_n t^2) is reducible";
    else out.odd_condition = "not checked exactly";
  } else {
    out.odd_condition = "not checked exactly";
  }
  return out;
}

UniPoly nonexceptional_poly(int n) {
  if (n < 1) throw Error("nonexceptional_poly: n must be positive");
  const FieldPtr& q = NumberField::rationals();
  if (n == 1) return make_unipoly(q, std::vector<Rational>{-2, 1});
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  const int s = n % 2 ? -1 : 1;
  c[1] += s;
  c[0] -= s;
  return make_unipoly(q, c);
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<NFElem> parse_constants(const std::string& text, const FieldPtr& field) {
  std::vector<NFElem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const MultiPoly p = parse_multipoly(item, field, {});
    out.push_back(p.constant_term());
  }
  if (out.empty()) throw ParseError("no constants in '" + text + "'");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("no values in '" + text + "'");
  return out;
}

std::vector<NFElem> default_constants(const InvariantSystem& sys) {
  const FieldPtr& k = sys.group->field();
  if (sys.group->name() == "G2") return {NFElem(k, Rational(0)), NFElem(k, Rational(2))};
  if (sys.group->name() == "ST8") return parse_constants("1+i,1", k);
  return {};
}

namespace {

// Weights with trivial stabilizer under the action used for alpha.
std::vector<Rational> free_weights(const MatGroup& g) {
  const Action opp = opposite(g.natural_action());
  for (int a = 1; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      std::vector<Rational> w{a, b};
      if (b != 0 && stabilizer_is_trivial(g, rational_vector(g.field(), w), opp)) return w;
    }
  throw Error("no weights with trivial stabilizer");
}

// P(x) = f(x^2) -> f.
std::optional<UniPoly> even_part(const UniPoly& p) {
  std::vector<NFElem> out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2) {
      if (!p[i].is_zero()) return std::nullopt;
    } else {
      out.push_back(p[i]);
    }
  }
  return make_unipoly(p.zero_element().field(), out);
}

// [k(x) : k] = |G| for a point x of I = c, when it can be decided: through the
// shifted resultant for n = 2 and the square-root tower for B3.
std::optional<bool> point_is_generic(const InvariantSystem& sys, const std::vector<NFElem>& c, const AuxiliaryPoly& aux) {
  const MatGroup& g = *sys.group;
  const int order = static_cast<int>(g.elements().size());
  if (g.dim() == 2) {
    const ShiftedMinpoly sm = minpoly_by_shifted_resultant(sys, c, free_weights(g));
    return !sm.factor_selected && sm.poly.degree() == order && sm.certificate.verdict == Verdict::Irreducible;
  }
  if (g.dim() == 3 && order == 48 && g.field()->is_rationals()) {
    const auto f = even_part(aux.poly);
    if (!f) return false;
    const SqrtMinpoly m = minpoly_of_weighted_sqrts(*f, {1, 2, 3});
    return m.poly.degree() == order && m.certificate.verdict == Verdict::Irreducible;
  }
  return std::nullopt;
}

}  // namespace

std::vector<NFElem> search_constants(const InvariantSystem& sys, int max_trials, std::vector<std::string>* notes) {
  const FieldPtr& k = sys.group->field();
  const int n = static_cast<int>(sys.polys.size());
  int trials = 0;
  for (int h = 1; trials < max_trials; ++h) {
    // Tuples in [-h, h]^n with max |c_j| = h, in lexicographic order.
    std::vector<int> t(n, -h);
    for (;;) {
      if (std::any_of(t.begin(), t.end(), [h](int x) { return std::abs(x) == h; })) {
        if (++trials > max_trials) break;
        std::vector<NFElem> c;
        for (int x : t) c.emplace_back(k, Rational(x));
        try {
          const AuxiliaryPoly aux = eliminate_to_auxiliary(sys, c);
          if (irreducibility_certificate(aux.poly).verdict == Verdict::Irreducible) {
            const std::optional<bool> generic = point_is_generic(sys, c, aux);
            if (generic.value_or(true)) {
              if (notes) {
                notes->push_back("constants found after " + std::to_string(trials) + " trials");
                if (!generic) notes->push_back("genericity of the point (degree |G|) not verified");
              }
              return c;
            }
          }
        } catch (const DegenerateConstants&) {
        }
      }
      int i = n - 1;
      while (i >= 0 && t[i] == h) t[i--] = -h;
      if (i < 0) break;
      ++t[i];
    }
  }
  throw BudgetExceeded("search_constants: no admissible constants in " + std::to_string(max_trials) + " trials");
}

namespace {

Base base_for_field(const FieldPtr& k) {
  if (k->is_rationals()) return Base::rationals();
  for (int l = 3; l <= 60; ++l)
    if (k->equivalent(*cyclotomic_field(l))) return Base::cyclotomic(l % 2 ? 2 * l : l);
  throw Error("no bound table for field " + k->label());
}

void verify_over_q(Construction& c, const ConstructOptions& opt) {
  if (!opt.verify || !c.alpha_minpoly || !c.alpha_minpoly->zero_element().field()->is_rationals()) return;
  if (c.alpha_minpoly->degree() > 64) {
    c.notes.push_back("conj-dim verifier skipped above degree 64");
    return;
  }
  LadderOptions lo;
  lo.start_digits = 100;
  lo.max_digits = 200;
  c.dim_report = qspan_dimension(*c.alpha_minpoly, lo);
}

// Every root of the minimal polynomial is b . (x0 acted on by some g).
bool cross_check(const InvariantSystem& sys, const std::vector<NFElem>& c, const AuxiliaryPoly& aux,
                 const std::vector<Rational>& b, const UniPoly& minpoly, int digits) {
  PrecisionScope scope(digits_to_bits(digits + 10));
  const std::vector<BigComplex> pt = numeric_point(sys, c, aux, digits);
  const MatGroup& g = *sys.group;
  const BigComplex gen = default_generator_value(g.field());
  const int n = g.dim();
  std::vector<BigComplex> vals;
  for (const auto& m : g.elements()) {
    BigComplex v;
    for (int i = 0; i < n; ++i) {
      BigComplex coord;
      for (int j = 0; j < n; ++j) {
        const NFElem& e = g.natural_action() == Action::Row ? m(j, i) : m(i, j);
        if (!e.is_zero()) coord += pt[j] * numeric_value(e, gen);
      }
      v += coord * BigComplex(BigFloat(b[i]));
    }
    vals.push_back(v);
  }
  RootSet rs = roots_numeric(minpoly, digits, gen);
  const BigFloat tol = pow10(-digits / 2);
  for (const auto& r : rs.roots) {
    bool hit = false;
    for (const auto& v : vals)
      if ((r.mid - v).abs() < tol * max(BigFloat(1L), v.abs())) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

Construction construct_f4(const ConstructOptions& opt) {
  Construction c;
  c.kind = "f4";
  c.group_name = "F4";
  c.group = group_F4();
  c.f4 = f4_gamma_chain({30, 1410, 13670, 1161749}, opt.certify);
  const FieldPtr& q = NumberField::rationals();
  for (const auto& v : c.f4->invariant_values) c.c.emplace_back(q, v);
  c.b = {1, 2, 3, 5};
  c.coordinate_b = c.b;
  AuxiliaryPoly aux;
  aux.poly = c.f4->p24;
  aux.resultant = c.f4->p24;
  aux.constant = NFElem(q, Rational(1));
  aux.orbit_size = static_cast<int>(orbit(*c.group, unit_vector(q, 4, 0), Action::Column).elements.size());
  aux.power = static_cast<int>(c.group->order() / aux.orbit_size);
  c.auxiliary = aux;
  if (c.f4->p24_certificate) c.auxiliary_certificate = c.f4->p24_certificate;
  const Vector bv = rational_vector(q, c.coordinate_b);
  const Orbit o = orbit(*c.group, bv, Action::Column);
  c.orbit_size = static_cast<long long>(o.elements.size());
  c.stabilizer_trivial = stabilizer_is_trivial(*c.group, bv, Action::Column);
  c.orbit_rank = orbit_rank(o.elements);
  c.conj_dim_claimed = *c.orbit_rank;
  c.degree = static_cast<long>(*c.orbit_size);
  c.base = Base::rationals();
  c.bounds = check_bounds(c.conj_dim_claimed, c.degree, c.base);
  c.notes.push_back("the degree 1152 minimal polynomial is not computed; the pipeline stops at P24 and Q4");
  return c;
}

}  // namespace

Construction construct(const std::string& group, int n, int l, std::optional<std::vector<NFElem>> cin,
                       std::optional<std::vector<Rational>> bin, const ConstructOptions& opt) {
  if (group == "F4") return construct_f4(opt);
  Construction c;
  c.kind = "group";
  c.group_name = group;
  InvariantSystem sys = invariant_system(group, n, l);
  c.group = sys.group;
  const MatGroup& g = *sys.group;
  const FieldPtr& k = g.field();
  const int dim = g.dim();
  if (cin) {
    for (auto& x : *cin) x = lift(x, k);
    c.c = *cin;
  } else {
    c.c = default_constants(sys);
    if (c.c.empty()) c.c = search_constants(sys, opt.max_trials, &c.notes);
  }
  if (bin) {
    c.b = *bin;
  } else if (group == "G2") {
    c.b = {1, 3};
  } else {
    for (int i = 1; i <= dim; ++i) c.b.emplace_back(i);
  }
  if (static_cast<int>(c.b.size()) != dim) throw Error("construct: need " + std::to_string(dim) + " weights");
  c.coordinate_b = coordinate_weights(group, c.b);
  c.auxiliary = eliminate_to_auxiliary(sys, c.c);
  if (opt.certify) c.auxiliary_certificate = irreducibility_certificate(c.auxiliary->poly);

  const Action opp = opposite(g.natural_action());
  const Vector bv = rational_vector(k, c.coordinate_b);
  const Orbit o = orbit(g, bv, opp);
  c.orbit_size = static_cast<long long>(o.elements.size());
  c.stabilizer_trivial = stabilizer_is_trivial(g, bv, opp);
  c.orbit_rank = orbit_rank(o.elements);
  c.conj_dim_claimed = *c.orbit_rank;
  c.degree = static_cast<long>(*c.orbit_size);
  c.base = base_for_field(k);

  if (dim == 2) {
    ShiftedOptions so;
    so.certify = opt.certify;
    so.digits = opt.digits;
    ShiftedMinpoly sm = minpoly_by_shifted_resultant(sys, c.c, c.coordinate_b, so);
    c.alpha_minpoly = sm.poly;
    if (opt.certify) c.certificate = sm.certificate;
    if (!sm.note.empty()) c.notes.push_back(sm.note);
    c.degree = sm.poly.degree();
    c.numeric_cross_check = cross_check(sys, c.c, *c.auxiliary, c.coordinate_b, sm.poly, opt.digits);
  } else if (dim == 3 && g.elements().size() == 48 && k->is_rationals() && even_part(c.auxiliary->poly)) {
    // x_i = sqrt(r_i) for the roots r_i of f, P(x) = f(x^2).
    const SqrtMinpoly m = minpoly_of_weighted_sqrts(*even_part(c.auxiliary->poly), c.coordinate_b, opt.certify);
    c.alpha_minpoly = m.poly;
    if (opt.certify) c.certificate = m.certificate;
    c.degree = m.poly.degree();
  } else {
    c.notes.push_back("minimal polynomial of alpha is computed for n = 2 and B3 only");
  }
  c.invariants = std::move(sys);
  verify_over_q(c, opt);
  c.bounds = check_bounds(c.conj_dim_claimed, c.degree, c.base);
  return c;
}

Construction build_nonexceptional(int n, const ConstructOptions& opt) {
  if (n < 1 || n > 4) throw BudgetExceeded("build_nonexceptional: n must be between 1 and 4");
  Construction c;
  c.kind = "sqrt";
  c.group_name = "B" + std::to_string(n);
  c.base_poly = nonexceptional_poly(n);
  for (int i = 1; i <= n; ++i) c.b.emplace_back(i);
  c.coordinate_b = c.b;
  SqrtMinpoly sm = minpoly_of_weighted_sqrts(*c.base_poly, c.b, opt.certify && n <= 3);
  c.alpha_minpoly = sm.poly;
  c.numeric_assisted = sm.numeric_assisted;
  if (opt.certify && n <= 3) c.certificate = sm.certificate;
  if (n == 4) c.notes.push_back("irreducibility of the degree 384 polynomial is not certified");
  if (!sm.note.empty()) c.notes.push_back(sm.note);
  c.degree = sm.poly.degree();
  c.conj_dim_claimed = n;
  c.base = Base::rationals();
  {
    const auto vals = sqrt_conjugates(*c.base_poly, c.b, opt.digits);
    PrecisionScope scope(digits_to_bits(opt.digits + 10));
    const BigFloat tol = pow10(-opt.digits / 2);
    int distinct = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < i && !dup; ++j) dup = (vals[i] - vals[j]).abs() < tol;
      if (!dup) ++distinct;
    }
    c.distinct_conjugates = distinct;
    std::vector<BigComplex> pc;
    for (const auto& x : sm.poly.coeffs()) pc.emplace_back(BigFloat(x.to_rational()));
    bool all = true;
    for (const auto& v : vals) {
      BigFloat scale(0L), pw(1L);
      for (const auto& x : pc) {
        scale += x.abs() * pw;
        pw *= v.abs();
      }
      if (horner(pc, v).abs() > tol * scale) all = false;
    }
    c.numeric_cross_check = all;
  }
  verify_over_q(c, opt);
  c.bounds = check_bounds(c.conj_dim_claimed, c.degree, c.base);
  return c;
}

Construction build_mult_example(int n, const ConstructOptions& opt) {
  if (n < 1 || n > 5) throw BudgetExceeded("build_mult_example: n must be between 1 and 5");
  Construction c;
  c.kind = "mult";
  c.group_name = "B" + std::to_string(n);
  c.base_poly = nonexceptional_poly(n);
  for (int i = 1; i <= n; ++i) c.b.emplace_back(i);
  c.coordinate_b = c.b;
  c.base = Base::rationals();
  c.exponent_rank = mult_rank_exponents(signed_permutation_exponents(n));
  c.conj_dim_claimed = *c.exponent_rank;
  c.degree = Integer(Integer(1) << n) * factorial(n);
  std::vector<int> ex(n);
  std::iota(ex.begin(), ex.end(), 1);
  if (n <= 4) {
    const auto vals = mult_conjugates(*c.base_poly, ex, opt.digits);
    PrecisionScope scope(digits_to_bits(opt.digits + 10));
    const BigFloat tol = pow10(-opt.digits / 2);
    int distinct = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < i && !dup; ++j) dup = (vals[i] - vals[j]).abs() < tol * max(BigFloat(1L), vals[i].abs());
      if (!dup) ++distinct;
    }
    c.distinct_conjugates = distinct;
  }
  if (n <= 3) {
    UniPoly p = mult_sqrt_tower(*c.base_poly, ex);
    if (!is_squarefree(p)) {
      p = monic(squarefree_part(p));
      c.notes.push_back("conjugates collide, squarefree part taken");
    }
    c.alpha_minpoly = p;
    c.degree = p.degree();
    if (opt.certify) c.certificate = irreducibility_certificate(p);
    if (opt.verify && p.degree() <= 8) {
      LadderOptions lo;
      lo.start_digits = 100;
      lo.max_digits = 200;
      c.dim_report = mult_rank_numeric(p, lo);
    }
  } else {
    c.notes.push_back("minimal polynomial computed for n <= 3 only");
  }
  c.bounds = check_bounds(c.conj_dim_claimed, c.degree, c.base);
  return c;
}

}  // namespace conjdim
