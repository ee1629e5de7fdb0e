#include "conjdim/properties.hpp"

#include <random>

#include "conjdim/error.hpp"
#include "conjdim/groups.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/irreducibility.hpp"
#include "conjdim/poly_algebra.hpp"
#include "conjdim/resultant.hpp"

namespace conjdim {

int PropertyReport::total_cases() const {
  int n = 0;
  for (const auto& s : suites) n += s.cases;
  return n;
}

int PropertyReport::total_failures() const {
  int n = 0;
  for (const auto& s : suites) n += s.failures;
  return n;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int bound = 12) {
  return rational_normalize(uniform(rng, -bound, bound), uniform(rng, 1, 4));
}

NFElem random_elem(Rng& rng, const FieldPtr& k, int bound = 12) {
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(random_rational(rng, bound));
  return NFElem(k, c);
}

UniPoly random_poly(Rng& rng, const FieldPtr& k, int deg, int bound = 9) {
  std::vector<NFElem> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_elem(rng, k, bound));
  NFElem lead = random_elem(rng, k, bound);
  if (lead.is_zero()) lead = NFElem(k, Rational(1));
  c.push_back(lead);
  return make_unipoly(k, c);
}

void record(SuiteResult& s, bool ok, const std::string& what) {
  ++s.cases;
  if (ok) return;
  ++s.failures;
  if (s.samples.size() < 5) s.samples.push_back(what);
}

SuiteResult field_axioms(Rng& rng, int count) {
  SuiteResult s{"field axioms", 0, 0, {}};
  const std::vector<FieldPtr> fields{NumberField::rationals(), cyclotomic_field(4), cyclotomic_field(3),
                                     cyclotomic_field(5), cyclotomic_field(8)};
  for (int i = 0; i < count; ++i) {
    const FieldPtr& k = fields[i % fields.size()];
    const NFElem a = random_elem(rng, k), b = random_elem(rng, k), c = random_elem(rng, k);
    bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              (a + b) - b == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == NFElem(k, Rational(1)) && (b / a) * a == b;
    record(s, ok, a.to_string() + ", " + b.to_string() + ", " + c.to_string());
  }
  return s;
}

SuiteResult orbit_stabilizer(Rng& rng, int count) {
  SuiteResult s{"orbit-stabilizer", 0, 0, {}};
  const std::vector<GroupPtr> groups{group_G2(), group_Bn(3), group_ST8(), group_Gl1n(3, 2), group_F4()};
  for (int i = 0; i < count; ++i) {
    const MatGroup& g = *groups[i % groups.size()];
    // Small entries with repeats and zeros so that stabilizers vary.
    std::vector<Rational> v;
    for (int j = 0; j < g.dim(); ++j) v.emplace_back(uniform(rng, -2, 2));
    const Vector vec = rational_vector(g.field(), v);
    const Action act = i % 2 ? Action::Row : Action::Column;
    const long long orb = static_cast<long long>(orbit(g, vec, act).elements.size());
    const long long stab = stabilizer_order(g, vec, act);
    record(s, orb * stab == g.order(), g.name() + " at " + to_string(v[0]) + ",...");
  }
  return s;
}

SuiteResult resultant_symmetry(Rng& rng, int count) {
  SuiteResult s{"resultant symmetry", 0, 0, {}};
  const std::vector<FieldPtr> fields{NumberField::rationals(), cyclotomic_field(4)};
  for (int i = 0; i < count; ++i) {
    const FieldPtr& k = fields[i % 2];
    const int m = uniform(rng, 1, 5), n = uniform(rng, 1, 5);
    const UniPoly f = random_poly(rng, k, m), g = random_poly(rng, k, n), h = random_poly(rng, k, uniform(rng, 1, 3));
    const NFElem rfg = resultant(f, g), rgf = resultant(g, f);
    const bool sym = (m * n) % 2 ? rfg == -rgf : rfg == rgf;
    const bool mult = resultant(f, g * h) == rfg * resultant(f, h);
    record(s, sym && mult, to_string(f) + " ; " + to_string(g));
  }
  return s;
}

SuiteResult newton_identities(Rng& rng, int count) {
  SuiteResult s{"Newton identities", 0, 0, {}};
  const FieldPtr q = NumberField::rationals();
  for (int i = 0; i < count; ++i) {
    const int n = uniform(rng, 1, 5), k = uniform(rng, 1, 9);
    std::vector<Rational> x;
    for (int j = 0; j < n; ++j) x.push_back(random_rational(rng, 6));
    // e_j by expanding prod (1 + x_i t).
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (const auto& xi : x)
      for (int j = n; j >= 1; --j) e[j] += xi * e[j - 1];
    std::vector<std::string> names;
    std::vector<NFElem> point;
    for (int j = 1; j <= n; ++j) {
      names.push_back("e" + std::to_string(j));
      point.emplace_back(q, e[j]);
    }
    Rational direct = 0;
    for (const auto& xi : x) direct += rpow(xi, k);
    const NFElem via = powersum_in_elementary(k, n, q, names).evaluate(point);
    // And back: e_1..e_n from p_1..p_n.
    std::vector<NFElem> p;
    for (int j = 1; j <= n; ++j) {
      Rational pj = 0;
      for (const auto& xi : x) pj += rpow(xi, j);
      p.emplace_back(q, pj);
    }
    const std::vector<NFElem> back = powersums_to_elementary(p);
    bool ok = via == NFElem(q, direct);
    for (int j = 1; j <= n; ++j) ok = ok && back[j - 1] == NFElem(q, e[j]);
    record(s, ok, "n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return s;
}

SuiteResult invariance(Rng& rng, int count) {
  SuiteResult s{"invariance of invariant systems", 0, 0, {}};
  const std::vector<InvariantSystem> systems{g2_invariants(),          elem_symm_lpowers(2, 2), elem_symm_lpowers(3, 2),
                                             st8_invariants(),         f4_invariants(),         elem_symm_lpowers(2, 3),
                                             elem_symm_lpowers(2, 4)};
  for (int i = 0; i < count; ++i) {
    const InvariantSystem& sys = systems[i % systems.size()];
    const MatGroup& g = *sys.group;
    Vector v;
    for (int j = 0; j < g.dim(); ++j) v.push_back(random_elem(rng, g.field(), 5));
    const Matrix& m = g.elements()[rng() % g.elements().size()];
    const Vector w = apply(v, m, g.natural_action());
    bool ok = true;
    for (const auto& f : sys.polys) ok = ok && f.evaluate(w) == f.evaluate(v);
    record(s, ok, sys.name);
  }
  return s;
}

SuiteResult fuzz_reducible(Rng& rng, int count) {
  SuiteResult s{"fuzzed products are not certified irreducible", 0, 0, {}};
  const FieldPtr q = NumberField::rationals();
  for (int i = 0; i < count; ++i) {
    auto integral = [&](int deg) {
      std::vector<Rational> c;
      for (int j = 0; j < deg; ++j) c.emplace_back(uniform(rng, -9, 9));
      c.emplace_back(uniform(rng, 1, 3));
      return make_unipoly(q, c);
    };
    const UniPoly f = integral(uniform(rng, 1, 6)) * integral(uniform(rng, 1, 6));
    const Verdict v = irreducibility_certificate(f).verdict;
    record(s, v == Verdict::Reducible, to_string(f));
  }
  return s;
}

}  // namespace

PropertyReport run_property_suites(std::uint64_t seed, int scale) {
  if (scale < 1) throw Error("run_property_suites: scale must be positive");
  PropertyReport rep;
  rep.seed = seed;
  Rng rng(seed);
  rep.suites.push_back(field_axioms(rng, 300 * scale));
  rep.suites.push_back(orbit_stabilizer(rng, 150 * scale));
  rep.suites.push_back(resultant_symmetry(rng, 200 * scale));
  rep.suites.push_back(newton_identities(rng, 200 * scale));
  rep.suites.push_back(invariance(rng, 210 * scale));
  rep.suites.push_back(fuzz_reducible(rng, 150 * scale));
  return rep;
}

}  // namespace conjdim
