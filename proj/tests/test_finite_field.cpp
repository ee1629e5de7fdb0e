#include <doctest.h>

#include <optional>
#include <random>
#include <set>

#include "conjdim/error.hpp"
#include "conjdim/finite_field.hpp"
#include "conjdim/tables.hpp"

using namespace conjdim;

namespace {

// Irreducible iff no monic factor of degree 1..deg/2, by trial division.
bool irreducible_by_division(const ModPoly& f, std::uint64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      ModPoly g;
      std::uint64_t u = t;
      for (int i = 0; i < d; ++i) {
        g.push_back(u % p);
        u /= p;
      }
      g.push_back(1);
      if (modp::rem(f, g, p).empty()) return false;
    }
  }
  return n >= 1;
}

FqPoly lift(const FqField& K, const std::vector<std::uint64_t>& c) {
  FqPoly f;
  for (auto x : c) f.push_back(K.scalar(x));
  return f;
}

}  // namespace

TEST_CASE("ff_make picks the least irreducible modulus") {
  CHECK(ff_make(2, 1).size() == 2);
  const FqField f8 = ff_make(2, 3);
  CHECK(f8.modulus() == ModPoly{1, 1, 0, 1});
  CHECK(f8.modulus_string() == "x^3 + x + 1");
  CHECK(ff_make(3, 2).modulus() == ModPoly{1, 0, 1});
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 3}, {5, 2}, {7, 3}}) {
    const FqField K = ff_make(p, k);
    CHECK(irreducible_by_division(K.modulus(), p));
    // Every smaller candidate is reducible.
    for (std::uint64_t t = 0; t < K.index(ModPoly(K.modulus().begin(), K.modulus().end() - 1)); ++t) {
      ModPoly g = K.element(t);
      g.resize(k, 0);
      g.push_back(1);
      CHECK_FALSE(irreducible_by_division(g, p));
    }
  }
  CHECK_THROWS_AS(ff_make(2, 33), BudgetExceeded);
  CHECK_THROWS_AS(ff_make(4, 1), Error);
}

TEST_CASE("Rabin test agrees with trial division") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[trial % 3];
    const int n = 1 + static_cast<int>(rng() % 6);
    ModPoly f;
    for (int i = 0; i < n; ++i) f.push_back(rng() % p);
    f.push_back(1);
    CHECK(is_irreducible_mod_p(f, p) == irreducible_by_division(f, p));
  }
}

TEST_CASE("field axioms in F_{3^4} and F_{2^8}") {
  std::mt19937_64 rng(7);
  for (const FqField& K : {ff_make(3, 4), ff_make(2, 8)}) {
    for (int trial = 0; trial < 150; ++trial) {
      const FqElem a = K.element(rng() % K.size()), b = K.element(rng() % K.size()), c = K.element(rng() % K.size());
      CHECK(K.add(a, b) == K.add(b, a));
      CHECK(K.mul(a, b) == K.mul(b, a));
      CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
      CHECK(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)));
      CHECK(K.sub(K.add(a, b), b) == a);
      if (!a.empty()) CHECK(K.mul(a, K.inv(a)) == K.one());
      CHECK(K.pow(a, K.size()) == a);
      CHECK(K.frobenius(K.add(a, b)) == K.add(K.frobenius(a), K.frobenius(b)));
      CHECK(K.element(K.index(a)) == a);
    }
  }
}

TEST_CASE("multiplicative generators") {
  const FqField f4 = ff_make(2, 2);
  const FqElem g = multiplicative_generator(f4);
  CHECK(f4.mul(g, g) == f4.add(g, f4.one()));
  CHECK(multiplicative_generator(ff_make(2, 1)) == FqElem{1});
  const FqField f9 = ff_make(3, 2);
  const FqElem h = multiplicative_generator(f9);
  // Brute-force order.
  FqElem z = h;
  int order = 1;
  while (z != f9.one()) {
    z = f9.mul(z, h);
    ++order;
  }
  CHECK(order == 8);
  CHECK(multiplicative_order(ff_make(2, 5), ff_make(2, 5).x()) == 31);
}

TEST_CASE("linearized polynomials from minimal polynomials") {
  const FqField f4 = ff_make(2, 2);
  const LinearizedPoly L = linearized_from_minpoly(f4, lift(f4, {1, 1, 1}), 2);
  CHECK(poly_to_string(f4, L.dense()) == "X^4 + X^2 + X");
  const FqField f9 = ff_make(3, 2);
  CHECK(poly_to_string(f9, linearized_from_minpoly(f9, lift(f9, {1, 0, 1}), 3).dense()) == "X^9 + X");
  // f = x: c_1 = 1 gives X^q.
  CHECK(poly_to_string(f4, linearized_from_minpoly(f4, lift(f4, {0, 1}), 2).dense()) == "X^2");
  CHECK_THROWS_AS(linearized_from_minpoly(f4, lift(f4, {1, 0, 1}), 2), Error);
  CHECK_THROWS_AS(linearized_from_minpoly(f4, FqPoly{f4.x(), f4.one()}, 2), Error);  // x lies outside F_2
}

TEST_CASE("linearized polynomials are additive and F_q-linear") {
  std::mt19937_64 rng(19);
  // q = 2 in F_{2^7}; q = 4 in F_{2^6}; q = 3 in F_{3^5}.
  struct Case {
    std::uint64_t p;
    int k;
    std::uint64_t q;
  };
  for (const Case& cs : {Case{2, 7, 2}, Case{2, 6, 4}, Case{3, 5, 3}}) {
    const FqField K = ff_make(cs.p, cs.k);
    const Subfield fq = subfield(K, cs.q);
    // A monic irreducible quadratic over F_q: X^2 + X + c or X^2 + c.
    std::vector<FqElem> scalars{K.zero()};
    for (FqElem z = K.one(); scalars.size() < cs.q; z = K.mul(z, fq.zeta)) scalars.push_back(z);
    std::optional<LinearizedPoly> L;
    for (const auto& a : scalars) {
      for (const auto& c : scalars) {
        const FqPoly f{c, a, K.one()};
        if (!L && is_irreducible_over(K, f, cs.q)) L = linearized_from_minpoly(K, f, cs.q);
      }
    }
    REQUIRE(L);
    for (int trial = 0; trial < 100; ++trial) {
      const FqElem x = K.element(rng() % K.size()), y = K.element(rng() % K.size());
      const FqElem a = scalars[rng() % scalars.size()];
      CHECK((*L)(K, K.add(x, y)) == K.add((*L)(K, x), (*L)(K, y)));
      CHECK((*L)(K, K.mul(a, x)) == K.mul(a, (*L)(K, x)));
    }
  }
}

TEST_CASE("q^n - 1 is attained") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const DqnReport r = verify_Dqn(q, n);
    CHECK(r.passed);
    CHECK(r.orbit_size == static_cast<int>(r.d));
    CHECK(Integer(static_cast<unsigned long>(r.d)) == D_finite(Integer(static_cast<unsigned long>(q)), n));
    CHECK(r.span_dimension == n);
    CHECK(r.root_space_dimension == n);
    CHECK(r.roots_brute_forced);
  }
  const DqnReport r = verify_Dqn(2, 2);
  CHECK(r.field_modulus == "x^3 + x + 1");
  CHECK(r.linearized == "X^4 + X^2 + X");
  // alpha^4 = alpha^2 + alpha in F_8.
  const FqField f8 = ff_make(2, 3);
  FqElem alpha;
  for (std::uint64_t i = 0; i < 8; ++i)
    if (f8.to_string(f8.element(i)) == r.alpha) alpha = f8.element(i);
  REQUIRE_FALSE(alpha.empty());
  CHECK(f8.pow(alpha, 4) == f8.add(f8.pow(alpha, 2), alpha));
  CHECK(r.orbit.size() == 3);
}

TEST_CASE("q^n - 1 for a prime power q and a longer orbit") {
  const DqnReport r4 = verify_Dqn(4, 2);
  CHECK(r4.passed);
  CHECK(r4.d == 15);
  CHECK(r4.span_dimension == 2);
  const DqnReport r2 = verify_Dqn(2, 4);
  CHECK(r2.passed);
  CHECK(r2.orbit_size == 15);
  CHECK_THROWS_AS(verify_Dqn(5, 2), BudgetExceeded);
  CHECK_THROWS_AS(verify_Dqn(6, 2), Error);
}

TEST_CASE("no element beats q^n - 1") {
  const ScanReport s = scan_upper_bound(2, 2, 6);
  CHECK(s.passed);
  REQUIRE(s.levels.size() == 6);
  std::uint64_t best = 0;
  for (const auto& lv : s.levels) {
    CHECK(lv.violations.empty());
    best = std::max(best, lv.max_degree_within);
  }
  CHECK(best == 3);
  CHECK(s.levels[2].max_degree_within == 3);
  CHECK(s.levels[1].max_degree_within == 2);
  const ScanReport s1 = scan_upper_bound(3, 1, 4);
  CHECK(s1.passed);
  CHECK(s1.levels[1].max_degree_within == 2);
}

TEST_CASE("subspace polynomials are linearized") {
  const FqField f4 = ff_make(2, 2);
  CHECK(poly_to_string(f4, linearized_poly_of_subspace(f4, {f4.zero()}, 2).poly) == "X");
  CHECK(poly_to_string(f4, linearized_poly_of_subspace(f4, {f4.zero(), f4.one()}, 2).poly) == "X^2 + X");
  const FqField f16 = ff_make(2, 4);
  std::vector<FqElem> sub4;
  for (std::uint64_t i = 0; i < 16; ++i)
    if (in_subfield(f16, f16.element(i), 4)) sub4.push_back(f16.element(i));
  REQUIRE(sub4.size() == 4);
  const SubspacePoly s = linearized_poly_of_subspace(f16, sub4, 2);
  CHECK(poly_to_string(f16, s.poly) == "X^4 + X");
  CHECK(s.dimension == 2);
  CHECK(s.linearized);
  // F_4 is one-dimensional over itself.
  CHECK(linearized_poly_of_subspace(f16, sub4, 4).dimension == 1);
  CHECK_THROWS_AS(linearized_poly_of_subspace(f16, {f16.zero(), f16.x()}, 4), Error);
  CHECK_THROWS_AS(linearized_poly_of_subspace(f16, {f16.one(), f16.x()}, 2), Error);
}

TEST_CASE("random subspaces give linearized polynomials vanishing on them") {
  std::mt19937_64 rng(23);
  const FqField K = ff_make(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const FqElem a = K.element(1 + rng() % (K.size() - 1)), b = K.element(1 + rng() % (K.size() - 1));
    std::vector<FqElem> V;
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 3; ++i)
      for (std::uint64_t j = 0; j < 3; ++j) {
        const FqElem v = K.add(K.mul(K.scalar(i), a), K.mul(K.scalar(j), b));
        if (seen.insert(K.index(v)).second) V.push_back(v);
      }
    const SubspacePoly s = linearized_poly_of_subspace(K, V, 3);
    CHECK(s.linearized);
    CHECK(s.dimension == rank_mod_p(K, {a, b}));
    for (const auto& v : V) CHECK(poly_eval(K, s.poly, v).empty());
  }
}
