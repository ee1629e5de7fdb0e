#include "conjdim/roots.hpp"

#include <algorithm>
#include <functional>

#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"

namespace conjdim {

BigComplex numeric_value(const NFElem& a, const BigComplex& generator) {
  const auto& c = a.coords();
  BigComplex acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= generator;
    acc.re += BigFloat(c[i]);
  }
  return acc;
}

std::vector<BigComplex> numeric_coeffs(const UniPoly& f, const BigComplex& generator) {
  std::vector<BigComplex> out;
  for (const auto& c : f.coeffs()) out.push_back(numeric_value(c, generator));
  return out;
}

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= z;
    acc += c[i];
  }
  return acc;
}

namespace {

struct Iterate {
  std::vector<BigComplex> z;
  bool converged = false;
};

// f(z)/f'(z) by a joint Horner pass.
BigComplex newton_ratio(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex p = c.back(), dp;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return p / dp;
}

bool aberth(const std::vector<BigComplex>& c, std::vector<BigComplex>& z, long tol_bits, int max_iter) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      BigComplex w = newton_ratio(c, z[k]);
      BigComplex s;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += BigComplex(BigFloat(1L)) / (z[k] - z[j]);
      BigComplex step = w / (BigComplex(BigFloat(1L)) - w * s);
      z[k] -= step;
      const long scale = std::max(0L, z[k].abs().exponent());
      if (step.abs().exponent() < scale - tol_bits) done[k] = true;
      else all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

BigComplex default_generator_value(const FieldPtr& field) {
  if (field->is_rationals()) return BigComplex(BigFloat(0L));
  for (int l = 3; l <= 60; ++l) {
    if (!field->equivalent(*cyclotomic_field(l))) continue;
    return polar(BigFloat(1L), BigFloat(2L) * pi() / BigFloat(static_cast<long>(l)));
  }
  const UniPoly m = make_unipoly(NumberField::rationals(), field->modulus());
  const auto real = isolate_real_roots(m);
  if (!real.empty()) {
    const UniPoly mm = m;
    RealInterval iv = refine_root(mm, real.back(), Rational(1, 1) / Rational(Integer(1) << static_cast<unsigned>(working_precision())));
    return BigComplex((BigFloat(iv.lo) + BigFloat(iv.hi)) / BigFloat(2L));
  }
  const int digits = static_cast<int>(working_precision() / 3.32) + 1;
  RootSet rs = roots_numeric(m, digits);
  auto best = std::max_element(rs.roots.begin(), rs.roots.end(),
                               [](const ComplexBall& a, const ComplexBall& b) { return a.mid.im < b.mid.im; });
  return best->mid;
}

namespace {

// Aberth iteration on a doubling precision ladder.  `coeffs` yields the
// coefficients at the current working precision.
std::pair<std::vector<ComplexBall>, bool> aberth_ladder(const std::function<std::vector<BigComplex>()>& coeffs, int d,
                                                         int digits) {
  const mpfr_prec_t target = digits_to_bits(digits) + 32;
  std::vector<BigComplex> z;
  mpfr_prec_t prec = std::min<mpfr_prec_t>(128, target);
  bool first = true;
  for (;;) {
    PrecisionScope scope(prec + 32);
    const std::vector<BigComplex> c = coeffs();
    if (z.empty()) {
      // Initial points on a circle of radius given by the Fujiwara bound.
      BigFloat bound(0L);
      const BigFloat lc = c.back().abs();
      for (int i = 0; i < d; ++i) {
        BigFloat r = c[i].abs() / lc;
        if (r.is_zero()) continue;
        const long e = (r.exponent() + d - i - 1) / (d - i) + 1;
        bound = max(bound, pow2(e));
      }
      if (bound.is_zero()) bound = BigFloat(1L);
      const BigFloat two_pi = BigFloat(2L) * pi();
      for (int k = 0; k < d; ++k) z.push_back(polar(bound, two_pi * BigFloat(k) / BigFloat(d) + BigFloat(0.4)));
    } else {
      for (auto& w : z) {
        BigFloat re(0L), im(0L);
        mpfr_set(re.get(), w.re.get(), MPFR_RNDN);
        mpfr_set(im.get(), w.im.get(), MPFR_RNDN);
        w = BigComplex(re, im);
      }
    }
    const int max_iter = first ? 400 + 20 * d : 60;
    first = false;
    if (!aberth(c, z, static_cast<long>(prec) - 8, max_iter))
      throw BudgetExceeded("roots_numeric: Aberth iteration did not converge at " + std::to_string(prec) + " bits");
    if (prec >= target) {
      // Weierstrass inclusion radii: the disks D(z_k, d |W_k|) are disjoint => one root each.
      std::vector<ComplexBall> balls;
      const BigFloat slack = pow2(-static_cast<long>(prec) + 16);
      for (int k = 0; k < d; ++k) {
        BigComplex den = c.back();
        for (int j = 0; j < d; ++j)
          if (j != k) den *= z[k] - z[j];
        BigFloat r = (horner(c, z[k]) / den).abs() * BigFloat(static_cast<long>(d));
        r += slack * max(BigFloat(1L), z[k].abs());
        balls.push_back({z[k], r});
      }
      bool certified = true;
      for (int a = 0; a < d && certified; ++a)
        for (int b = a + 1; b < d; ++b)
          if ((balls[a].mid - balls[b].mid).abs() <= balls[a].rad + balls[b].rad) {
            certified = false;
            break;
          }
      return {std::move(balls), certified};
    }
    prec = std::min(prec * 2, target);
  }
}

}  // namespace

RootSet roots_numeric(const UniPoly& f, int digits, std::optional<BigComplex> generator) {
  if (f.degree() < 1) throw Error("roots_numeric: constant polynomial");
  if (!is_squarefree(f)) throw Error("roots_numeric: polynomial is not squarefree");
  RootSet rs;
  rs.poly = f;
  rs.precision_digits = digits;
  auto coeffs = [&] {
    const BigComplex gen = generator ? *generator : default_generator_value(f.zero_element().field());
    return numeric_coeffs(f, gen);
  };
  auto [balls, ok] = aberth_ladder(coeffs, f.degree(), digits);
  rs.roots = std::move(balls);
  rs.certified = ok;
  return rs;
}

std::vector<ComplexBall> complex_roots(const std::vector<BigComplex>& coeffs, int digits) {
  std::vector<BigComplex> c = coeffs;
  while (!c.empty() && c.back().re.is_zero() && c.back().im.is_zero()) c.pop_back();
  if (c.size() < 2) throw Error("complex_roots: constant polynomial");
  // Copy into the working precision of each ladder stage; arithmetic keeps the
  // precision of its left operand.
  auto at_precision = [&] {
    std::vector<BigComplex> out;
    for (const auto& z : c) {
      BigFloat re(0L), im(0L);
      mpfr_set(re.get(), z.re.get(), MPFR_RNDN);
      mpfr_set(im.get(), z.im.get(), MPFR_RNDN);
      out.emplace_back(re, im);
    }
    return out;
  };
  return aberth_ladder(at_precision, static_cast<int>(c.size()) - 1, digits).first;
}

}  // namespace conjdim
