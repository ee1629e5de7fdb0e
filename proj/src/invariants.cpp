#include "conjdim/invariants.hpp"

#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"

namespace conjdim {

std::vector<std::string> x_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

InvariantSystem elem_symm_lpowers(int n, int l) {
  if (n < 1 || l < 1) throw Error("elem_symm_lpowers: n and l must be positive");
  if (n > kMaxVars) throw Error("elem_symm_lpowers: too many variables");
  GroupPtr g = l == 2 ? group_Bn(n) : group_Gl1n(l, n);
  const FieldPtr& k = g->field();
  const auto vars = x_vars(n);
  // prod_i (1 + t x_i^l) expanded one variable at a time; e[j] is the t^j coefficient.
  std::vector<MultiPoly> e(n + 1, MultiPoly(k, vars));
  e[0] = MultiPoly::constant(k, vars, NFElem(k, Rational(1)));
  for (int i = 0; i < n; ++i) {
    const MultiPoly xl = MultiPoly::variable(k, vars, i).pow(l);
    for (int j = i + 1; j >= 1; --j) e[j] += e[j - 1] * xl;
  }
  InvariantSystem sys{g, {}, {}, "e_j(x^" + std::to_string(l) + ")"};
  for (int j = 1; j <= n; ++j) {
    sys.polys.push_back(e[j]);
    sys.degrees.push_back(j * l);
  }
  return sys;
}

InvariantSystem g2_invariants() {
  const FieldPtr& q = NumberField::rationals();
  const auto vars = x_vars(2);
  return {group_G2(),
          {parse_multipoly("x1^2 - x1*x2 + x2^2", q, vars), parse_multipoly("(x1*x2*(x1 - x2))^2", q, vars)},
          {2, 6},
          "G2"};
}

const std::vector<std::string>& f4_s_vars() {
  static const std::vector<std::string> v{"s2", "s4", "s6", "s8"};
  return v;
}

MultiPoly f4_defining_form(int k) {
  if (k < 1 || k > kMaxVars) throw Error("f4_defining_form: k out of range");
  const FieldPtr& q = NumberField::rationals();
  std::vector<std::string> vars;
  for (int j = 1; j <= k; ++j) vars.push_back("s" + std::to_string(2 * j));
  auto s = [&](int j) { return MultiPoly::variable(q, vars, j - 1); };
  MultiPoly f = s(k) * NFElem(q, Rational(8) - rpow(2, 2 * k - 1));
  for (int j = 1; j < k; ++j) f += s(j) * s(k - j) * NFElem(q, Rational(binomial(2 * k, 2 * j)));
  return f;
}

MultiPoly f4_reduced_form(int k) {
  MultiPoly f = f4_defining_form(k);
  std::vector<int> weights;
  for (int j = 1; j <= k; ++j) weights.push_back(j);
  return newton_reduce(f, weights, 4, f4_s_vars());
}

MultiPoly f4_reference_form(int k) {
  const char* text = nullptr;
  switch (k) {
    case 1: text = "6*s2"; break;
    case 3: text = "-24*s6 + 30*s2*s4"; break;
    case 4: text = "-120*s8 + 56*s2*s6 + 70*s4^2"; break;
    case 6:
      text =
          "-540*s4*s8 + 244*s6^2 - 1365*s2^2*s8 + 1365/2*s2^2*s4^2 + 255*s4^3"
          " - 710*s2^4*s4 + 1250*s2^3*s6 + 159/2*s2^6 + 110*s2*s4*s6";
      break;
    default: throw Error("f4_reference_form: k must be 1, 3, 4 or 6");
  }
  return parse_multipoly(text, NumberField::rationals(), f4_s_vars());
}

InvariantSystem f4_invariants() {
  const FieldPtr& q = NumberField::rationals();
  const auto vars = x_vars(4);
  std::vector<MultiPoly> s_in_x;
  for (int k = 1; k <= 4; ++k) {
    MultiPoly s(q, vars);
    for (int i = 0; i < 4; ++i) s += MultiPoly::variable(q, vars, i).pow(2 * k);
    s_in_x.push_back(std::move(s));
  }
  InvariantSystem sys{group_F4(), {}, {}, "F4"};
  for (int k : {1, 3, 4, 6}) {
    MultiPoly reduced = f4_reduced_form(k);
    if (!(reduced == f4_reference_form(k)))
      throw Error("F4 invariant I" + std::to_string(2 * k) + " disagrees with its reference form: " + reduced.to_string());
    sys.polys.push_back(reduced.substitute_all(s_in_x));
    sys.degrees.push_back(2 * k);
  }
  return sys;
}

InvariantSystem st8_invariants() {
  const FieldPtr& k = cyclotomic_field(4);
  const auto vars = x_vars(2);
  const MultiPoly i8 = parse_multipoly(
      "x1^8 + 4*(1 + i)*x1^7*x2 + 14*i*x1^6*x2^2 - 14*(1 - i)*x1^5*x2^3 - 21*x1^4*x2^4"
      " - 14*(1 + i)*x1^3*x2^5 - 14*i*x1^2*x2^6 + 4*(1 - i)*x1*x2^7 + x2^8",
      k, vars);
  const MultiPoly i12 = parse_multipoly(
      "2*x1^12 + 12*(1 + i)*x1^11*x2 + 66*i*x1^10*x2^2 - 110*(1 - i)*x1^9*x2^3 - 231*x1^8*x2^4"
      " - 132*(1 + i)*x1^7*x2^5 - 132*(1 - i)*x1^5*x2^7 - 231*x1^4*x2^8 - 110*(1 + i)*x1^3*x2^9"
      " - 66*i*x1^2*x2^10 + 12*(1 - i)*x1*x2^11 + 2*x2^12",
      k, vars);
  return {group_ST8(), {i8, i12}, {8, 12}, "ST8"};
}

InvariantSystem invariant_system(const std::string& group, int n, int l) {
  if (group == "G2") return g2_invariants();
  if (group == "F4") return f4_invariants();
  if (group == "ST8") return st8_invariants();
  if (group == "Bn") return elem_symm_lpowers(n, 2);
  if (group == "Gl1n") return elem_symm_lpowers(n, l);
  if (group.size() > 1 && group[0] == 'B') return elem_symm_lpowers(std::stoi(group.substr(1)), 2);
  throw Error("no invariant system for group " + group);
}

bool verify_system(const InvariantSystem& sys) {
  if (sys.polys.size() != sys.degrees.size()) return false;
  for (std::size_t j = 0; j < sys.polys.size(); ++j) {
    const MultiPoly& f = sys.polys[j];
    if (!f.is_homogeneous() || f.total_degree() != sys.degrees[j]) return false;
    if (!is_invariant(f, *sys.group)) return false;
  }
  return true;
}

}  // namespace conjdim
