#include "conjdim/resultant.hpp"

#include "conjdim/error.hpp"

namespace conjdim {

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0)
    throw Error("resultant: variable " + f.vars().at(var) + " occurs in neither input");
  return resultant(f.as_univariate_in(var), g.as_univariate_in(var));
}

NFElem resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_constant() && g.is_constant() && !(f.is_zero_poly() || g.is_zero_poly()))
    throw Error("resultant: variable occurs in neither input");
  return resultant<NFElem>(f, g);
}

BiPoly to_bipoly(const MultiPoly& f, int main_var) {
  if (f.arity() != 2) throw Error("to_bipoly needs exactly two variables");
  const int other = 1 - main_var;
  const UniPoly zero(NFElem(f.field()));
  std::vector<UniPoly> c(std::max(f.degree_in(main_var) + 1, 0), zero);
  for (const auto& [m, x] : f.terms()) {
    UniPoly t = UniPoly::monomial(x, m[other]);
    c[m[main_var]] += t;
  }
  return BiPoly(zero, std::move(c));
}

}  // namespace conjdim
