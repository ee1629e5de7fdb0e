#include "conjdim/multi_poly.hpp"

#include <algorithm>
#include <cctype>

#include "conjdim/error.hpp"

namespace conjdim {

UniPoly make_unipoly(const FieldPtr& field, const std::vector<Rational>& coeffs) {
  std::vector<NFElem> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.emplace_back(field, q);
  return UniPoly(NFElem(field), std::move(c));
}

UniPoly make_unipoly(const FieldPtr& field, const std::vector<NFElem>& coeffs) {
  return UniPoly(NFElem(field), coeffs);
}

UniPoly unipoly_x(const FieldPtr& field) { return UniPoly::x(NFElem(field)); }

namespace {

std::string coeff_text(const NFElem& c) {
  if (c.is_rational()) return c.to_rational().get_str();
  // a0 + a1*t + ... with the field label's generator name
  const std::string& label = c.field()->label();
  std::string gen = label == "Q(i)" ? "i" : label.size() > 3 && label.rfind("Q(", 0) == 0
                                                 ? label.substr(2, label.size() - 3)
                                                 : "t";
  std::string s;
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    const Rational& q = c.coords()[k];
    if (q == 0) continue;
    std::string mag = Rational(abs(q)).get_str();
    if (!s.empty()) s += q < 0 ? " - " : " + ";
    else if (q < 0) s += "-";
    if (k == 0) {
      s += mag;
      continue;
    }
    if (abs(q) != 1) s += mag + "*";
    s += gen;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return "(" + s + ")";
}

}  // namespace

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const NFElem& c = p[k];
    if (c.is_zero()) continue;
    std::string t = coeff_text(c);
    bool neg = !t.empty() && t[0] == '-';
    if (neg) t = t.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (k == 0) {
      s += t;
    } else {
      if (t != "1") s += t + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

MultiPoly::MultiPoly() : field_(NumberField::rationals()) {}

MultiPoly::MultiPoly(FieldPtr field, std::vector<std::string> vars) : field_(std::move(field)), vars_(std::move(vars)) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVars))
    throw Error("too many variables (max " + std::to_string(kMaxVars) + ")");
}

MultiPoly MultiPoly::constant(const FieldPtr& field, const std::vector<std::string>& vars, const NFElem& c) {
  MultiPoly p(field, vars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& field, const std::vector<std::string>& vars, int index) {
  MultiPoly p(field, vars);
  if (index < 0 || index >= p.arity()) throw Error("variable index out of range");
  Monomial m{};
  m[index] = 1;
  p.add_term(m, NFElem(field, Rational(1)));
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw Error("unknown variable '" + name + "'");
  return static_cast<int>(it - vars_.begin());
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

NFElem MultiPoly::constant_term() const { return coeff(Monomial{}); }

NFElem MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? NFElem(field_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const NFElem& c) {
  if (c.is_zero()) return;
  if (!same_field(c.field(), field_)) throw FieldMismatch();
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int i = 0; i < arity(); ++i) s += m[i];
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int i = 0; i < arity(); ++i) s += m[i];
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!same_field(field_, o.field_)) throw FieldMismatch();
  if (vars_ != o.vars_) throw Error("variable lists differ");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, a.vars_);
  const int n = a.arity();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{};
      for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const NFElem& c) {
  if (!same_field(c.field(), field_)) throw FieldMismatch();
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_field(a.field_, b.field_) && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = one_like(*this), base(*this);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NFElem MultiPoly::evaluate(std::span<const NFElem> point) const {
  if (static_cast<int>(point.size()) != arity()) throw Error("evaluation point has wrong arity");
  // Cache powers per variable.
  std::vector<std::vector<NFElem>> pw(arity());
  for (int i = 0; i < arity(); ++i) {
    pw[i].push_back(NFElem(field_, Rational(1)));
    const int d = degree_in(i);
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  NFElem acc(field_);
  for (const auto& [m, c] : terms_) {
    NFElem t = c;
    for (int i = 0; i < arity(); ++i)
      if (m[i]) t *= pw[i][m[i]];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  check_compatible(value);
  const int d = degree_in(var);
  std::vector<MultiPoly> pw{one_like(*this)};
  for (int k = 1; k <= d; ++k) pw.push_back(pw.back() * value);
  MultiPoly r(field_, vars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    MultiPoly t(field_, vars_);
    t.add_term(rest, c);
    r += t * pw[m[var]];
  }
  return r;
}

MultiPoly MultiPoly::substitute_all(std::span<const MultiPoly> values) const {
  if (static_cast<int>(values.size()) != arity()) throw Error("substitution has wrong arity");
  if (values.empty()) return *this;
  const MultiPoly& proto = values[0];
  std::vector<std::vector<MultiPoly>> pw(arity());
  for (int i = 0; i < arity(); ++i) {
    pw[i].push_back(one_like(proto));
    const int d = degree_in(i);
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * values[i]);
  }
  MultiPoly r = zero_like(proto);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(proto.field(), proto.vars(), c);
    for (int i = 0; i < arity(); ++i)
      if (m[i]) t *= pw[i][m[i]];
    r += t;
  }
  return r;
}

DensePoly<MultiPoly> MultiPoly::as_univariate_in(int var) const {
  MultiPoly zero(field_, vars_);
  std::vector<MultiPoly> c(std::max(degree_in(var) + 1, 0), zero);
  for (const auto& [m, x] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    c[m[var]].add_term(rest, x);
  }
  return DensePoly<MultiPoly>(zero, std::move(c));
}

MultiPoly MultiPoly::from_univariate(const DensePoly<MultiPoly>& p, int var) {
  MultiPoly r = p.zero_element();
  for (int k = 0; k <= p.degree(); ++k) {
    for (const auto& [m, x] : p[k].terms()) {
      if (m[var] != 0) throw Error("coefficient involves the main variable");
      Monomial mm = m;
      mm[var] = static_cast<std::uint16_t>(k);
      r.add_term(mm, x);
    }
  }
  return r;
}

UniPoly MultiPoly::to_unipoly(int var) const {
  std::vector<NFElem> c(std::max(degree_in(var) + 1, 0), NFElem(field_));
  for (const auto& [m, x] : terms_) {
    for (int i = 0; i < arity(); ++i)
      if (i != var && m[i]) throw Error("polynomial involves variables other than " + vars_[var]);
    c[m[var]] = x;
  }
  return UniPoly(NFElem(field_), std::move(c));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, const std::vector<std::string>& vars, int var) {
  MultiPoly r(p.zero_element().field(), vars);
  for (int k = 0; k <= p.degree(); ++k) {
    Monomial m{};
    m[var] = static_cast<std::uint16_t>(k);
    r.add_term(m, p[k]);
  }
  return r;
}

MultiPoly MultiPoly::remap(const std::vector<std::string>& new_vars, const std::vector<int>& map) const {
  MultiPoly r(field_, new_vars);
  for (const auto& [m, c] : terms_) {
    Monomial mm{};
    for (int i = 0; i < arity(); ++i) {
      if (!m[i]) continue;
      if (map[i] < 0) throw Error("remap drops a variable that occurs");
      mm[map[i]] = static_cast<std::uint16_t>(mm[map[i]] + m[i]);
    }
    r.add_term(mm, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string t = coeff_text(c);
    bool neg = t[0] == '-';
    if (neg) t = t.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mono;
    for (int i = 0; i < arity(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) s += t;
    else if (t == "1") s += mono;
    else s += t + "*" + mono;
  }
  return s;
}

std::uint64_t MultiPoly::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < arity(); ++i) h = (h ^ m[i]) * 0x100000001b3ull;
    h = (h ^ c.hash()) * 0x100000001b3ull;
  }
  return h;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) {
    MultiPoly q(a);
    q *= b.constant_term().inverse();
    return q;
  }
  const int n = a.arity();
  MultiPoly r(a), q = zero_like(a);
  const auto& [lm_b, lc_b] = *b.terms().rbegin();
  const NFElem inv_lc = lc_b.inverse();
  while (!r.is_zero()) {
    const auto& [lm_r, lc_r] = *r.terms().rbegin();
    Monomial m{};
    for (int i = 0; i < n; ++i) {
      if (lm_r[i] < lm_b[i]) throw Error("inexact multivariate division");
      m[i] = static_cast<std::uint16_t>(lm_r[i] - lm_b[i]);
    }
    MultiPoly t(a.field(), a.vars());
    t.add_term(m, lc_r * inv_lc);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const FieldPtr& field, const std::vector<std::string>& vars)
      : s_(text), field_(field), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly constant(const NFElem& c) const { return MultiPoly::constant(field_, vars_, c); }

  MultiPoly expr() {
    MultiPoly r(field_, vars_);
    bool neg = eat('-');
    if (!neg) eat('+');
    MultiPoly t = term();
    r = neg ? -t : t;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  MultiPoly term() {
    MultiPoly r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= d.constant_term().inverse();
      } else {
        return r;
      }
    }
  }

  MultiPoly factor() {
    if (eat('-')) return -factor();
    MultiPoly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(NFElem(field_, Rational(Integer(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), id);
      if (it != vars_.end()) return MultiPoly::variable(field_, vars_, static_cast<int>(it - vars_.begin()));
      if (is_generator_name(id)) return constant(NFElem::generator(field_));
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool is_generator_name(const std::string& id) const {
    if (field_->degree() < 2) return false;
    const std::string& label = field_->label();
    if (id == "i") return label == "Q(i)";
    if (label.size() > 3 && label.substr(2, label.size() - 3) == id) return true;
    return id == "w" || id == "theta";
  }

  std::string s_;
  FieldPtr field_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(const std::string& text, const FieldPtr& field, const std::vector<std::string>& vars) {
  return Parser(text, field, vars).parse();
}

}  // namespace conjdim
