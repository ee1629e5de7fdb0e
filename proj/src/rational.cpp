#include "conjdim/rational.hpp"

#include <cctype>

#include "conjdim/error.hpp"

namespace conjdim {

Rational rational_normalize(const Integer& p, const Integer& q) {
  if (q == 0) throw DivisionByZero();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("bad rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("bad rational: '" + std::string(whole) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer p = parse_integer(s.substr(0, slash), text);
  Integer q = parse_integer(s.substr(slash + 1), text);
  return rational_normalize(p, q);
}

bool integer_is_square(const Integer& z) {
  if (z < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool rational_is_square(const Rational& q) {
  if (q < 0) return false;
  return integer_is_square(q.get_num()) && integer_is_square(q.get_den());
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero();
    return rpow(Rational(1) / base, -e);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
             ipow(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

std::uint64_t hash_integer(const Integer& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(p->_mp_size);
  const int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(p->_mp_d[i]);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_rational(const Rational& q) {
  return hash_integer(q.get_num()) * 31 + hash_integer(q.get_den());
}

}  // namespace conjdim
