#include "conjdim/tables.hpp"

#include <algorithm>

#include "conjdim/error.hpp"

namespace conjdim {

const std::vector<BoundRow>& exceptional_rows_rational() {
  static const std::vector<BoundRow> rows = [] {
    auto row = [](int n, const char* bound, const char* group, Rational ratio) {
      return BoundRow{n, 0, Integer(bound), group, ratio, true};
    };
    return std::vector<BoundRow>{
        row(2, "12", "W(G2)", Rational(3, 2)),
        row(4, "1152", "W(F4)", Rational(3)),
        row(6, "103680", "<W(E6),-I>", Rational(9, 4)),
        row(7, "2903040", "W(E7)", Rational(9, 2)),
        row(8, "696729600", "W(E8)", Rational(135, 2)),
        row(9, "1393459200", "W(E8) x W(A1)", Rational(15, 2)),
        row(10, "8360755200", "W(E8) x W(G2)", Rational(9, 4)),
    };
  }();
  return rows;
}

const std::vector<BoundRow>& exceptional_rows_cyclotomic() {
  static const std::vector<BoundRow> rows = [] {
    auto row = [](int n, int l, const char* bound, const char* group, Rational ratio) {
      return BoundRow{n, l, Integer(bound), group, ratio, true};
    };
    return std::vector<BoundRow>{
        row(2, 4, "96", "ST8", Rational(3)),
        row(2, 8, "192", "ST9", Rational(3, 2)),
        row(2, 10, "600", "ST16", Rational(3)),
        row(2, 20, "1200", "ST17", Rational(3, 2)),
        row(4, 4, "46080", "ST31", Rational(15, 2)),
        row(4, 6, "155520", "ST32", Rational(5)),
        row(4, 10, "720000", "ST16 wr S2", Rational(3)),
        row(5, 4, "184320", "ST31 x <w4 I>", Rational(3, 2)),
        row(6, 6, "39191040", "ST34", Rational(7, 6)),
        row(6, 10, "1296000000", "ST16 wr S3", Rational(9, 5)),
        row(8, 4, "4246732800", "ST31 wr S2", Rational(45, 28)),
    };
  }();
  return rows;
}

Integer d_max(int n) {
  if (n < 0) throw Error("d_max: n must be non-negative");
  for (const auto& r : exceptional_rows_rational())
    if (r.n == n) return r.bound;
  return ipow(2, n) * factorial(n);
}

Integer D_cyc(int l, int n) {
  if (l < 4 || l % 2) throw Error("D_cyc: l must be even and at least 4");
  if (n < 0) throw Error("D_cyc: n must be non-negative");
  for (const auto& r : exceptional_rows_cyclotomic())
    if (r.n == n && r.l == l) return r.bound;
  return ipow(l, n) * factorial(n);
}

bool is_prime_power(const Integer& q) {
  if (q < 2) return false;
  Integer m = q;
  Integer p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (p * p > m) return true;  // q itself is prime
  while (m % p == 0) m /= p;
  return m == 1;
}

Integer D_finite(const Integer& q, int n) {
  if (!is_prime_power(q)) throw Error("D_finite: q must be a prime power");
  if (n < 0) throw Error("D_finite: n must be non-negative");
  return ipow(q, n) - 1;
}

std::string Base::to_string() const {
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Cyclotomic: return "cyc:" + std::to_string(l);
    case Kind::Finite: return "fq:" + q.get_str();
  }
  return "?";
}

Base parse_base(const std::string& text) {
  if (text == "q" || text == "Q") return Base::rationals();
  try {
    if (text.rfind("cyc:", 0) == 0) return Base::cyclotomic(std::stoi(text.substr(4)));
    if (text.rfind("fq:", 0) == 0) return Base::finite(Integer(text.substr(3)));
  } catch (const std::exception&) {
  }
  throw ParseError("unknown base: " + text);
}

Integer bound_for(const Base& base, int n) {
  switch (base.kind) {
    case Base::Kind::Q: return d_max(n);
    case Base::Kind::Cyclotomic: return D_cyc(base.l, n);
    case Base::Kind::Finite: return D_finite(base.q, n);
  }
  return 0;
}

std::vector<BoundRow> table_rows(const Base& base, int n_max) {
  std::vector<BoundRow> out;
  for (int n = 0; n <= n_max; ++n) {
    BoundRow r;
    r.n = n;
    r.bound = bound_for(base, n);
    switch (base.kind) {
      case Base::Kind::Q: {
        auto it = std::find_if(exceptional_rows_rational().begin(), exceptional_rows_rational().end(),
                               [n](const BoundRow& x) { return x.n == n; });
        if (it != exceptional_rows_rational().end()) {
          r = *it;
        } else {
          r.group = "W(B" + std::to_string(n) + ")";
          r.ratio = 1;
        }
        break;
      }
      case Base::Kind::Cyclotomic: {
        r.l = base.l;
        auto it = std::find_if(exceptional_rows_cyclotomic().begin(), exceptional_rows_cyclotomic().end(),
                               [&](const BoundRow& x) { return x.n == n && x.l == base.l; });
        if (it != exceptional_rows_cyclotomic().end()) {
          r = *it;
        } else {
          r.group = "ST2(" + std::to_string(base.l) + ",1," + std::to_string(n) + ")";
          r.ratio = 1;
        }
        break;
      }
      case Base::Kind::Finite:
        r.group = "F_" + base.q.get_str() + "^" + std::to_string(n) + " \\ {0} under Frobenius";
        r.ratio = 1;
        break;
    }
    out.push_back(r);
  }
  return out;
}

std::string to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::OK: return "OK";
    case BoundVerdict::ViolatesLower: return "ViolatesLower";
    case BoundVerdict::ViolatesUpper: return "ViolatesUpper";
  }
  return "?";
}

BoundVerdict check_bounds(int n, const Integer& d, const Base& base) {
  if (n < 0 || d < 0) throw Error("check_bounds: negative input");
  if (d < n) return BoundVerdict::ViolatesLower;
  if (d > bound_for(base, n)) return BoundVerdict::ViolatesUpper;
  return BoundVerdict::OK;
}

int min_dimension_for_degree(const Integer& d, const Base& base) {
  for (int n = 0; n <= 64; ++n)
    if (bound_for(base, n) >= d) return n;
  throw Error("min_dimension_for_degree: degree too large");
}

}  // namespace conjdim
