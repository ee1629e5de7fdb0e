#include "conjdim/serialize.hpp"

#include "conjdim/error.hpp"
#include "conjdim/poly_algebra.hpp"

namespace conjdim {

namespace {

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::optional<FieldPtr> field_by_label(const std::string& label) {
  if (label == "Q") return NumberField::rationals();
  if (label == "Q(i)") return cyclotomic_field(4);
  if (label.size() > 4 && label.rfind("Q(w", 0) == 0 && label.back() == ')') {
    try {
      const int l = std::stoi(label.substr(3, label.size() - 4));
      if (cyclotomic_field(l)->label() == label) return cyclotomic_field(l);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

Rational coefficient_rational(const Json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) return parse_rational(c.get<std::string>());
  throw ParseError("coefficient must be a string or an integer");
}

}  // namespace

Json field_to_json(const FieldPtr& k) {
  if (auto known = field_by_label(k->label()); known && (*known)->equivalent(*k)) return k->label();
  Json j;
  j["label"] = k->label();
  j["modulus"] = rationals_json(k->modulus());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_string()) {
    if (auto k = field_by_label(j.get<std::string>())) return *k;
    throw ParseError("unknown field label '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || !j.contains("modulus")) throw ParseError("field must be a label or {label, modulus}");
  std::vector<Rational> m;
  for (const auto& c : j.at("modulus")) m.push_back(coefficient_rational(c));
  const std::string label = j.value("label", "K");
  if (auto known = field_by_label(label); known && (*known)->modulus() == m) return *known;
  return make_number_field(make_unipoly(NumberField::rationals(), m), label);
}

std::string nfelem_to_string(const NFElem& a) {
  if (a.field()->is_rationals()) return to_string(a.to_rational());
  return a.to_string();
}

NFElem nfelem_from_string(const std::string& text, const FieldPtr& field) {
  const auto at = text.find('@');
  if (at == std::string::npos) return NFElem(field, parse_rational(text));
  const std::string label = text.substr(at + 1);
  if (label != field->label()) throw ParseError("element of " + label + " in a polynomial over " + field->label());
  std::string body = text.substr(0, at);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw ParseError("malformed element '" + text + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    coords.push_back(parse_rational(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) > field->degree()) throw ParseError("too many coordinates in '" + text + "'");
  coords.resize(field->degree(), Rational(0));
  return NFElem(field, coords);
}

Json poly_to_json(const UniPoly& f, const std::string& var) {
  Json j;
  const FieldPtr k = f.zero_element().field();
  j["field"] = field_to_json(k);
  j["var"] = var;
  Json c = Json::array();
  for (const auto& x : f.coeffs()) c.push_back(nfelem_to_string(x));
  j["coeffs"] = c;
  return j;
}

std::string poly_var(const Json& j) { return j.value("var", "x"); }

UniPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
  const FieldPtr k = j.contains("field") ? field_from_json(j.at("field")) : NumberField::rationals();
  const std::string var = poly_var(j);
  if (j.contains("expr")) return parse_multipoly(j.at("expr").get<std::string>(), k, {var}).to_unipoly(0);
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw ParseError("polynomial needs \"coeffs\" or \"expr\"");
  std::vector<NFElem> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_number_integer()) c.emplace_back(k, Rational(x.get<long>()));
    else if (x.is_string()) c.push_back(nfelem_from_string(x.get<std::string>(), k));
    else throw ParseError("coefficient must be a string or an integer");
  }
  return make_unipoly(k, c);
}

Json to_json(const IrreducibilityCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  Json primes = Json::array(), profiles = Json::array();
  for (const auto& e : c.evidence) {
    primes.push_back(e.prime);
    profiles.push_back(e.degrees);
  }
  j["primes"] = primes;
  j["profiles"] = profiles;
  j["witness"] = c.witness_factor ? poly_to_json(*c.witness_factor) : Json(nullptr);
  j["phase"] = c.phase;
  j["recombination_checked"] = c.recombination_checked;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const DimReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["dimension_lower"] = r.dimension_lower;
  j["dimension_upper"] = r.dimension_upper;
  Json rel = Json::array();
  for (const auto& v : r.relations) rel.push_back(integers_json(v));
  j["relations"] = rel;
  j["certified"] = r.certified;
  j["stable"] = r.stable;
  j["torsion"] = r.torsion;
  Json trail = Json::array();
  for (auto [d, u] : r.precision_trail) trail.push_back({{"digits", d}, {"dimension_upper", u}});
  j["precision_trail"] = trail;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const RealRootCount& r) {
  return {{"real", r.real_roots}, {"negative", r.negative_roots}, {"positive", r.positive_roots},
          {"zero_is_root", r.zero_is_root}};
}

Json to_json(const AuxiliaryPoly& a) {
  Json j;
  j["poly"] = poly_to_json(a.poly);
  j["constant"] = nfelem_to_string(a.constant);
  j["power"] = a.power;
  j["orbit_size"] = a.orbit_size;
  j["resultant_degree"] = a.resultant.degree();
  return j;
}

Json to_json(const F4Chain& c) {
  Json j;
  j["invariant_values"] = rationals_json(c.invariant_values);
  j["s2"] = to_string(c.s2);
  j["gamma_cubic"] = poly_to_json(c.gamma_cubic, "gamma");
  j["cubic_certificate"] = to_json(c.cubic_certificate);
  j["gamma_field"] = field_to_json(c.k);
  j["s4"] = nfelem_to_string(c.s4);
  j["s6"] = nfelem_to_string(c.s6);
  j["q4"] = poly_to_json(c.q4);
  j["q4_discriminant"] = to_string(c.q4_discriminant);
  j["discriminant_rational"] = c.discriminant_rational;
  j["discriminant_is_square"] = c.discriminant_is_square;
  j["q4_roots"] = to_json(c.q4_roots);
  j["cubic_resolvent"] = poly_to_json(c.cubic_resolvent);
  j["resolvent_certificate"] = to_json(c.resolvent_certificate);
  j["p24"] = poly_to_json(c.p24);
  j["p24_certificate"] = c.p24_certificate ? to_json(*c.p24_certificate) : Json(nullptr);
  return j;
}

Json to_json(const SqrtCriteria& c) {
  Json j;
  j["a_n"] = to_string(c.leading);
  j["discriminant"] = to_string(c.discriminant);
  j["a_n_condition"] = c.an_condition;
  j["roots"] = to_json(c.roots);
  j["all_real_one_negative"] = c.corollary_hypothesis;
  j["odd_condition"] = c.odd_condition;
  return j;
}

Json to_json(const Construction& c) {
  Json j;
  j["kind"] = c.kind;
  j["group"] = c.group_name;
  if (c.group) j["group_order"] = c.group->order();
  j["c"] = Json::array();
  for (const auto& x : c.c) j["c"].push_back(nfelem_to_string(x));
  j["b"] = rationals_json(c.b);
  j["coordinate_b"] = rationals_json(c.coordinate_b);
  j["auxiliary"] = c.auxiliary ? to_json(*c.auxiliary) : Json(nullptr);
  j["auxiliary_certificate"] = c.auxiliary_certificate ? to_json(*c.auxiliary_certificate) : Json(nullptr);
  j["base_poly"] = c.base_poly ? poly_to_json(*c.base_poly) : Json(nullptr);
  j["minimal_polynomial"] = c.alpha_minpoly ? poly_to_json(*c.alpha_minpoly, "y") : Json(nullptr);
  j["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  j["degree"] = to_string(c.degree);
  j["conj_dim_claimed"] = c.conj_dim_claimed;
  j["base"] = c.base.to_string();
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  j["orbit_size"] = opt(c.orbit_size);
  j["stabilizer_trivial"] = opt(c.stabilizer_trivial);
  j["orbit_rank"] = opt(c.orbit_rank);
  j["exponent_rank"] = opt(c.exponent_rank);
  j["distinct_conjugates"] = opt(c.distinct_conjugates);
  j["numeric_cross_check"] = opt(c.numeric_cross_check);
  j["dim_report"] = c.dim_report ? to_json(*c.dim_report) : Json(nullptr);
  j["f4"] = c.f4 ? to_json(*c.f4) : Json(nullptr);
  j["bounds"] = to_string(c.bounds);
  j["numeric_assisted"] = c.numeric_assisted;
  j["notes"] = c.notes;
  return j;
}

Json to_json(const DqnReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["degree"] = r.orbit_size;
  j["dimension"] = r.span_dimension;
  j["expected_degree"] = r.d;
  j["orbit"] = r.orbit;
  j["modulus"] = r.field_modulus;
  j["small_field_modulus"] = r.small_field_modulus;
  j["generator"] = r.generator;
  j["minpoly"] = r.minpoly;
  j["linearized"] = r.linearized;
  j["alpha"] = r.alpha;
  j["root_space_dimension"] = r.root_space_dimension;
  j["roots_brute_forced"] = r.roots_brute_forced;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const ScanReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["bound"] = r.bound;
  Json lv = Json::array();
  for (const auto& l : r.levels)
    lv.push_back({{"m", l.m}, {"elements", l.elements}, {"max_degree_within", l.max_degree_within},
                  {"violations", l.violations}});
  j["levels"] = lv;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const BoundRow& r) {
  Json j;
  j["n"] = r.n;
  if (r.l) j["l"] = r.l;
  j["bound"] = to_string(r.bound);
  j["group"] = r.group;
  j["ratio"] = to_string(r.ratio);
  j["exceptional"] = r.exceptional;
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(nfelem_to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json group_to_json(const MatGroup& g, bool with_elements) {
  Json j;
  j["name"] = g.name();
  j["field"] = field_to_json(g.field());
  j["dim"] = g.dim();
  j["action"] = g.natural_action() == Action::Row ? "row" : "column";
  j["generators"] = Json::array();
  for (const auto& m : g.generators()) j["generators"].push_back(matrix_to_json(m));
  j["order"] = g.order();
  if (with_elements) {
    j["elements"] = Json::array();
    for (const auto& m : g.elements()) j["elements"].push_back(matrix_to_json(m));
  }
  return j;
}

Json invariants_to_json(const InvariantSystem& sys, bool check_invariance) {
  Json j;
  j["name"] = sys.name;
  j["group"] = sys.group->name();
  j["field"] = field_to_json(sys.group->field());
  j["degrees"] = sys.degrees;
  j["invariants"] = Json::array();
  for (const auto& p : sys.polys) j["invariants"].push_back(p.to_string());
  if (check_invariance) j["invariant"] = verify_system(sys);
  return j;
}

}  // namespace conjdim
