#pragma once

#include <json.hpp>
#include <string>

#include "conjdim/conj_dim.hpp"
#include "conjdim/constructor.hpp"
#include "conjdim/finite_field.hpp"
#include "conjdim/invariants.hpp"
#include "conjdim/irreducibility.hpp"
#include "conjdim/tables.hpp"

namespace conjdim {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// "Q", "Q(i)", "Q(w<l>)" by label; any other field as
/// {"label": ..., "modulus": [ascending rationals]}.
Json field_to_json(const FieldPtr& k);
FieldPtr field_from_json(const Json& j);

/// "[c0, c1, ...]@label"; rationals print as "p/q".
std::string nfelem_to_string(const NFElem& a);
NFElem nfelem_from_string(const std::string& text, const FieldPtr& field);

/// {"field": ..., "var": "x", "coeffs": [ascending]}.  Coefficients are
/// rational strings over Q and NFElem strings otherwise.  On input an "expr"
/// string may replace "coeffs", and JSON integers are accepted as coefficients.
Json poly_to_json(const UniPoly& f, const std::string& var = "x");
UniPoly poly_from_json(const Json& j);
std::string poly_var(const Json& j);

Json to_json(const IrreducibilityCertificate& c);
Json to_json(const DimReport& r);
Json to_json(const RealRootCount& r);
Json to_json(const AuxiliaryPoly& a);
Json to_json(const F4Chain& c);
Json to_json(const SqrtCriteria& c);
Json to_json(const Construction& c);
Json to_json(const DqnReport& r);
Json to_json(const ScanReport& r);
Json to_json(const BoundRow& r);

Json matrix_to_json(const Matrix& m);
Json group_to_json(const MatGroup& g, bool with_elements);
Json invariants_to_json(const InvariantSystem& sys, bool check_invariance);

}  // namespace conjdim
