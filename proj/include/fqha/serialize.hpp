#pragma once

#include <json.hpp>

#include "fqha/exponents.hpp"
#include "fqha/fourier.hpp"
#include "fqha/incidence.hpp"
#include "fqha/lattice.hpp"

namespace fqha {

using json = nlohmann::json;

/// {p, k, modulus: [c0..ck], primitive}
json field_to_json(const Field& f);

/// {field, dim, indices: sorted integer list}
json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const json& j, FieldPtr f);

/// Tagged object: {"type": "sphere" | "paraboloid" | "cone" | "hyperplane"
///                 | "affine_subspace", ...}
json variety_to_json(const VarietySpec& v);
VarietySpec variety_from_json(const json& j);

/// {support, measure, values: [[index, re, im], ...]}
json table_to_json(const FunctionTable& t);
FunctionTable table_from_json(const json& j, FieldPtr f);

json incidence_report_to_json(const IncidenceReport& r);
json exponent_record_to_json(const ExponentRecord& r);

} // namespace fqha
