#pragma once

#include <json.hpp>

#include "liegauge/catalog.hpp"
#include "liegauge/tensor.hpp"

namespace liegauge {

// Scalars serialize as a list of term objects
// {"re":"p/q","im":"p/q","cos":k,"sin":e,"sqrt2":e[,"sqrt3":e]}; the reader
// also accepts a plain string in the scalar text grammar.
nlohmann::json scalar_to_json(const TrigScalar& s);
TrigScalar scalar_from_json(const nlohmann::json& j);

// {"n": int, "rows": [[scalar text, ...], ...]}
nlohmann::json matrix_to_json(const TrigMatrix& m);
TrigMatrix matrix_from_json(const nlohmann::json& j);

// {"dim": n, "labels": [...], "constants": [{"a": label, "b": label,
//  "c": label, "value": scalar}, ...]} with a before b in basis order.
nlohmann::json algebra_to_json(const StructureConstants& sc);
StructureConstants algebra_from_json(const nlohmann::json& j);

// {"algebra": [labels], "matrices": [matrix, ...]}
nlohmann::json rep_to_json(const Representation& rep);
Representation rep_from_json(const nlohmann::json& j);

// {"terms": [{"coeff": scalar, "g": int, "factors": [{"field": label,
//  "deriv": id|null, "index": id}], "pairs": [[id,id], ...]}]}
// Free indices use the reserved ids mu = -1, nu = -2.
nlohmann::json poly_to_json(const TensorPoly& p);
TensorPoly poly_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace liegauge
