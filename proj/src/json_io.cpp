#include "liegauge/json_io.hpp"

#include <fstream>

#include "liegauge/error.hpp"

namespace liegauge {

using nlohmann::json;

nlohmann::json scalar_to_json(const TrigScalar& s) {
  json out = json::array();
  for (const auto& [k, q] : s.terms()) {
    json term = {{"re", rational_str(q.re)},
                 {"im", rational_str(q.im)},
                 {"cos", k.cos_pow},
                 {"sin", k.sin_pow},
                 {"sqrt2", k.sqrt2_pow}};
    if (k.sqrt3_pow) term["sqrt3"] = k.sqrt3_pow;
    out.push_back(std::move(term));
  }
  return out;
}

TrigScalar scalar_from_json(const json& j) {
  if (j.is_string()) return TrigScalar::parse(j.get<std::string>());
  if (!j.is_array()) throw Error("scalar JSON must be a term array or grammar string");
  TrigScalar out;
  for (const auto& term : j) {
    GaussRational q;
    if (term.contains("re")) q.re = parse_rational(term.at("re").get<std::string>());
    if (term.contains("im")) q.im = parse_rational(term.at("im").get<std::string>());
    unsigned cos_pow = term.value("cos", 0u);
    unsigned sin_pow = term.value("sin", 0u);
    unsigned sqrt2_pow = term.value("sqrt2", 0u);
    unsigned sqrt3_pow = term.value("sqrt3", 0u);
    out += TrigScalar::term(q, cos_pow, sin_pow, sqrt2_pow, sqrt3_pow);
  }
  return out;
}

nlohmann::json matrix_to_json(const TrigMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"rows", std::move(rows)}};
}

TrigMatrix matrix_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  const json& rows = j.at("rows");
  if (rows.size() != n) throw Error("matrix JSON: row count does not match n");
  TrigMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw Error("matrix JSON: row length does not match n");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(rows[r][c]);
  }
  return m;
}

nlohmann::json algebra_to_json(const StructureConstants& sc) {
  json constants = json::array();
  for (const auto& [key, value] : sc.entries()) {
    auto [a, b, c] = key;
    constants.push_back({{"a", sc.labels()[a]},
                         {"b", sc.labels()[b]},
                         {"c", sc.labels()[c]},
                         {"value", scalar_to_json(value)}});
  }
  return {{"dim", sc.dim()}, {"labels", sc.labels()}, {"constants", std::move(constants)}};
}

StructureConstants algebra_from_json(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != dim) throw Error("algebra JSON: label count does not match dim");
  StructureConstants sc(labels);
  auto index = [&sc](const json& v) {
    std::string label = v.get<std::string>();
    auto idx = sc.index_of(label);
    if (!idx) throw Error("algebra JSON: unknown generator label '" + label + "'");
    return *idx;
  };
  for (const auto& entry : j.at("constants")) {
    std::size_t a = index(entry.at("a"));
    std::size_t b = index(entry.at("b"));
    std::size_t c = index(entry.at("c"));
    if (a >= b)
      throw Error("algebra JSON: constants must be stored with a before b in basis order "
                  "(antisymmetric half only)");
    sc.set(a, b, c, scalar_from_json(entry.at("value")));
  }
  return sc;
}

nlohmann::json rep_to_json(const Representation& rep) {
  json mats = json::array();
  for (const auto& m : rep.matrices) mats.push_back(matrix_to_json(m));
  return {{"algebra", rep.labels}, {"matrices", std::move(mats)}};
}

Representation rep_from_json(const json& j) {
  Representation rep;
  rep.labels = j.at("algebra").get<std::vector<std::string>>();
  for (const auto& m : j.at("matrices")) rep.matrices.push_back(matrix_from_json(m));
  if (rep.labels.size() != rep.matrices.size())
    throw Error("representation JSON: matrix count does not match algebra labels");
  for (const auto& m : rep.matrices)
    if (m.size() != rep.matrices[0].size())
      throw Error("representation JSON: matrices must share one carrier dimension");
  return rep;
}

nlohmann::json poly_to_json(const TensorPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json factors = json::array();
    std::map<IndexId, int> seen;
    for (const auto& f : t.factors) {
      json jf = {{"field", f.field}, {"index", f.vector_index}};
      jf["deriv"] = f.has_derivative ? json(f.derivative_index) : json(nullptr);
      factors.push_back(std::move(jf));
      if (f.has_derivative && f.derivative_index > 0) ++seen[f.derivative_index];
      if (f.vector_index > 0) ++seen[f.vector_index];
    }
    json pairs = json::array();
    for (const auto& [id, n] : seen)
      if (n == 2) pairs.push_back({id, id});
    terms.push_back({{"coeff", scalar_to_json(t.coeff)},
                     {"g", t.g_power},
                     {"factors", std::move(factors)},
                     {"pairs", std::move(pairs)}});
  }
  return {{"terms", std::move(terms)}};
}

TensorPoly poly_from_json(const json& j) {
  TensorPoly p;
  for (const auto& jt : j.at("terms")) {
    TensorTerm t;
    t.coeff = scalar_from_json(jt.at("coeff"));
    t.g_power = jt.value("g", 0);
    for (const auto& jf : jt.at("factors")) {
      Factor f;
      f.field = jf.at("field").get<std::string>();
      f.vector_index = jf.at("index").get<IndexId>();
      if (jf.contains("deriv") && !jf.at("deriv").is_null()) {
        f.has_derivative = true;
        f.derivative_index = jf.at("deriv").get<IndexId>();
      }
      t.factors.push_back(std::move(f));
    }
    if (jt.contains("pairs"))
      for (const auto& pr : jt.at("pairs"))
        if (!pr.is_array() || pr.size() != 2 || pr[0] != pr[1])
          throw Error("poly JSON: a contraction pair must repeat one id");
    p.add(std::move(t));  // canonicalize validates the index structure
  }
  return p;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("JSON parse failure in '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace liegauge
