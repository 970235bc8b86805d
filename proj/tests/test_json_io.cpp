#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "liegauge/json_io.hpp"
#include "support/gen.hpp"

using namespace liegauge;

namespace {
TrigScalar ts(const char* text) { return TrigScalar::parse(text); }
}  // namespace

TEST_CASE("scalar round-trip and string form") {
  testgen::Gen gen(31337);
  for (int iter = 0; iter < 200; ++iter) {
    TrigScalar s = gen.scalar();
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  CHECK(scalar_from_json(nlohmann::json("-i*cos + 1/2*sqrt2")) == ts("-i*cos + 1/2*sqrt2"));
  nlohmann::json term = {{"re", "1/2"}, {"im", "0"}, {"cos", 1}, {"sin", 0}, {"sqrt2", 1}};
  CHECK(scalar_from_json(nlohmann::json::array({term})) == ts("1/2*cos*sqrt2"));
  // sqrt3 is optional in the wire format
  CHECK(!scalar_to_json(ts("cos"))[0].contains("sqrt3"));
  CHECK(scalar_to_json(ts("sqrt3"))[0]["sqrt3"] == 1);
}

TEST_CASE("matrix round-trip") {
  const auto& fx = fixtures();
  const TrigMatrix& m = fx.glashow_transform.forward;
  nlohmann::json j = matrix_to_json(m);
  CHECK(j["n"] == 4);
  CHECK(j["rows"][2][2] == "cos");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"n", 2}, {"rows", {{"1"}}}}), Error);
}

TEST_CASE("algebra round-trip keeps canonical storage") {
  const auto& fx = fixtures();
  for (const StructureConstants* sc :
       {&fx.ga_constants, &fx.su2xu1_constants, &fx.su3_constants, &fx.u1_constants}) {
    nlohmann::json j = algebra_to_json(*sc);
    CHECK(algebra_from_json(j) == *sc);
  }

  nlohmann::json j = algebra_to_json(fx.ga_constants);
  for (const auto& entry : j["constants"]) {
    std::size_t a = *fx.ga_constants.index_of(entry["a"].get<std::string>());
    std::size_t b = *fx.ga_constants.index_of(entry["b"].get<std::string>());
    CHECK(a < b);
  }

  // the loader refuses entries stored against basis order
  nlohmann::json bad = {{"dim", 2},
                        {"labels", {"P", "Q"}},
                        {"constants", {{{"a", "Q"}, {"b", "P"}, {"c", "P"}, {"value", "1"}}}}};
  CHECK_THROWS_AS(algebra_from_json(bad), Error);
}

TEST_CASE("representation round-trip") {
  const auto& fx = fixtures();
  for (const Representation* rep :
       {&fx.su2xu1_fundamental, &fx.ga_adjoint, &fx.ga_transformed_adjoint}) {
    nlohmann::json j = rep_to_json(*rep);
    Representation back = rep_from_json(j);
    CHECK(back.labels == rep->labels);
    CHECK(back.matrices == rep->matrices);
  }
}

TEST_CASE("polynomial round-trip") {
  const auto& fx = fixtures();
  FieldStrengthSet fs = field_strength(fx.ga_constants, fx.standard_names);
  for (const auto& comp : fs.components)
    CHECK(poly_from_json(poly_to_json(comp)) == comp);

  // contraction pairs must repeat a single id
  nlohmann::json bad = {{"terms",
                         {{{"coeff", "1"},
                           {"g", 0},
                           {"factors",
                            {{{"field", "A"}, {"deriv", nullptr}, {"index", 1}},
                             {{"field", "A"}, {"deriv", nullptr}, {"index", 1}}}},
                           {"pairs", {{1, 2}}}}}}};
  CHECK_THROWS_AS(poly_from_json(bad), Error);
}

TEST_CASE("file helpers") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path good = dir / "liegauge_io_test.json";
  save_json_file(good.string(), {{"k", 1}});
  CHECK(load_json_file(good.string()) == nlohmann::json{{"k", 1}});
  fs::remove(good);

  CHECK_THROWS_AS(load_json_file((dir / "liegauge_missing.json").string()), Error);

  fs::path mangled = dir / "liegauge_bad.json";
  std::ofstream(mangled) << "{ not json";
  CHECK_THROWS_AS(load_json_file(mangled.string()), Error);
  fs::remove(mangled);
}
