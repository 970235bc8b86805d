#include "liegauge/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace liegauge {

namespace {

TrigScalar S(const char* text) { return TrigScalar::parse(text); }

TrigMatrix mat(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<TrigScalar>> cells;
  cells.reserve(rows.size());
  for (auto& row : rows) {
    std::vector<TrigScalar> out;
    out.reserve(row.size());
    for (const char* cell : row) out.push_back(S(cell));
    cells.push_back(std::move(out));
  }
  return TrigMatrix::from_rows(std::move(cells));
}

const std::vector<std::string> kDirectLabels = {"T1", "T2", "T3", "T0"};
const std::vector<std::string> kMixedLabels = {"X1", "X2", "X3", "X0"};

StructureConstants make_su2xu1() {
  StructureConstants sc(kDirectLabels);
  // [T_a, T_b] = eps_{abc} T_c on the su(2) part; T0 central
  sc.set(0, 1, 2, 1);
  sc.set(1, 2, 0, 1);
  sc.set(2, 0, 1, 1);
  return sc;
}

StructureConstants make_su3() {
  StructureConstants sc({"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"});
  // Totally antisymmetric table, one representative per triple (1-based).
  struct Triple {
    int a, b, c;
    const char* v;
  };
  const Triple table[] = {
      {1, 2, 3, "1"},        {1, 4, 7, "1/2"},      {1, 5, 6, "-1/2"},
      {2, 4, 6, "1/2"},      {2, 5, 7, "1/2"},      {3, 4, 5, "1/2"},
      {3, 6, 7, "-1/2"},     {4, 5, 8, "1/2*sqrt3"}, {6, 7, 8, "1/2*sqrt3"},
  };
  for (const auto& t : table) {
    TrigScalar v = S(t.v);
    std::size_t a = t.a - 1, b = t.b - 1, c = t.c - 1;
    sc.set(a, b, c, v);
    sc.set(b, c, a, v);
    sc.set(c, a, b, v);
  }
  return sc;
}

StructureConstants make_ga() {
  StructureConstants sc(kMixedLabels);
  sc.set(0, 1, 3, S("-i*sin"));
  sc.set(0, 1, 2, S("-i*cos"));
  sc.set(0, 2, 0, S("i*cos"));
  sc.set(0, 3, 0, S("i*sin"));
  sc.set(1, 2, 1, S("-i*cos"));
  sc.set(1, 3, 1, S("-i*sin"));
  return sc;
}

Fixtures make_fixtures() {
  Fixtures f;
  f.su2xu1_constants = make_su2xu1();
  f.su3_constants = make_su3();
  f.u1_constants = StructureConstants({"T0"});
  f.ga_constants = make_ga();

  f.su2xu1_fundamental = Representation{
      kDirectLabels,
      {
          mat({{"0", "-1/2i", "0"}, {"-1/2i", "0", "0"}, {"0", "0", "0"}}),
          mat({{"0", "-1/2", "0"}, {"1/2", "0", "0"}, {"0", "0", "0"}}),
          mat({{"-1/2i", "0", "0"}, {"0", "1/2i", "0"}, {"0", "0", "0"}}),
          mat({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1/2i*sqrt2"}}),
      }};

  f.su2xu1_paper_adjoint = Representation{
      kDirectLabels,
      {
          mat({{"0", "0", "0", "0"},
               {"0", "0", "-1", "0"},
               {"0", "1", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"0", "0", "1", "0"},
               {"0", "0", "0", "0"},
               {"-1", "0", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"0", "-1", "0", "0"},
               {"1", "0", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"0", "0", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "i*sqrt2"}}),
      }};

  f.ga_adjoint = Representation{
      kMixedLabels,
      {
          mat({{"0", "0", "i*cos", "i*sin"},
               {"0", "0", "0", "0"},
               {"0", "-i*cos", "0", "0"},
               {"0", "-i*sin", "0", "0"}}),
          mat({{"0", "0", "0", "0"},
               {"0", "0", "-i*cos", "-i*sin"},
               {"i*cos", "0", "0", "0"},
               {"i*sin", "0", "0", "0"}}),
          mat({{"-i*cos", "0", "0", "0"},
               {"0", "i*cos", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"-i*sin", "0", "0", "0"},
               {"0", "i*sin", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "0"}}),
      }};

  f.ga_transformed_adjoint = Representation{
      kMixedLabels,
      {
          mat({{"0", "0", "1/2i*sqrt2", "0"},
               {"0", "0", "-1/2*sqrt2", "0"},
               {"-1/2i*sqrt2", "1/2*sqrt2", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"0", "0", "-1/2i*sqrt2", "0"},
               {"0", "0", "-1/2*sqrt2", "0"},
               {"1/2i*sqrt2", "1/2*sqrt2", "0", "0"},
               {"0", "0", "0", "0"}}),
          mat({{"0", "-cos", "0", "0"},
               {"cos", "0", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "-i*sqrt2*sin"}}),
          mat({{"0", "-sin", "0", "0"},
               {"sin", "0", "0", "0"},
               {"0", "0", "0", "0"},
               {"0", "0", "0", "i*sqrt2*cos"}}),
      }};

  // Keeps the off-diagonal (1,0) entries of the last two matrices, which the
  // transform of the diagonal generators cannot produce.
  f.ga_fundamental_paper = Representation{
      kMixedLabels,
      {
          mat({{"0", "-1/2i*sqrt2", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
          mat({{"0", "0", "0"}, {"-1/2i*sqrt2", "0", "0"}, {"0", "0", "0"}}),
          mat({{"-1/2i*cos", "0", "0"},
               {"1/2i", "1/2i*cos", "0"},
               {"0", "0", "-1/2i*sqrt2*sin"}}),
          mat({{"-1/2i*sin", "0", "0"},
               {"1/2i", "1/2i*sin", "0"},
               {"0", "0", "1/2i*sqrt2*cos"}}),
      }};

  f.glashow_transform = BasisTransform::from_matrix(mat({
      {"1/2*sqrt2", "1/2i*sqrt2", "0", "0"},
      {"1/2*sqrt2", "-1/2i*sqrt2", "0", "0"},
      {"0", "0", "cos", "-sin"},
      {"0", "0", "sin", "cos"},
  }));

  f.ga_fundamental_computed = transform_rep(f.su2xu1_fundamental, f.glashow_transform);
  f.ga_fundamental_computed.labels = kMixedLabels;

  f.standard_names = {{"X1", "W-"}, {"X2", "W+"}, {"X3", "Z"}, {"X0", "A"}};
  return f;
}

}  // namespace

const Fixtures& fixtures() {
  static const Fixtures f = make_fixtures();
  return f;
}

MixingReport check_mixing_constraints(const MixingCandidate& m) {
  MixingReport report;
  const TrigScalar one(1);
  report.constraints[0] = {"alpha*beta + gamma*delta = 0",
                           m.alpha * m.beta + m.gamma * m.delta, false};
  report.constraints[1] = {"alpha^2 + gamma^2 = 1",
                           m.alpha * m.alpha + m.gamma * m.gamma - one, false};
  report.constraints[2] = {"beta^2 + delta^2 = 1",
                           m.beta * m.beta + m.delta * m.delta - one, false};
  report.constraints[3] = {"alpha*delta - gamma*beta = 1",
                           m.alpha * m.delta - m.gamma * m.beta - one, false};
  report.pass = true;
  for (auto& c : report.constraints) {
    c.pass = c.residual.is_zero();
    report.pass = report.pass && c.pass;
  }
  return report;
}

const std::vector<CaseFamily>& case_families() {
  static const std::vector<CaseFamily> families = [] {
    const auto& f = fixtures();
    const TrigScalar c = TrigScalar::cos();
    const TrigScalar s = TrigScalar::sin();
    std::vector<CaseFamily> out;

    out.push_back(CaseFamily{
        1,
        "rotation by the mixing angle: alpha = delta = cos, beta = -gamma = sin",
        {CaseMember{{c, s, -s, c}, std::nullopt, f.ga_constants}}});

    out.push_back(CaseFamily{
        2,
        "sign pair without mixing: alpha = delta = +/-1, beta = gamma = 0",
        {CaseMember{{TrigScalar(1), {}, {}, TrigScalar(1)}, "0",
                    f.ga_constants.specialize(TrigScalar(1), {})},
         CaseMember{{TrigScalar(-1), {}, {}, TrigScalar(-1)}, "pi",
                    f.ga_constants.specialize(TrigScalar(-1), {})}}});

    out.push_back(CaseFamily{
        3,
        "quarter-turn swap: alpha = delta = 0, beta = -gamma = +/-1",
        {CaseMember{{{}, TrigScalar(1), TrigScalar(-1), {}}, "pi/2",
                    f.ga_constants.specialize({}, TrigScalar(1))},
         CaseMember{{{}, TrigScalar(-1), TrigScalar(1), {}}, "3pi/2",
                    f.ga_constants.specialize({}, TrigScalar(-1))}}});
    return out;
  }();
  return families;
}

namespace {

std::string normalize_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return c == '-' ? '_' : std::tolower(c); });
  return name;
}

}  // namespace

const StructureConstants* find_algebra_fixture(const std::string& name) {
  const auto& f = fixtures();
  std::string n = normalize_name(name);
  if (n == "su2xu1" || n == "su2xu1_constants") return &f.su2xu1_constants;
  if (n == "su3" || n == "su3_constants") return &f.su3_constants;
  if (n == "u1" || n == "u1_constants") return &f.u1_constants;
  if (n == "ga" || n == "ga_constants") return &f.ga_constants;
  return nullptr;
}

const Representation* find_rep_fixture(const std::string& name) {
  const auto& f = fixtures();
  std::string n = normalize_name(name);
  if (n == "su2xu1_fundamental") return &f.su2xu1_fundamental;
  if (n == "su2xu1_paper_adjoint") return &f.su2xu1_paper_adjoint;
  if (n == "ga_adjoint") return &f.ga_adjoint;
  if (n == "ga_transformed_adjoint") return &f.ga_transformed_adjoint;
  if (n == "ga_fundamental_paper") return &f.ga_fundamental_paper;
  if (n == "ga_fundamental_computed") return &f.ga_fundamental_computed;
  return nullptr;
}

std::vector<std::string> algebra_fixture_names() {
  return {"su2xu1_constants", "su3_constants", "u1_constants", "ga_constants"};
}

std::vector<std::string> rep_fixture_names() {
  return {"su2xu1_fundamental", "su2xu1_paper_adjoint",     "ga_adjoint",
          "ga_transformed_adjoint", "ga_fundamental_paper", "ga_fundamental_computed"};
}

}  // namespace liegauge
