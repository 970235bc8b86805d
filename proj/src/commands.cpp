#include "liegauge/commands.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "liegauge/catalog.hpp"
#include "liegauge/json_io.hpp"

namespace liegauge::cli {

void Report::add(std::string name, Status status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

ColorMode color_mode_from_env() {
  const char* v = std::getenv("LIEGAUGE_COLOR");
  if (!v) return ColorMode::automatic;
  std::string s = v;
  if (s == "always") return ColorMode::always;
  if (s == "never") return ColorMode::never;
  return ColorMode::automatic;
}

void render(const Report& report, std::ostream& os, ColorMode mode) {
  bool color = mode == ColorMode::always ||
               (mode == ColorMode::automatic && isatty(STDOUT_FILENO));
  if (!report.payload.empty()) {
    os << report.payload;
    if (!report.payload.ends_with('\n')) os << "\n";
  }
  int fails = 0;
  for (const auto& c : report.checks) {
    std::string tag;
    switch (c.status) {
      case Status::pass: tag = color ? "\033[32mPASS\033[0m" : "PASS"; break;
      case Status::fail:
        tag = color ? "\033[31mFAIL\033[0m" : "FAIL";
        ++fails;
        break;
      case Status::info: tag = color ? "\033[36minfo\033[0m" : "info"; break;
    }
    os << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << report.command << ": " << (fails ? "FAIL" : "OK") << " (" << report.checks.size()
     << " checks";
  if (fails) os << ", " << fails << " failed";
  os << ")\n";
}

namespace {

StructureConstants resolve_algebra(const std::string& name) {
  if (const StructureConstants* sc = find_algebra_fixture(name)) return *sc;
  if (std::filesystem::exists(name)) return algebra_from_json(load_json_file(name));
  std::string known;
  for (const auto& n : algebra_fixture_names()) known += " " + n;
  throw Error("unknown algebra '" + name + "'; expected a file or one of:" + known);
}

Representation resolve_rep(const std::string& name) {
  if (const Representation* rep = find_rep_fixture(name)) return *rep;
  if (std::filesystem::exists(name)) return rep_from_json(load_json_file(name));
  std::string known;
  for (const auto& n : rep_fixture_names()) known += " " + n;
  throw Error("unknown representation '" + name + "'; expected a file or one of:" + known);
}

std::string matrix_lines(const TrigMatrix& m, const std::string& indent) {
  // column-aligned text rows of scalar strings
  std::vector<std::size_t> width(m.size(), 0);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t r = 0; r < m.size(); ++r)
      width[c] = std::max(width[c], m(r, c).str().size());
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += indent + "[ ";
    for (std::size_t c = 0; c < m.size(); ++c) {
      std::string cell = m(r, c).str();
      if (c) out += ", ";
      out += std::string(width[c] - cell.size(), ' ') + cell;
    }
    out += " ]\n";
  }
  return out;
}

std::string candidate_str(const MixingCandidate& m) {
  return "(" + m.alpha.str() + ", " + m.beta.str() + ", " + m.gamma.str() + ", " +
         m.delta.str() + ")";
}

}  // namespace

std::optional<std::pair<TrigScalar, TrigScalar>> parse_theta(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  long k = -1;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    k = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      k = k * 10 + (text[pos++] - '0');
  }
  bool has_pi = text.compare(pos, 2, "pi") == 0;
  if (has_pi) pos += 2;
  long n = 1;
  if (has_pi && pos < text.size() && text[pos] == '/') {
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw Error("theta '" + text + "': expected digits after '/'");
    n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      n = n * 10 + (text[pos++] - '0');
    if (n == 0) throw Error("theta '" + text + "': zero denominator");
  }
  if (pos != text.size()) throw Error("theta '" + text + "': trailing characters");
  if (!has_pi) {
    if (k == 0) return std::make_pair(TrigScalar(1), TrigScalar());
    throw Error("theta '" + text + "': only 0 and rational multiples of pi are exact; "
                "use 'symbolic' (numeric work can evaluate scalars at any angle)");
  }
  if (k == -1) k = 1;
  long g = std::gcd(k, n);
  if (g) {
    k /= g;
    n /= g;
  }
  if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6)
    throw Error("theta '" + text + "': cos and sin of pi/" + std::to_string(n) +
                " are not representable with {sqrt2, sqrt3}; use 'symbolic' "
                "(numeric work can evaluate scalars at any angle)");
  long r = k % (2 * n);
  if (neg) r = -r;
  r = (r % (2 * n) + 2 * n) % (2 * n);

  static const char* cos1[] = {"1", "-1"};
  static const char* sin1[] = {"0", "0"};
  static const char* cos2[] = {"1", "0", "-1", "0"};
  static const char* sin2[] = {"0", "1", "0", "-1"};
  static const char* cos3[] = {"1", "1/2", "-1/2", "-1", "-1/2", "1/2"};
  static const char* sin3[] = {"0", "1/2*sqrt3", "1/2*sqrt3", "0", "-1/2*sqrt3", "-1/2*sqrt3"};
  static const char* cos4[] = {"1", "1/2*sqrt2", "0", "-1/2*sqrt2",
                               "-1", "-1/2*sqrt2", "0", "1/2*sqrt2"};
  static const char* sin4[] = {"0", "1/2*sqrt2", "1", "1/2*sqrt2",
                               "0", "-1/2*sqrt2", "-1", "-1/2*sqrt2"};
  static const char* cos6[] = {"1", "1/2*sqrt3", "1/2", "0", "-1/2", "-1/2*sqrt3",
                               "-1", "-1/2*sqrt3", "-1/2", "0", "1/2", "1/2*sqrt3"};
  static const char* sin6[] = {"0", "1/2", "1/2*sqrt3", "1", "1/2*sqrt3", "1/2",
                               "0", "-1/2", "-1/2*sqrt3", "-1", "-1/2*sqrt3", "-1/2"};
  const char** cos_tab = n == 1 ? cos1 : n == 2 ? cos2 : n == 3 ? cos3 : n == 4 ? cos4 : cos6;
  const char** sin_tab = n == 1 ? sin1 : n == 2 ? sin2 : n == 3 ? sin3 : n == 4 ? sin4 : sin6;
  return std::make_pair(TrigScalar::parse(cos_tab[r]), TrigScalar::parse(sin_tab[r]));
}

Report cmd_verify(const VerifyOptions& opt) {
  Report report;
  report.command = "verify";
  StructureConstants sc = resolve_algebra(opt.algebra);
  auto theta = parse_theta(opt.theta);
  if (theta) {
    sc = sc.specialize(theta->first, theta->second);
    report.add("theta", Status::info,
               "specialized at " + opt.theta + ": cos = " + theta->first.str() +
                   ", sin = " + theta->second.str());
    for (const auto& family : case_families())
      for (const auto& member : family.members)
        if (member.theta && member.algebra == sc)
          report.add("case coincidence", Status::info,
                     "constants equal the case-" + std::to_string(family.id) +
                         " table at theta = " + *member.theta);
  }
  report.add("antisymmetry", Status::pass,
             "storage keeps f^c_{ab} for a < b only; the symmetric part is unrepresentable");
  JacobiReport jac = jacobi_check(sc);
  if (jac.pass) {
    report.add("jacobi", Status::pass, "all cyclic sums vanish in normal form");
  } else {
    const auto& v = jac.violations.front();
    report.add("jacobi", Status::fail,
               std::to_string(jac.violations.size()) + " violations; first at (a,b,c,l) = (" +
                   std::to_string(v.a) + "," + std::to_string(v.b) + "," + std::to_string(v.c) +
                   "," + std::to_string(v.l) + "), residual = " + v.residual.str());
  }
  std::vector<std::pair<std::string, Representation>> reps;
  for (const auto& name : opt.reps) {
    Representation rep = resolve_rep(name);
    if (theta) rep = rep.specialize(theta->first, theta->second);
    RepReport rc = rep_check(sc, rep);
    if (rc.pass) {
      report.add("rep_check(" + name + ")", Status::pass,
                 "[rho_a, rho_b] = f^c_{ab} rho_c for all pairs");
    } else {
      const auto& v = rc.violations.front();
      report.add("rep_check(" + name + ")", Status::fail,
                 std::to_string(rc.violations.size()) + " failing pairs; first (a,b) = (" +
                     std::to_string(v.a) + "," + std::to_string(v.b) + ")");
    }
    reps.emplace_back(name, std::move(rep));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      RepComparison cmp = reps_equal(reps[i].second, reps[j].second);
      report.add("compare(" + reps[i].first + ", " + reps[j].first + ")", Status::info,
                 cmp.equal ? "identical entrywise"
                           : "representations differ entrywise (" + cmp.reason + ")");
    }
  return report;
}

Report cmd_killing(const std::string& algebra) {
  Report report;
  report.command = "killing";
  StructureConstants sc = resolve_algebra(algebra);
  KillingForm kf = killing_form(sc);
  report.payload = "g_ab =\n" + matrix_lines(kf.matrix, "  ");
  report.add("determinant", Status::info, kf.det.str());
  report.add("semisimplicity", Status::info,
             kf.semisimple() ? "semisimple (Killing form nondegenerate)"
                             : "non-semisimple (Killing determinant is zero)");
  return report;
}

Report cmd_lagrangian(const LagrangianOptions& opt) {
  Report report;
  report.command = "lagrangian";
  StructureConstants sc = resolve_algebra(opt.algebra);
  Representation rep = resolve_rep(opt.trace_rep);

  RepReport rc = rep_check(sc, rep);
  if (rc.pass) {
    report.add("rep_check(" + opt.trace_rep + ")", Status::pass, "valid trace source");
  } else {
    report.add("rep_check(" + opt.trace_rep + ")", Status::fail,
               "trace source is not a representation of the algebra" +
                   std::string(opt.force ? " (expanding anyway: --force)" : ""));
    if (!opt.force) {
      report.add("expansion", Status::info, "skipped; pass --force to expand anyway");
      return report;
    }
  }

  std::size_t n = sc.dim();
  if (rep.dim() != n) throw DimensionError("trace representation dimension mismatch");
  TrigMatrix traces(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) traces(a, b) = trace(rep.matrices[a] * rep.matrices[b]);

  std::map<std::string, std::string> names;
  if (opt.names == "standard") names = fixtures().standard_names;
  else if (opt.names != "identity")
    throw Error("unknown --names mode '" + opt.names + "' (standard|identity)");

  FieldStrengthSet fs = field_strength(sc, names);
  TensorPoly L = lagrangian(fs, traces, {TrigScalar(GaussRational(Rational(1, 8))), -2});

  auto groups = vertex_table(L);
  int kinetic = 0, cubic = 0, quartic = 0, other = 0;
  for (const auto& g : groups) {
    if (g.kind == "kinetic") ++kinetic;
    else if (g.kind == "cubic") ++cubic;
    else if (g.kind == "quartic") ++quartic;
    else ++other;
  }
  report.add("expansion", Status::pass,
             std::to_string(L.size()) + " canonical terms; groups: kinetic=" +
                 std::to_string(kinetic) + " cubic=" + std::to_string(cubic) +
                 " quartic=" + std::to_string(quartic) + " other=" + std::to_string(other));

  // Kinetic mixing: a cross kinetic group {X,Y} whose fields both own diagonal
  // kinetic terms signals an unphysical derivative coupling (the charged pair
  // has no diagonal terms, so it never trips this).
  std::set<std::string> diagonal;
  for (const auto& g : groups)
    if (g.kind == "kinetic" && g.fields[0] == g.fields[1]) diagonal.insert(g.fields[0]);
  std::string mixed;
  for (const auto& g : groups)
    if (g.kind == "kinetic" && g.fields[0] != g.fields[1] && diagonal.count(g.fields[0]) &&
        diagonal.count(g.fields[1])) {
      if (!mixed.empty()) mixed += ", ";
      mixed += "{" + g.fields[0] + ", " + g.fields[1] + "}";
    }
  if (mixed.empty())
    report.add("kinetic mixing", Status::pass, "no derivative coupling between diagonal sectors");
  else
    report.add("kinetic mixing", Status::fail,
               "derivative coupling between diagonal sectors: " + mixed +
                   "; no such vertex in the physical theory");

  if (!opt.golden.empty()) {
    TensorPoly golden = poly_from_json(load_json_file(opt.golden));
    PolyDiff diff = poly_equal(L, golden);
    if (diff.equal) {
      report.add("golden", Status::pass,
                 "expansion matches '" + opt.golden + "' (" + std::to_string(L.size()) +
                     " terms)");
    } else {
      std::string detail = std::to_string(diff.only_left.size()) + " terms only computed, " +
                           std::to_string(diff.only_right.size()) + " only golden;";
      for (std::size_t i = 0; i < diff.only_left.size() && i < 3; ++i)
        detail += " computed: " + to_text(diff.only_left[i]) + ";";
      for (std::size_t i = 0; i < diff.only_right.size() && i < 3; ++i)
        detail += " golden: " + to_text(diff.only_right[i]) + ";";
      report.add("golden", Status::fail, detail);
    }
  }

  if (opt.format == "latex") {
    report.payload = "L = " + to_latex(L) + "\n";
  } else if (opt.format == "json") {
    report.payload = poly_to_json(L).dump(2) + "\n";
  } else if (opt.format == "text") {
    std::string out;
    for (const auto& g : groups) {
      out += "# " + g.kind + " |";
      for (const auto& f : g.fields) out += " " + f;
      out += " | derivatives: " + std::to_string(g.derivative_count) + "\n";
      for (const auto& t : g.terms) out += "  " + to_text(t) + "\n";
    }
    report.payload = std::move(out);
  } else {
    throw Error("unknown --format '" + opt.format + "' (text|latex|json)");
  }
  return report;
}

Report cmd_transform(const TransformOptions& opt) {
  Report report;
  report.command = "transform";
  StructureConstants sc = resolve_algebra(opt.algebra);
  TrigMatrix m = matrix_from_json(load_json_file(opt.matrix_file));
  BasisTransform t = BasisTransform::from_matrix(std::move(m));
  StructureConstants out = transform_constants(sc, t);

  std::string summary;
  std::size_t changed = 0;
  auto keys = [](const StructureConstants& s) {
    std::set<StructureConstants::Key> k;
    for (const auto& [key, v] : s.entries()) k.insert(key);
    return k;
  };
  std::set<StructureConstants::Key> all = keys(sc);
  std::set<StructureConstants::Key> outk = keys(out);
  all.insert(outk.begin(), outk.end());
  for (const auto& [a, b, c] : all) {
    TrigScalar before = sc.get(a, b, c);
    TrigScalar after = out.get(a, b, c);
    if (before == after) continue;
    ++changed;
    summary += "  f^" + sc.labels()[c] + "_{" + sc.labels()[a] + "," + sc.labels()[b] +
               "}: " + before.str() + "  ->  " + after.str() + "\n";
  }
  if (changed) report.payload = "changed entries:\n" + summary;
  report.add("transform", Status::pass,
             std::to_string(changed) + " canonical entries changed, " +
                 std::to_string(out.entries().size()) + " stored in the result");
  if (!opt.out_file.empty()) {
    save_json_file(opt.out_file, algebra_to_json(out));
    report.add("output", Status::info, "wrote " + opt.out_file);
  }
  return report;
}

Report cmd_mixing(const MixingOptions& opt) {
  Report report;
  report.command = "mixing";
  if (opt.enumerate) {
    std::string out;
    bool all_pass = true;
    for (const auto& family : case_families()) {
      out += "case " + std::to_string(family.id) + ": " + family.description + "\n";
      for (const auto& member : family.members) {
        out += "  (alpha, beta, gamma, delta) = " + candidate_str(member.candidate);
        if (member.theta) out += "   [theta = " + *member.theta + "]";
        out += "\n";
        all_pass = all_pass && check_mixing_constraints(member.candidate).pass;
      }
    }
    report.payload = std::move(out);
    report.add("families", all_pass ? Status::pass : Status::fail,
               "3 families; every member satisfies the four constraints");
    return report;
  }
  if (opt.scalars.size() != 4)
    throw Error("mixing expects exactly four scalars (alpha beta gamma delta) or --enumerate");
  MixingCandidate cand{TrigScalar::parse(opt.scalars[0]), TrigScalar::parse(opt.scalars[1]),
                       TrigScalar::parse(opt.scalars[2]), TrigScalar::parse(opt.scalars[3])};
  MixingReport mix = check_mixing_constraints(cand);
  report.payload = "candidate " + candidate_str(cand) + "\n";
  for (const auto& c : mix.constraints)
    report.add(c.name, c.pass ? Status::pass : Status::fail,
               c.pass ? "" : "residual = " + c.residual.str());
  return report;
}

}  // namespace liegauge::cli
