#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liegauge/trig_scalar.hpp"

namespace liegauge::cli {

enum class Status { pass, fail, info };

struct Check {
  std::string name;
  Status status = Status::info;
  std::string detail;
};

struct Report {
  std::string command;
  std::string payload;  // rendered before the check lines
  std::vector<Check> checks;

  void add(std::string name, Status status, std::string detail = "");
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
};

enum class ColorMode { automatic, always, never };

ColorMode color_mode_from_env();
void render(const Report& report, std::ostream& os, ColorMode mode);

// "symbolic" -> nullopt. Otherwise a rational multiple of pi whose reduced
// denominator divides 4 or 6, e.g. "0", "pi", "-pi/2", "3pi/4", "5pi/6";
// returns the exact (cos, sin). Other angles are an Error.
std::optional<std::pair<TrigScalar, TrigScalar>> parse_theta(const std::string& text);

struct VerifyOptions {
  std::string algebra;
  std::vector<std::string> reps;
  std::string theta = "symbolic";
};
Report cmd_verify(const VerifyOptions& opt);

Report cmd_killing(const std::string& algebra);

struct LagrangianOptions {
  std::string algebra;
  std::string trace_rep;
  std::string names = "standard";  // standard | identity
  std::string format = "text";     // text | latex | json
  std::string golden;              // optional golden TensorPoly file
  bool force = false;              // expand even if the trace rep fails rep_check
};
Report cmd_lagrangian(const LagrangianOptions& opt);

struct TransformOptions {
  std::string algebra;
  std::string matrix_file;
  std::string out_file;  // optional
};
Report cmd_transform(const TransformOptions& opt);

struct MixingOptions {
  std::vector<std::string> scalars;  // exactly four unless enumerate
  bool enumerate = false;
};
Report cmd_mixing(const MixingOptions& opt);

}  // namespace liegauge::cli
