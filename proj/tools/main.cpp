#include <CLI11.hpp>

#include <iostream>

#include "liegauge/commands.hpp"
#include "liegauge/error.hpp"

int main(int argc, char** argv) {
  using namespace liegauge;

  CLI::App app{"exact symbolic checks for Lie algebras with trigonometric structure constants"};
  app.require_subcommand(1);

  cli::VerifyOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "antisymmetry, Jacobi, and representation checks");
  verify->add_option("--algebra", vopt.algebra, "fixture name or algebra JSON file")->required();
  verify->add_option("--rep", vopt.reps, "representation fixture name or JSON file (repeatable)");
  verify->add_option("--theta", vopt.theta,
                     "'symbolic' (default) or an exact angle: 0, pi, pi/2, 3pi/4, 5pi/6, ...");

  std::string killing_algebra;
  CLI::App* killing = app.add_subcommand("killing", "Killing form, determinant, semisimplicity");
  killing->add_option("--algebra", killing_algebra, "fixture name or algebra JSON file")
      ->required();

  cli::LagrangianOptions lopt;
  CLI::App* lagr = app.add_subcommand("lagrangian", "expand -1/(8g^2) F.F into a vertex table");
  lagr->add_option("--algebra", lopt.algebra, "fixture name or algebra JSON file")->required();
  lagr->add_option("--trace-rep", lopt.trace_rep,
                   "representation supplying t_ab = tr(rho_a rho_b)")
      ->required();
  lagr->add_option("--names", lopt.names, "field naming: standard (W-,W+,Z,A) or identity");
  lagr->add_option("--format", lopt.format, "payload format: text, latex, or json");
  lagr->add_option("--golden", lopt.golden, "compare the expansion against this polynomial file");
  lagr->add_flag("--force", lopt.force, "expand even if the trace rep fails rep_check");

  cli::TransformOptions topt;
  CLI::App* transform = app.add_subcommand("transform", "apply a basis change to an algebra");
  transform->add_option("--algebra", topt.algebra, "fixture name or algebra JSON file")
      ->required();
  transform->add_option("--matrix", topt.matrix_file, "basis matrix JSON file")->required();
  transform->add_option("--out", topt.out_file, "write the transformed algebra here");

  cli::MixingOptions mopt;
  CLI::App* mixing =
      app.add_subcommand("mixing", "check four coefficients against the mixing constraints");
  mixing->add_flag("--enumerate", mopt.enumerate, "print the three solution families");
  // The four scalars arrive as raw extras so that values like "-sin" are not
  // eaten by flag parsing.
  mixing->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::Report report;
    if (verify->parsed()) {
      report = cli::cmd_verify(vopt);
    } else if (killing->parsed()) {
      report = cli::cmd_killing(killing_algebra);
    } else if (lagr->parsed()) {
      report = cli::cmd_lagrangian(lopt);
    } else if (transform->parsed()) {
      report = cli::cmd_transform(topt);
    } else {
      mopt.scalars = mixing->remaining();
      report = cli::cmd_mixing(mopt);
    }
    cli::render(report, std::cout, cli::color_mode_from_env());
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
