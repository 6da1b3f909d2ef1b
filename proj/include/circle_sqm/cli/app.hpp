#pragma once

// Command-line parsing. Kept in a header so tests can drive the whole CLI
// in-process.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circle_sqm/cli/commands.hpp"
#include "circle_sqm/cli/config.hpp"

namespace circle_sqm::cli {

namespace detail {

inline void add_system_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--system", c.system, "oscillator or coulomb")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SystemKind>{{"oscillator", SystemKind::Oscillator}, {"coulomb", SystemKind::Coulomb}}));
  sub->add_option("--omega", c.omega, "oscillator frequency (default 1)");
  sub->add_option("--mu", c.mu, "Coulomb coupling (default 1)");
  sub->add_option("--radius", c.radius, "circle radius R (default 1)");
  sub->add_option("--k1", c.k1, "strength of the 1/sin^2 term")->required();
  sub->add_option_function<std::string>(
         "--branch", [&c](const std::string& b) {
           c.branch = b == "minus" ? Branch::Minus : Branch::Plus;
           c.branch_given = true;
         },
         "plus (default) or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
}

inline void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json or csv")
      ->transform(
          CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}}));
  sub->add_option("--output,-o", c.output, "output file (default stdout)");
}

}  // namespace detail

/// Parses argv and runs the command. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Closed-form spectra, wavefunctions and numerical cross-checks for the singular oscillator and "
               "Coulomb systems on a circle"};
  app.require_subcommand(1);
  RunConfig c;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels, sorted by energy");
  detail::add_system_options(spectrum, c);
  spectrum->add_option("--levels", c.levels, "levels n = 0..L-1 per branch")->required();
  detail::add_output_options(spectrum, c);

  auto* wave = app.add_subcommand("wavefunction", "sample Psi_n on the interior of the motion domain");
  detail::add_system_options(wave, c);
  wave->add_option("--n", c.n, "quantum number")->required();
  wave->add_option("--samples", c.samples, "number of sample points (>= 2)")->required();
  detail::add_output_options(wave, c);

  auto* validate = app.add_subcommand("validate", "run a validation suite");
  validate->add_option("--suite", c.suite, "specfun, oscillator-fd, coulomb-fd, norms, contraction or all")->required();
  validate->add_option("--grid", c.grid, "coarse FD grid N (fine grid is 2N)");
  validate->add_option("--spectrum-tol", c.spectrum_tolerance, "relative tolerance for FD spectra");
  validate->add_option("--norm-tol", c.norm_tolerance, "tolerance for quadrature norms");
  detail::add_output_options(validate, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "spectrum") return cmd_spectrum(c, out);
    if (c.command == "wavefunction") return cmd_wavefunction(c, out);
    return cmd_validate(c, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace circle_sqm::cli
