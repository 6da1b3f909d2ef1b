#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "circle_sqm/cli/config.hpp"
#include "circle_sqm/cli/output.hpp"
#include "circle_sqm/cli/suites.hpp"
#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/oscillator.hpp"

namespace circle_sqm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

namespace detail {

inline void write_parameters(JsonWriter& w, const RunConfig& c) {
  w.begin_object("parameters");
  if (c.system == SystemKind::Oscillator) {
    w.field("omega", c.omega);
  } else {
    w.field("mu", c.mu);
  }
  w.field("radius", c.radius).field("k1", c.k1);
  w.field("branch", c.branch_given ? std::string(to_string(c.branch)) : std::string("all"));
  w.end_object();
}

struct SpectrumRow {
  int n;
  Branch branch;
  std::optional<double> nu;
  std::optional<double> sigma;
  double energy;
};

inline std::vector<SpectrumRow> spectrum_rows(const RunConfig& c) {
  if (c.levels < 0) {
    throw ConfigError("--levels must be >= 0");
  }
  std::vector<SpectrumRow> rows;
  if (c.system == SystemKind::Oscillator) {
    const OscillatorSystem sys = make_oscillator(c);
    if (c.levels == 0) return rows;
    for (const auto& e : oscillator::spectrum(sys, c.levels - 1)) {
      if (!c.branch_given || e.branch == c.branch) rows.push_back({e.n, e.branch, {}, {}, e.energy});
    }
  } else {
    const CoulombSystem sys = make_coulomb(c);
    if (c.levels == 0) return rows;
    for (const auto& e : coulomb::spectrum(sys, c.levels - 1)) {
      if (!c.branch_given || e.branch == c.branch) rows.push_back({e.n, e.branch, e.nu, e.sigma, e.energy});
    }
  }
  return rows;
}

inline std::string optional_number(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace detail

/// Energy levels n = 0..levels-1 of every admissible branch (or only the
/// requested one), ascending in energy.
inline int cmd_spectrum(const RunConfig& c, std::ostream& out = std::cout) {
  const auto rows = detail::spectrum_rows(c);
  const std::string system = to_string(c.system);
  std::string text;
  if (c.format == OutputFormat::Csv) {
    text = csv_row({"system", "n", "branch", "nu", "sigma", "energy"});
    for (const auto& r : rows) {
      text += csv_row({system, std::to_string(r.n), std::string(to_string(r.branch)), detail::optional_number(r.nu),
                       detail::optional_number(r.sigma), format_double(r.energy)});
    }
  } else {
    JsonWriter w;
    w.begin_object().field("schema", kSchema).field("command", "spectrum").field("system", system);
    detail::write_parameters(w, c);
    w.field("levels", c.levels);
    w.begin_array("records");
    for (const auto& r : rows) {
      w.begin_object().field("system", system).field("n", r.n).field("branch", to_string(r.branch));
      if (r.nu) w.field("nu", *r.nu).field("sigma", *r.sigma);
      w.field("energy", r.energy).end_object();
    }
    w.end_array().end_object();
    text = w.str();
  }
  write_output(text, c.output, out);
  return kOk;
}

/// Psi_n at `samples` cell-centred points phi_i = a + (i + 1/2) h of the motion domain.
inline int cmd_wavefunction(const RunConfig& c, std::ostream& out = std::cout) {
  if (c.samples < 2) {
    throw ConfigError("--samples must be >= 2");
  }
  if (c.n < 0) {
    throw ConfigError("--n must be >= 0");
  }
  Interval domain{0.0, kPi};
  std::function<Complex(double)> psi;
  if (c.system == SystemKind::Oscillator) {
    const OscillatorSystem sys = make_oscillator(c);
    domain = sys.motion_domain();
    psi = [sys, n = c.n](double phi) { return Complex(oscillator::wavefunction(sys, n, phi), 0.0); };
  } else {
    const CoulombSystem sys = make_coulomb(c);
    psi = [sys, n = c.n](double phi) { return coulomb::wavefunction(sys, n, phi); };
  }
  const double h = domain.width() / c.samples;
  std::vector<std::array<double, 3>> rows;
  for (int i = 0; i < c.samples; ++i) {
    const double phi = domain.lower + (i + 0.5) * h;
    const Complex v = psi(phi);
    rows.push_back({phi, v.real(), v.imag()});
  }

  std::string text;
  if (c.format == OutputFormat::Csv) {
    text = csv_row({"phi", "re", "im"});
    for (const auto& r : rows) text += csv_row({format_double(r[0]), format_double(r[1]), format_double(r[2])});
  } else {
    JsonWriter w;
    w.begin_object().field("schema", kSchema).field("command", "wavefunction").field("system", to_string(c.system));
    detail::write_parameters(w, c);
    w.field("n", c.n).field("samples", c.samples);
    w.field("domain", std::vector<double>{domain.lower, domain.upper});
    w.begin_array("rows");
    for (const auto& r : rows) {
      w.begin_object().field("phi", r[0]).field("re", r[1]).field("im", r[2]).end_object();
    }
    w.end_array().end_object();
    text = w.str();
  }
  write_output(text, c.output, out);
  return kOk;
}

inline std::string reports_json(const std::string& suite, const std::vector<ValidationReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  JsonWriter w;
  w.begin_object().field("schema", kSchema).field("command", "validate").field("suite", suite);
  w.field("passed", failed == 0).field("report_count", reports.size()).field("failed_count", failed);
  w.begin_array("reports");
  for (const auto& r : reports) {
    w.begin_object().field("case_id", r.case_id).field("criterion", numerics::to_string(r.criterion));
    w.field("passed", r.passed).field("tolerance", r.tolerance).field("max_rel_err", r.max_rel_err());
    if (r.convergence_rate) {
      w.field("convergence_rate", *r.convergence_rate);
    } else {
      w.null_field("convergence_rate");
    }
    w.field("details", r.details);
    w.field("analytic", r.analytic).field("numeric", r.numeric).field("abs_err", r.abs_err).field("rel_err", r.rel_err);
    w.end_object();
  }
  w.end_array().end_object();
  return w.str();
}

inline std::string reports_csv(const std::vector<ValidationReport>& reports) {
  std::string text = csv_row(
      {"case_id", "criterion", "index", "analytic", "numeric", "abs_err", "rel_err", "tolerance", "convergence_rate",
       "passed"});
  for (const auto& r : reports) {
    const std::string rate = r.convergence_rate ? format_double(*r.convergence_rate) : std::string();
    for (std::size_t i = 0; i < r.analytic.size(); ++i) {
      text += csv_row({r.case_id, numerics::to_string(r.criterion), std::to_string(i), format_double(r.analytic[i]),
                       format_double(r.numeric[i]), format_double(r.abs_err[i]), format_double(r.rel_err[i]),
                       format_double(r.tolerance), rate, r.passed ? "true" : "false"});
    }
  }
  return text;
}

/// Runs a suite; exit 0 iff every report passed. Failed case ids go to `log`.
inline int cmd_validate(const RunConfig& c, std::ostream& out = std::cout, std::ostream& log = std::cerr) {
  if (c.grid && *c.grid < 16) {
    throw ConfigError("--grid must be >= 16");
  }
  for (const auto& t : {c.spectrum_tolerance, c.norm_tolerance}) {
    if (t && !(*t > 0.0)) throw ConfigError("tolerances must be > 0");
  }
  const SuiteOptions opt{c.grid, c.spectrum_tolerance, c.norm_tolerance};
  const auto reports = run_tasks(suite_tasks(c.suite, opt), thread_cap());
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passed) {
      ok = false;
      log << "FAILED " << r.case_id << " max_rel_err=" << format_double(r.max_rel_err())
          << " tolerance=" << format_double(r.tolerance) << "\n";
    }
  }
  write_output(c.format == OutputFormat::Csv ? reports_csv(reports) : reports_json(c.suite, reports), c.output, out);
  return ok ? kOk : kCheckFailed;
}

}  // namespace circle_sqm::cli
