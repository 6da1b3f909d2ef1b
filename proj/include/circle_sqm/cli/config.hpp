#pragma once

#include <optional>
#include <string>

#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/oscillator.hpp"

namespace circle_sqm::cli {

/// Raised for anything the user got wrong on the command line (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class SystemKind { Oscillator, Coulomb };
enum class OutputFormat { Json, Csv };

inline constexpr const char* kSchema = "circle-sqm/1";

struct RunConfig {
  std::string command;
  SystemKind system = SystemKind::Oscillator;
  double omega = 1.0;
  double mu = 1.0;
  double radius = 1.0;
  double k1 = 0.0;
  Branch branch = Branch::Plus;
  /// false lists every admissible branch in `spectrum`
  bool branch_given = false;
  int levels = 0;
  int n = 0;
  int samples = 0;
  std::string suite;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output;
  std::optional<double> spectrum_tolerance;
  std::optional<double> norm_tolerance;
  std::optional<int> grid;
};

inline std::string to_string(SystemKind s) { return s == SystemKind::Oscillator ? "oscillator" : "coulomb"; }

/// Library errors raised while building a system are configuration errors here.
template <typename F>
auto as_config_error(F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

inline OscillatorSystem make_oscillator(const RunConfig& c) {
  return as_config_error([&] { return OscillatorSystem(CircleGeometry(c.radius), c.omega, c.k1, c.branch); });
}

inline CoulombSystem make_coulomb(const RunConfig& c) {
  return as_config_error([&] { return CoulombSystem(CircleGeometry(c.radius), c.mu, c.k1, c.branch); });
}

}  // namespace circle_sqm::cli
