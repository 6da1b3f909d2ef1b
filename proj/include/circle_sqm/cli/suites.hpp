#pragma once

// Named validation suites for the `validate` command. Each suite is a list of
// independent tasks; tasks may run concurrently and their reports are merged
// in case_id order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "circle_sqm/cli/config.hpp"
#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/numerics/contraction.hpp"
#include "circle_sqm/numerics/validation.hpp"
#include "circle_sqm/oracles/rational_hypergeometric.hpp"
#include "circle_sqm/oscillator.hpp"
#include "circle_sqm/specfun.hpp"

namespace circle_sqm::cli {

using numerics::ValidationReport;
using Task = std::function<std::vector<ValidationReport>()>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"specfun", "oscillator-fd", "coulomb-fd", "norms", "contraction", "all"};
  return names;
}

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits; same sequence on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Complex in_unit_disc(std::mt19937_64& rng) {
  const double r = std::sqrt(unit(rng));
  const double t = 2.0 * kPi * unit(rng);
  return std::polar(r, t);
}

inline std::vector<ValidationReport> specfun_gamma() {
  std::vector<double> sig;
  std::vector<double> identity;
  for (int i = 0; i < 100; ++i) {
    const double s = std::pow(10.0, -3.0 + 4.0 * i / 99.0);
    const double g = gamma_abs({1.0, s});
    sig.push_back(s);
    identity.push_back(g * g * std::sinh(kPi * s) / (kPi * s));
  }
  ValidationReport id = numerics::make_report("specfun/gamma-modulus-identity", std::vector<double>(100, 1.0),
                                              identity, 1e-12);
  id.details = "|Gamma(1+i s)|^2 sinh(pi s)/(pi s), 100 log-spaced s in [1e-3, 10]";

  std::vector<double> recur;
  for (int a = -7; a <= 7; ++a) {
    for (int b = -4; b <= 4; ++b) {
      const Complex z{0.5 * a + 0.13, 0.75 * b};
      const Complex ratio = std::exp(ln_gamma_complex(z + 1.0) - ln_gamma_complex(z)) / z;
      recur.push_back(std::abs(ratio - 1.0));
    }
  }
  ValidationReport rec = numerics::make_report("specfun/gamma-recurrence", std::vector<double>(recur.size(), 0.0),
                                               recur, 1e-12);
  rec.details = "|Gamma(z+1)/(z Gamma(z)) - 1| on a 15 x 9 complex grid";

  std::vector<double> special{ln_gamma_complex(1.0).real(), ln_gamma_complex(5.0).real(), gamma_abs({1.0, 1.0}),
                              gamma_abs({1.0, 2.0}), gamma_abs(0.25)};
  std::vector<double> expect{0.0, std::log(24.0), std::sqrt(kPi / std::sinh(kPi)),
                             std::sqrt(2.0 * kPi / std::sinh(2.0 * kPi)), std::tgamma(0.25)};
  ValidationReport ex = numerics::make_report("specfun/gamma-values", expect, special, 1e-13);
  ex.details = "ln Gamma(1), ln Gamma(5), |Gamma(1+i)|, |Gamma(1+2i)|, Gamma(1/4) vs libm tgamma";
  return {id, rec, ex};
}

inline std::vector<ValidationReport> specfun_hypergeometric() {
  std::mt19937_64 rng(20240601);
  std::vector<double> dev2;
  std::vector<double> dev1;
  for (int n = 0; n <= 30; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const Complex b = in_unit_disc(rng);
      const Complex c = in_unit_disc(rng);
      const Complex x = in_unit_disc(rng);
      dev2.push_back(oracles::hyp2f1_deviation(n, b, c, x, hyp2f1_terminating(n, b, c, x)));
      dev1.push_back(oracles::hyp1f1_deviation(n, c, x, hyp1f1_terminating(n, c, x)));
    }
  }
  ValidationReport h2 = numerics::make_report("specfun/hyp2f1-direct-sum", std::vector<double>(dev2.size(), 0.0),
                                              dev2, 1e-12);
  h2.details = "relative deviation from the exact rational Pochhammer sum; n<=30, b, c, x in the unit disc";
  ValidationReport h1 = numerics::make_report("specfun/hyp1f1-direct-sum", std::vector<double>(dev1.size(), 0.0),
                                              dev1, 1e-12);
  h1.details = h2.details;

  std::vector<double> binom_want;
  std::vector<double> binom_got;
  for (int n = 0; n <= 12; ++n) {
    const double x = 0.25;
    binom_want.push_back(std::pow(1.0 - x, n));
    binom_got.push_back(hyp2f1_terminating(n, 0.7, 0.7, x).real());
  }
  ValidationReport bi = numerics::make_report("specfun/hyp2f1-binomial", binom_want, binom_got, 1e-13);
  bi.details = "2F1(-n, b; b; x) = (1-x)^n, b = 0.7, x = 1/4";
  return {h2, h1, bi};
}

struct CoulombFamily {
  double k1;
  Branch branch;
  const char* label;
};

inline const std::vector<CoulombFamily>& nu_families() {
  static const std::vector<CoulombFamily> f{
      {0.5, Branch::Minus, "nu=0.25"}, {0.5, Branch::Plus, "nu=0.75"}, {1.0, Branch::Plus, "nu=1"}};
  return f;
}

}  // namespace detail

struct SuiteOptions {
  std::optional<int> grid;
  std::optional<double> spectrum_tolerance;
  std::optional<double> norm_tolerance;
};

inline numerics::GridSchedule schedule_for(const numerics::SystemDescriptor& sys, const SuiteOptions& o) {
  if (o.grid) return {*o.grid, 2 * *o.grid};
  return numerics::default_schedule(sys);
}

inline numerics::ValidationTolerances tolerances(const SuiteOptions& o, double spectrum_default) {
  numerics::ValidationTolerances t;
  t.spectrum = o.spectrum_tolerance.value_or(spectrum_default);
  if (o.norm_tolerance) t.norm = *o.norm_tolerance;
  return t;
}

inline std::vector<Task> suite_tasks(const std::string& suite, const SuiteOptions& opt = {}) {
  std::vector<Task> tasks;
  const bool all = suite == "all";
  if (all || suite == "specfun") {
    tasks.emplace_back([] { return detail::specfun_gamma(); });
    tasks.emplace_back([] { return detail::specfun_hypergeometric(); });
  }
  if (all || suite == "oscillator-fd") {
    for (double k1 : {1.5, 0.5}) {
      tasks.emplace_back([k1, opt] {
        const OscillatorSystem sys(CircleGeometry(1.0), 1.0, k1, Branch::Plus);
        const int n_max = k1 == 0.5 ? 5 : 4;
        return numerics::validate_system(sys, n_max, schedule_for(sys, opt), tolerances(opt, 1e-5),
                                         fmt::format("oscillator/omega=1/R=1/k1={}", k1));
      });
    }
  }
  if (all || suite == "coulomb-fd") {
    for (double k1 : {1.0, 0.5}) {
      tasks.emplace_back([k1, opt] {
        const CoulombSystem sys(CircleGeometry(1.0), 1.0, k1, Branch::Plus);
        const int n_max = k1 == 1.0 ? 3 : 5;
        return numerics::validate_system(sys, n_max, schedule_for(sys, opt), tolerances(opt, 1e-4),
                                         fmt::format("coulomb/mu=1/R=1/k1={}", k1));
      });
    }
  }
  if (all || suite == "norms") {
    for (const auto& fam : detail::nu_families()) {
      for (double mu_r : {0.5, 1.0, 2.0}) {
        tasks.emplace_back([fam, mu_r, opt] {
          const CoulombSystem sys(CircleGeometry(1.0), mu_r, fam.k1, fam.branch);
          const double tol = opt.norm_tolerance.value_or(1e-8);
          std::vector<double> re, im, c_sigma, c_general;
          for (int n = 0; n <= 5; ++n) {
            const Complex v = numerics::coulomb_diamond_overlap(sys, n, n);
            re.push_back(v.real());
            im.push_back(v.imag());
            const CoulombQuantumNumbers q = coulomb::quantize(sys, n);
            c_sigma.push_back(coulomb::norm_constant_sigma(n, q.nu, q.sigma, sys.radius()));
            c_general.push_back(std::pow(2.0, q.nu) *
                                std::abs(coulomb::norm_constant_general(n, q.k0, sys.k1(), sys.radius(), fam.branch)));
          }
          const std::string id = fmt::format("norms/coulomb/{}/muR={}", fam.label, mu_r);
          ValidationReport a = numerics::make_report(id + "/diamond", std::vector<double>(6, 0.5), re, tol);
          a.details = "R int_0^pi Psi Psi^diamond dphi, n = 0..5";
          ValidationReport b = numerics::make_report(id + "/diamond-imag", std::vector<double>(6, 0.0), im, tol);
          ValidationReport c = numerics::make_report(id + "/norm-consistency", c_sigma, c_general, 1e-10);
          c.details = "numeric = 2^nu |C_general|";
          return std::vector<ValidationReport>{a, b, c};
        });
      }
    }
    const std::vector<std::pair<double, double>> osc{{1.0, 1.5}, {1.0, 0.5}, {2.0, 0.25}, {0.5, 0.75}};
    for (auto [omega, k1] : osc) {
      tasks.emplace_back([omega, k1, opt] {
        const double tol = opt.norm_tolerance.value_or(1e-8);
        std::vector<ValidationReport> out;
        for (Branch b : numerics::admissible_branches(k1)) {
          const OscillatorSystem sys(CircleGeometry(1.0), omega, k1, b);
          std::vector<double> norms, overlaps;
          for (int n = 0; n <= 5; ++n) {
            norms.push_back(numerics::oscillator_overlap(sys, n, n));
            if (n > 0) overlaps.push_back(numerics::oscillator_overlap(sys, n, n - 1));
          }
          const std::string id = fmt::format("norms/oscillator/omega={}/k1={}/{}", omega, k1, to_string(b));
          ValidationReport a = numerics::make_report(id + "/l2", std::vector<double>(6, 1.0), norms, tol);
          a.details = "R int_0^{pi/2} Psi^2 dphi, n = 0..5";
          out.push_back(std::move(a));
          out.push_back(numerics::make_report(id + "/orthogonality", std::vector<double>(5, 0.0), overlaps, tol));
        }
        return out;
      });
    }
  }
  if (all || suite == "contraction") {
    for (const auto& fam : detail::nu_families()) {
      for (int n = 0; n <= 2; ++n) {
        tasks.emplace_back([fam, n] {
          const CoulombSystem sys(CircleGeometry(1.0), 1.0, fam.k1, fam.branch);
          return numerics::contraction_check(sys, n, numerics::ContractionFrame::standard(),
                                             fmt::format("contraction/mu=1/{}/n={}", fam.label, n));
        });
      }
    }
  }
  if (tasks.empty()) {
    throw ConfigError("unknown suite '" + suite + "' (expected one of specfun, oscillator-fd, coulomb-fd, norms, "
                      "contraction, all)");
  }
  return tasks;
}

/// CIRCLE_SQM_THREADS, else the hardware concurrency, at least 1.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("CIRCLE_SQM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    throw ConfigError(fmt::format("CIRCLE_SQM_THREADS must be a positive integer, got '{}'", env));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs the tasks at most `cap` at a time and returns the reports sorted by case_id.
inline std::vector<ValidationReport> run_tasks(const std::vector<Task>& tasks, unsigned cap) {
  std::vector<ValidationReport> all;
  for (std::size_t start = 0; start < tasks.size(); start += cap) {
    std::vector<std::future<std::vector<ValidationReport>>> batch;
    for (std::size_t i = start; i < std::min(tasks.size(), start + cap); ++i) {
      batch.push_back(std::async(cap == 1 ? std::launch::deferred : std::launch::async, tasks[i]));
    }
    for (auto& f : batch) {
      for (auto& r : f.get()) all.push_back(std::move(r));
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ValidationReport& a, const ValidationReport& b) { return a.case_id < b.case_id; });
  return all;
}

}  // namespace circle_sqm::cli
