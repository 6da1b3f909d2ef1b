#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "circle_sqm/errors.hpp"

namespace circle_sqm::numerics {

/// How `passed` is decided from the numbers in a report.
enum class Criterion {
  /// max rel_err <= tolerance
  RelativeError,
  /// numeric strictly decreasing (a convergence sequence); tolerance unused
  StrictlyDecreasing,
};

inline const char* to_string(Criterion c) {
  return c == Criterion::RelativeError ? "relative-error" : "strictly-decreasing";
}

struct ValidationReport {
  std::string case_id;
  std::vector<double> analytic;
  std::vector<double> numeric;
  std::vector<double> abs_err;
  std::vector<double> rel_err;
  std::optional<double> convergence_rate;
  double tolerance = 0.0;
  Criterion criterion = Criterion::RelativeError;
  bool passed = false;
  /// Grid schedule and other settings needed to reproduce the numbers.
  std::string details;

  double max_rel_err() const {
    double m = 0.0;
    for (double e : rel_err) {
      if (!std::isfinite(e)) return e;
      m = std::max(m, e);
    }
    return m;
  }
};

/// Values with |analytic| <= this are compared absolutely.
inline constexpr double kZeroThreshold = 1e-12;

inline ValidationReport make_report(std::string case_id, std::vector<double> analytic, std::vector<double> numeric,
                                    double tolerance, Criterion criterion = Criterion::RelativeError) {
  if (analytic.size() != numeric.size()) {
    throw DomainError("make_report: analytic and numeric lengths differ for " + case_id);
  }
  ValidationReport r;
  r.case_id = std::move(case_id);
  r.analytic = std::move(analytic);
  r.numeric = std::move(numeric);
  r.tolerance = tolerance;
  r.criterion = criterion;
  bool finite = true;
  for (std::size_t i = 0; i < r.analytic.size(); ++i) {
    const double a = r.analytic[i];
    const double e = std::abs(r.numeric[i] - a);
    r.abs_err.push_back(e);
    r.rel_err.push_back(std::abs(a) > kZeroThreshold ? e / std::abs(a) : e);
    finite = finite && std::isfinite(r.numeric[i]) && std::isfinite(e);
  }
  if (criterion == Criterion::RelativeError) {
    r.passed = finite && r.max_rel_err() <= tolerance;
  } else {
    bool decreasing = finite && r.numeric.size() >= 2;
    for (std::size_t i = 1; decreasing && i < r.numeric.size(); ++i) {
      decreasing = r.numeric[i] < r.numeric[i - 1];
    }
    r.passed = decreasing;
  }
  return r;
}

/// Least-squares slope of log(values) against log(abscissa).
inline double log_log_slope(const std::vector<double>& abscissa, const std::vector<double>& values) {
  const std::size_t n = abscissa.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(abscissa[i]);
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace circle_sqm::numerics
