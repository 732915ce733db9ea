#pragma once

// Superpotentials from a generating function: dx/dq = -f(x), with f a
// truncated series in the shifted variable y = x + c0/c1.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "anharmonic/error.hpp"
#include "anharmonic/families.hpp"
#include "anharmonic/format.hpp"
#include "anharmonic/numerics.hpp"
#include "anharmonic/oscillator.hpp"

namespace anharmonic {

enum class SeriesForm { constant, linear, parabolic, squared_linear };

constexpr std::string_view to_string(SeriesForm f) noexcept {
  switch (f) {
    case SeriesForm::constant: return "constant";
    case SeriesForm::linear: return "linear";
    case SeriesForm::parabolic: return "parabolic";
    case SeriesForm::squared_linear: return "squared-linear";
  }
  return "unknown";
}

inline SeriesForm parse_series_form(std::string_view name) {
  if (name == "constant") return SeriesForm::constant;
  if (name == "linear") return SeriesForm::linear;
  if (name == "parabolic") return SeriesForm::parabolic;
  if (name == "squared-linear" || name == "squared_linear") return SeriesForm::squared_linear;
  throw Error(ErrorKind::unsupported_form,
              "generating form '" + std::string(name) +
                  "' (supported: constant, linear, parabolic, squared-linear)");
}

struct GeneratingSeries {
  SeriesForm form = SeriesForm::constant;
  double c0 = 0.0;
  double c1 = 1.0;
  double c2 = 0.0;  // parabolic only
  std::optional<double> x0;

  /// x(0); defaults to (1 - c0)/c1, or 0 for the constant form.
  double initial_value() const {
    if (x0) return *x0;
    return form == SeriesForm::constant ? 0.0 : (1.0 - c0) / c1;
  }

  bool uses_default_initial_value() const {
    if (!x0) return true;
    const double def = form == SeriesForm::constant ? 0.0 : (1.0 - c0) / c1;
    return *x0 == def;
  }
};

inline double eval_generating_function(const GeneratingSeries& s, double x) {
  switch (s.form) {
    case SeriesForm::constant: return 1.0;
    case SeriesForm::linear: return s.c1 * (x + s.c0 / s.c1);
    case SeriesForm::parabolic: {
      const double y = x + s.c0 / s.c1;
      return s.c1 * y + s.c2 * y * y;
    }
    case SeriesForm::squared_linear: {
      const double t = s.c1 * (x + s.c0 / s.c1);
      return t * t;
    }
  }
  return 0.0;
}

inline void validate(const GeneratingSeries& s) {
  if (!std::isfinite(s.c0) || !std::isfinite(s.c1) || !std::isfinite(s.c2) ||
      (s.x0 && !std::isfinite(*s.x0))) {
    throw Error(ErrorKind::invalid_params, "series coefficients must be finite");
  }
  if (s.form != SeriesForm::constant && s.c1 == 0.0) {
    throw Error(ErrorKind::invalid_params, "requires c1 != 0 for the " +
                                               std::string(to_string(s.form)) + " form");
  }
  if (s.form == SeriesForm::parabolic && s.c2 == 0.0) {
    throw Error(ErrorKind::invalid_params, "requires c2 != 0 for the parabolic form");
  }
  const double f0 = eval_generating_function(s, s.initial_value());
  if (!(f0 > 0.0)) {
    throw Error(ErrorKind::invalid_params,
                "requires f(x0) > 0 so that dx/dq < 0 at q=0, got f(x0)=" + format_real(f0));
  }
}

struct GeneratedSuperpotential {
  SampledFunction<double> x;
  double error_estimate;
  /// Set when |x| > 1 somewhere; the series is only expected to converge for |x| < 1.
  bool exceeds_unit_interval;
};

/// Integrates dx/dq = -f(x) from x(0) = x0 over a grid starting at q = 0.
inline GeneratedSuperpotential superpotential_from_series(const GeneratingSeries& series,
                                                          const Grid& grid) {
  validate(series);
  if (grid.q_min() != 0.0) {
    throw Error(ErrorKind::invalid_input, "series integration starts at q=0, got q_min=" +
                                              format_real(grid.q_min()));
  }
  auto sol = solve_first_order_ode(
      [&series](double, double x) { return -eval_generating_function(series, x); },
      series.initial_value(), grid);
  bool exceeds = false;
  for (double v : sol.x.values) exceeds = exceeds || std::abs(v) > 1.0;
  return {std::move(sol.x), sol.error_estimate, exceeds};
}

/// Closed-form model reached by integrating the series with the default x0.
inline OscillatorModel closed_form_from_series(const GeneratingSeries& series) {
  validate(series);
  switch (series.form) {
    case SeriesForm::constant: return make_harmonic();
    case SeriesForm::linear: {
      if (series.c1 <= 0.0) {
        throw Error(ErrorKind::invalid_params, "linear form maps to Morse only for c1 > 0");
      }
      const double x_e = 0.5 * series.c1 * series.c1;
      return make_generalized_morse(series.c0 + x_e, x_e);
    }
    case SeriesForm::parabolic: return make_wei_hua(series.c0, series.c1, series.c2);
    case SeriesForm::squared_linear: return make_generalized_kratzer_fues(series.c0, series.c1);
  }
  throw Error(ErrorKind::unsupported_form, "unknown series form");
}

}  // namespace anharmonic
