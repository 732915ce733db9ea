#pragma once

// Numerical certificates for the identities a model and its coherent states
// are supposed to satisfy: Riccati factorization, A psi0 = 0, the ground-state
// Schroedinger equation, [A, A+] = -x', A psi_alpha = alpha psi_alpha, the
// first and second moment identities and minimum uncertainty.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "anharmonic/error.hpp"
#include "anharmonic/families.hpp"
#include "anharmonic/numerics.hpp"
#include "anharmonic/oscillator.hpp"
#include "anharmonic/states.hpp"

namespace anharmonic {

struct Tolerances {
  double riccati = 1e-8;       // absolute
  double annihilation = 1e-6;  // relative
  double eigenstate = 1e-6;    // relative
  double schrodinger = 1e-5;   // relative
  double product = 1e-4;       // relative
  double moment = 1e-6;        // <x>, <p>, absolute
  double expectation = 1e-5;   // second moments, absolute
  double commutator = 1e-5;    // relative
  double balance = 1e-6;       // |dx - dp|, absolute

  static constexpr std::string_view names[] = {"riccati",    "annihilation", "eigenstate",
                                               "schrodinger", "product",      "moment",
                                               "expectation", "commutator",   "balance"};

  double& at(std::string_view name) {
    if (name == "riccati") return riccati;
    if (name == "annihilation") return annihilation;
    if (name == "eigenstate") return eigenstate;
    if (name == "schrodinger") return schrodinger;
    if (name == "product") return product;
    if (name == "moment") return moment;
    if (name == "expectation") return expectation;
    if (name == "commutator") return commutator;
    if (name == "balance") return balance;
    throw Error(ErrorKind::invalid_params, "unknown tolerance '" + std::string(name) + "'");
  }

  double at(std::string_view name) const { return const_cast<Tolerances&>(*this).at(name); }

  Tolerances& set(std::string_view name, double value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::invalid_params,
                  "tolerance '" + std::string(name) + "' must be finite and >= 0");
    }
    at(name) = value;
    return *this;
  }
};

inline Tolerances default_tolerances() { return {}; }

struct Check {
  std::string name;
  std::string tolerance_name;
  double value;
  double tolerance;
  bool pass;
};

struct VerificationReport {
  std::string model;
  complex alpha{0.0, 0.0};
  double q_min = 0.0;
  double q_max = 0.0;
  std::size_t n = 0;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> quantities;

  void add(std::string name, std::string tolerance_name, double value, const Tolerances& tol) {
    Check c{std::move(name), std::move(tolerance_name), value, 0.0, false};
    c.tolerance = tol.at(c.tolerance_name);
    c.pass = value <= c.tolerance;
    checks.push_back(std::move(c));
  }

  /// Pass flags depend only on the residuals and the tolerance set.
  void apply(const Tolerances& tol) {
    for (auto& c : checks) {
      c.tolerance = tol.at(c.tolerance_name);
      c.pass = c.value <= c.tolerance;
    }
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  const Check& check(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw Error(ErrorKind::invalid_input, "no check named '" + std::string(name) + "'");
  }

  double quantity(std::string_view name) const {
    for (const auto& [k, v] : quantities) {
      if (k == name) return v;
    }
    throw Error(ErrorKind::invalid_input, "no quantity named '" + std::string(name) + "'");
  }
};

/// Scalar used to re-evaluate the Riccati identity. Near a pole of x(q) both
/// sides reach ~1e12, beyond what double can compare to an absolute 1e-8.
using extended_real = boost::multiprecision::cpp_bin_float_quad;

/// max over the grid of |(V - E0)_closed form - (x^2 + x')/2|, with the model
/// rebuilt in extended precision from its inputs.
inline double riccati_max_residual(const OscillatorModel& model, const Grid& grid) {
  const auto wide = rebuild<extended_real>(model);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const extended_real q = grid[i];
    const extended_real diff = wide.closed_form_potential(q) - wide.riccati_potential(q);
    worst = std::max(worst, std::abs(static_cast<double>(diff)));
  }
  return worst;
}

namespace detail {

inline double relative_l2(const SampledFunction<complex>& residual,
                          const SampledFunction<complex>& reference) {
  return l2_norm(residual) / l2_norm(reference);
}

inline VerificationReport start_report(const OscillatorModel& model, complex alpha,
                                       const Grid& grid) {
  VerificationReport r;
  r.model = model.descriptor();
  r.alpha = alpha;
  r.q_min = grid.q_min();
  r.q_max = grid.q_max();
  r.n = grid.size();
  return r;
}

}  // namespace detail

/// ||(A A+ - A+ A) phi + x' phi|| / ||phi|| for a unit-width Gaussian centred
/// in the grid (narrowed on short grids so it vanishes at both ends).
inline double commutator_action_residual(const OscillatorModel& model, const Grid& grid) {
  const double centre = 0.5 * (grid.q_min() + grid.q_max());
  const double width = std::min(1.0, (grid.q_max() - grid.q_min()) / 16.0);
  const auto phi = sample(grid, [&](double q) {
    const double u = (q - centre) / width;
    return complex(std::exp(-0.5 * u * u), 0.0);
  });
  const auto a_adag = apply_ladder(model, apply_ladder(model, phi, Ladder::creation), Ladder::annihilation);
  const auto adag_a = apply_ladder(model, apply_ladder(model, phi, Ladder::annihilation), Ladder::creation);
  std::vector<complex> res(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    res[i] = a_adag[i] - adag_a[i] + model.superpotential_derivative(grid[i]) * phi[i];
  }
  return detail::relative_l2(SampledFunction<complex>(grid, std::move(res)), phi);
}

inline VerificationReport verify_model(const OscillatorModel& model, const Grid& grid,
                                       const Tolerances& tol = default_tolerances(),
                                       Coverage coverage = Coverage::required) {
  auto report = detail::start_report(model, 0.0, grid);
  const auto psi = ground_state(model);
  psi.check_grid(grid);
  const auto s = psi.samples(grid);
  if (coverage == Coverage::required) detail::check_truncation(s);

  const double riccati = riccati_max_residual(model, grid);
  report.add("riccati_max_abs", "riccati", riccati, tol);

  report.add("annihilation_rel", "annihilation",
             detail::relative_l2(apply_ladder(model, s, Ladder::annihilation), s), tol);

  const auto d2 = differentiate(s, 2);
  std::vector<complex> h(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    h[i] = -0.5 * d2[i] + model.closed_form_potential(grid[i]) * s[i];
  }
  report.add("schrodinger_rel", "schrodinger",
             detail::relative_l2(SampledFunction<complex>(grid, std::move(h)), s), tol);

  report.add("commutator_action_rel", "commutator", commutator_action_residual(model, grid), tol);
  return report;
}

inline VerificationReport verify_coherent(const OscillatorModel& model, complex alpha,
                                          const Grid& grid,
                                          const Tolerances& tol = default_tolerances(),
                                          Coverage coverage = Coverage::required) {
  auto report = detail::start_report(model, alpha, grid);
  const auto psi = normalize(coherent_state(model, alpha), grid, coverage);
  const auto s = psi.samples(grid);

  const auto a_psi = apply_ladder(model, s, Ladder::annihilation);
  std::vector<complex> eig(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) eig[i] = a_psi[i] - alpha * s[i];
  report.add("eigenstate_rel", "eigenstate",
             detail::relative_l2(SampledFunction<complex>(grid, std::move(eig)), s), tol);

  const complex mx = expectation(psi, Observable::x, grid, coverage);
  const complex mp = expectation(psi, Observable::p, grid, coverage);
  const complex mx2 = expectation(psi, Observable::x_squared, grid, coverage);
  const complex mp2 = expectation(psi, Observable::p_squared, grid, coverage);
  const complex mxp = expectation(psi, Observable::x_prime, grid, coverage);

  const double var_x = mx2.real() - mx.real() * mx.real();
  const double var_p = mp2.real() - mp.real() * mp.real();
  const double dx = std::sqrt(std::max(var_x, 0.0));
  const double dp = std::sqrt(std::max(var_p, 0.0));
  const double product = var_x * var_p;
  const double bound = 0.25 * mxp.real() * mxp.real();

  const complex ac = std::conj(alpha);
  const complex i_unit(0.0, 1.0);
  // x = -(A + A+)/sqrt(2) and p = -i (A - A+)/sqrt(2).
  const complex want_x = -(alpha + ac) / std::numbers::sqrt2;
  const complex want_p = -i_unit * (alpha - ac) / std::numbers::sqrt2;
  const complex want_2x2 = (alpha + ac) * (alpha + ac) - mxp;
  const complex want_m2p2 = (alpha - ac) * (alpha - ac) + mxp;

  report.add("uncertainty_balance", "balance", std::abs(dx - dp), tol);
  report.add("product_rel_err", "product", std::abs(product - bound) / bound, tol);
  report.add("exp_x_err", "moment", std::abs(mx - want_x), tol);
  report.add("exp_p_err", "moment", std::abs(mp - want_p), tol);
  report.add("exp_x2_err", "expectation", std::abs(2.0 * mx2 - want_2x2), tol);
  report.add("exp_p2_err", "expectation", std::abs(-2.0 * mp2 - want_m2p2), tol);

  report.quantities = {{"delta_x", dx},
                       {"delta_p", dp},
                       {"product", product},
                       {"bound", bound},
                       {"mean_x", mx.real()},
                       {"mean_p", mp.real()},
                       {"mean_x_prime", mxp.real()},
                       {"norm", *psi.norm()}};
  return report;
}

}  // namespace anharmonic
