#pragma once

// Validated constructors for the five oscillator families. Each one rejects
// parameters that would leave x(q) undefined, the commutator non-positive,
// or the ground state non-decaying, naming the violated condition.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anharmonic/error.hpp"
#include "anharmonic/format.hpp"
#include "anharmonic/oscillator.hpp"

namespace anharmonic {

namespace detail {

inline void require(bool ok, const std::string& condition) {
  if (!ok) throw Error(ErrorKind::invalid_params, "requires " + condition);
}

inline void require_finite(double v, const char* name) {
  require(std::isfinite(v), std::string(name) + " finite, got " + format_real(v));
}

}  // namespace detail

template <typename Real = double>
BasicOscillatorModel<Real> make_harmonic() {
  return BasicOscillatorModel<Real>(Family::harmonic, HarmonicParams{}, Domain{}, Real(1) / 2,
                                    std::nullopt);
}

template <typename Real = double>
BasicOscillatorModel<Real> make_generalized_morse(double s, double x_e) {
  using std::sqrt;
  detail::require_finite(s, "s");
  detail::require_finite(x_e, "x_e");
  detail::require(x_e > 0.0, "x_e > 0, got x_e=" + format_real(x_e));
  detail::require(s > x_e, "s > x_e, got s=" + format_real(s) + " x_e=" + format_real(x_e));
  const Real rs = s;
  const Real rx = x_e;
  MorseParams<Real> p{rs, rx, Real(rs - rx), Real(sqrt(2 * rx))};
  // 2 E0 = s - x_e/2 and V = (s - exp(-c1 q))^2 / (4 x_e).
  return BasicOscillatorModel<Real>(Family::generalized_morse, p, Domain{}, (rs - rx / 2) / 2,
                                    Real(1 / (4 * rx)));
}

template <typename Real = double>
BasicOscillatorModel<Real> make_wei_hua(double c0, double c1, double c2) {
  using detail::require;
  using std::abs;
  using std::log;
  detail::require_finite(c0, "c0");
  detail::require_finite(c1, "c1");
  detail::require_finite(c2, "c2");
  require(c1 > 0.0, "c1 > 0, got c1=" + format_real(c1));
  require(c2 != 0.0 && c2 != 1.0, "c2 not in {0, 1}, got c2=" + format_real(c2));
  require(c1 * c1 + c2 != 0.0, "c1^2 + c2 != 0");
  const Real a0 = c0, a1 = c1, a2 = c2;
  const Real W = (2 * a0 + a1 * a1) / (2 * a1 * (1 - a2));
  require(std::isfinite(static_cast<double>(W)) && W != 0,
          "W = (2c0 + c1^2)/(2c1(1 - c2)) finite and nonzero");
  const Real B = a1 / (a1 * a1 + a2);
  const Real C = a2 / (a1 * a1 + a2);
  const Real gap = B / W - C;
  const double scale = std::max(std::abs(static_cast<double>(B / W)), std::abs(static_cast<double>(C)));
  require(static_cast<double>(gap) > 1e-12 * scale,
          "B/W - C > 0 so that q0 = ln(B/W - C)/c1 is real, got " +
              format_real(static_cast<double>(gap)));
  const Real c = C / gap;
  const Real q0 = log(gap) / a1;
  require(c / a2 > 0, "c/c2 > 0 (positive commutator), got c=" + format_real(static_cast<double>(c)));
  require(a1 + a2 * W != 0, "c1 + c2 W != 0 (finite potential well)");
  const Real g_eq = a2 * W / (a1 + a2 * W);

  WeiHuaParams<Real> p{a0, a1, a2, W, B, C, c, q0, g_eq};
  Domain domain;
  if (c > 0) domain.lower = static_cast<double>(Real(q0 + log(c) / a1));
  const Real two_d = (1 - a2) * W * W;
  const Real two_e0 = two_d - a0 * a0 / (a1 * a1);
  return BasicOscillatorModel<Real>(Family::wei_hua, p, domain, two_e0 / 2, Real(two_d / 2));
}

namespace detail {

template <typename Real>
BasicOscillatorModel<Real> make_kratzer(Family family, double c0, double c1) {
  require_finite(c0, "c0");
  require_finite(c1, "c1");
  require(c1 > 0.0 && c1 < 1.0, "0 < c1 < 1, got c1=" + format_real(c1));
  require(c0 > 0.0, "c0 > 0, got c0=" + format_real(c0));
  const Real a0 = c0;
  const Real a1 = c1;
  KratzerParams<Real> p{a0, a1, Real((1 - a0 - a1 * a1) / a0)};
  const Real one_minus = 1 - a1 * a1;
  Domain domain;
  domain.lower = -1.0 / c1;
  return BasicOscillatorModel<Real>(family, p, domain, Real(a0 * a0 / one_minus / 2),
                                    Real(a0 * a0 / (a1 * a1 * one_minus) / 2));
}

}  // namespace detail

template <typename Real = double>
BasicOscillatorModel<Real> make_generalized_kratzer_fues(double c0, double c1) {
  return detail::make_kratzer<Real>(Family::generalized_kratzer_fues, c0, c1);
}

/// Plain Kratzer-Fues: the generalized form with c0 = 1 - c1^2 (s = 0).
template <typename Real = double>
BasicOscillatorModel<Real> make_kratzer_fues(double c1) {
  detail::require_finite(c1, "c1");
  detail::require(c1 > 0.0 && c1 < 1.0, "0 < c1 < 1, got c1=" + format_real(c1));
  return detail::make_kratzer<Real>(Family::kratzer_fues, 1.0 - c1 * c1, c1);
}

/// Rebuilds a model from its independent inputs at another precision.
template <typename Real>
BasicOscillatorModel<Real> rebuild(const OscillatorModel& model) {
  const auto params = model.parameters();
  auto get = [&](const char* name) {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    return 0.0;
  };
  switch (model.family()) {
    case Family::harmonic: return make_harmonic<Real>();
    case Family::generalized_morse: return make_generalized_morse<Real>(get("s"), get("xe"));
    case Family::wei_hua: return make_wei_hua<Real>(get("c0"), get("c1"), get("c2"));
    case Family::kratzer_fues: return make_kratzer_fues<Real>(get("c1"));
    case Family::generalized_kratzer_fues:
      return make_generalized_kratzer_fues<Real>(get("c0"), get("c1"));
  }
  throw Error(ErrorKind::invalid_params, "unknown family");
}

struct PhysicalMorseParams {
  double D_e;
  double a;
  double m;
  double hbar = 1.0;
};

struct MorseSpectroscopic {
  double x_e;
  double omega_e;
};

/// omega_e = a sqrt(2 D_e/m), x_e = hbar omega_e / (4 D_e).
inline MorseSpectroscopic morse_dimensionless_from_physical(const PhysicalMorseParams& p) {
  using detail::require;
  require(std::isfinite(p.D_e) && p.D_e > 0.0, "D_e > 0");
  require(std::isfinite(p.a) && p.a > 0.0, "a > 0");
  require(std::isfinite(p.m) && p.m > 0.0, "m > 0");
  require(std::isfinite(p.hbar) && p.hbar > 0.0, "hbar > 0");
  const double omega_e = p.a * std::sqrt(2.0 * p.D_e / p.m);
  return {p.hbar * omega_e / (4.0 * p.D_e), omega_e};
}

}  // namespace anharmonic
