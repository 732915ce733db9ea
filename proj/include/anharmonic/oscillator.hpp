#pragma once

// Oscillator models built from a superpotential x(q) such that
// V(q) - E0 = (x^2 + x') / 2, with the ladder operators
// A = (d/dq - x)/sqrt(2), A+ = (-d/dq - x)/sqrt(2) and [A, A+] = -x'.
//
// Models are generic in the scalar type so identities can be re-evaluated in
// extended precision; OscillatorModel is the double instantiation.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "anharmonic/error.hpp"
#include "anharmonic/format.hpp"

namespace anharmonic {

enum class Family { harmonic, generalized_morse, wei_hua, kratzer_fues, generalized_kratzer_fues };

constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::harmonic: return "harmonic";
    case Family::generalized_morse: return "morse";
    case Family::wei_hua: return "weihua";
    case Family::kratzer_fues: return "kratzer";
    case Family::generalized_kratzer_fues: return "gkratzer";
  }
  return "unknown";
}

struct HarmonicParams {};

/// x(q) = (exp(-c1 q) - c0)/c1 with c0 = s - x_e, c1 = sqrt(2 x_e).
template <typename Real>
struct MorseParams {
  Real s, x_e, c0, c1;
};

/// x(q) = (c c1/c2) E/(1 - c E) - c0/c1 with E = exp(-c1 (q - q0)).
/// In terms of g = c E the well is D [(1 - g/g_eq)/(1 - g)]^2 - E0, where
/// g_eq = c2 W/(c1 + c2 W) marks the potential minimum.
template <typename Real>
struct WeiHuaParams {
  Real c0, c1, c2;
  Real W, B, C, c, q0, g_eq;
};

/// x(q) = 1/(c1 (c1 q + 1)) - c0/c1 with s = (1 - c0 - c1^2)/c0.
template <typename Real>
struct KratzerParams {
  Real c0, c1, s;
};

template <typename Real>
using BasicFamilyParams =
    std::variant<HarmonicParams, MorseParams<Real>, WeiHuaParams<Real>, KratzerParams<Real>>;

/// Open interval (lower, upper); either end may be infinite.
struct Domain {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double q) const noexcept { return q > lower && q < upper; }
};

template <typename Real>
class BasicOscillatorModel {
 public:
  using real_type = Real;
  using Params = BasicFamilyParams<Real>;

  BasicOscillatorModel(Family family, Params params, Domain domain, Real e0,
                       std::optional<Real> d_const)
      : family_(family), params_(std::move(params)), domain_(domain), e0_(e0), d_const_(d_const) {}

  Family family() const noexcept { return family_; }
  const Params& params() const noexcept { return params_; }
  const Domain& domain() const noexcept { return domain_; }
  Real e0() const noexcept { return e0_; }
  std::optional<Real> d_const() const noexcept { return d_const_; }

  Real superpotential(Real q) const {
    check_domain(q);
    return std::visit([&q](const auto& p) { return x_of(p, q); }, params_);
  }

  Real superpotential_derivative(Real q) const {
    check_domain(q);
    return std::visit([&q](const auto& p) { return dx_of(p, q); }, params_);
  }

  Real commutator(Real q) const { return -superpotential_derivative(q); }

  /// (x^2 + x')/2 from the analytic superpotential.
  Real riccati_potential(Real q) const {
    const Real x = superpotential(q);
    return (x * x + superpotential_derivative(q)) / 2;
  }

  /// V(q) - E0 written in the family's own potential form, independent of x(q).
  Real closed_form_potential(Real q) const {
    check_domain(q);
    return std::visit([&q](const auto& p) { return well_of(p, q); }, params_) - e0_;
  }

  Real potential(Real q) const { return closed_form_potential(q) + e0_; }

  /// ln psi0(q) = integral of x from 0 to q, so psi0(0) = 1.
  Real log_ground_state(Real q) const {
    check_domain(q);
    return std::visit([&q](const auto& p) { return log_psi0_of(p, q); }, params_);
  }

  /// Limits of x(q) at the two ends of the domain.
  double superpotential_at_upper() const {
    return std::visit([](const auto& p) { return x_upper_of(p); }, params_);
  }
  double superpotential_at_lower() const {
    return std::visit([](const auto& p) { return x_lower_of(p); }, params_);
  }

  std::string descriptor() const {
    std::string out(to_string(family_));
    if (std::holds_alternative<HarmonicParams>(params_)) return out;
    out += '(';
    bool first = true;
    for (const auto& [name, value] : parameters()) {
      if (!first) out += ',';
      first = false;
      out += name + '=' + format_real(value);
    }
    out += ')';
    return out;
  }

  /// Independent inputs, by the names the command line accepts.
  std::vector<std::pair<std::string, double>> parameters() const {
    return std::visit(
        [this](const auto& p) -> std::vector<std::pair<std::string, double>> {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, HarmonicParams>) {
            return {};
          } else if constexpr (std::is_same_v<P, MorseParams<Real>>) {
            return {{"s", d(p.s)}, {"xe", d(p.x_e)}};
          } else if constexpr (std::is_same_v<P, WeiHuaParams<Real>>) {
            return {{"c0", d(p.c0)}, {"c1", d(p.c1)}, {"c2", d(p.c2)}};
          } else {
            if (family_ == Family::kratzer_fues) return {{"c1", d(p.c1)}};
            return {{"c0", d(p.c0)}, {"c1", d(p.c1)}};
          }
        },
        params_);
  }

  /// Derived constants for table headers and reports.
  std::vector<std::pair<std::string, double>> derived_constants() const {
    auto out = std::visit(
        [](const auto& p) -> std::vector<std::pair<std::string, double>> {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, HarmonicParams>) {
            return {};
          } else if constexpr (std::is_same_v<P, MorseParams<Real>>) {
            return {{"c0", d(p.c0)}, {"c1", d(p.c1)}};
          } else if constexpr (std::is_same_v<P, WeiHuaParams<Real>>) {
            return {{"W", d(p.W)}, {"B", d(p.B)},   {"C", d(p.C)},
                    {"c", d(p.c)}, {"q0", d(p.q0)}, {"g_eq", d(p.g_eq)}};
          } else {
            return {{"c0", d(p.c0)}, {"c1", d(p.c1)}, {"s", d(p.s)}};
          }
        },
        params_);
    out.emplace_back("E0", d(e0_));
    if (d_const_) out.emplace_back("D", d(*d_const_));
    out.emplace_back("q_lower", domain_.lower);
    return out;
  }

 private:
  static double d(const Real& v) { return static_cast<double>(v); }

  void check_domain(const Real& q) const {
    const double qd = d(q);
    if (!domain_.contains(qd)) {
      throw Error(ErrorKind::domain_violation,
                  "q=" + format_real(qd) + " outside (" + format_real(domain_.lower) + ", " +
                      format_real(domain_.upper) + ") for " + std::string(to_string(family_)));
    }
  }

  static constexpr double inf = std::numeric_limits<double>::infinity();

  // Harmonic: x = -q.
  static Real x_of(const HarmonicParams&, const Real& q) { return -q; }
  static Real dx_of(const HarmonicParams&, const Real&) { return Real(-1); }
  static Real well_of(const HarmonicParams&, const Real& q) { return q * q / 2; }
  static Real log_psi0_of(const HarmonicParams&, const Real& q) { return -q * q / 2; }
  static double x_upper_of(const HarmonicParams&) { return -inf; }
  static double x_lower_of(const HarmonicParams&) { return inf; }

  // Generalized Morse.
  static Real x_of(const MorseParams<Real>& p, const Real& q) {
    using std::exp;
    return (exp(-p.c1 * q) - p.c0) / p.c1;
  }
  static Real dx_of(const MorseParams<Real>& p, const Real& q) {
    using std::exp;
    return -exp(-p.c1 * q);
  }
  static Real well_of(const MorseParams<Real>& p, const Real& q) {
    using std::exp;
    const Real t = p.s - exp(-p.c1 * q);
    return t * t / (4 * p.x_e);
  }
  static Real log_psi0_of(const MorseParams<Real>& p, const Real& q) {
    using std::expm1;
    return -expm1(-p.c1 * q) / (p.c1 * p.c1) - p.c0 / p.c1 * q;
  }
  static double x_upper_of(const MorseParams<Real>& p) { return d(-p.c0 / p.c1); }
  static double x_lower_of(const MorseParams<Real>&) { return inf; }

  // Wei Hua. g = c exp(-c1 (q - q0)) is formed through logs so |c| may be large.
  static Real g_of(const WeiHuaParams<Real>& p, const Real& q) {
    using std::abs;
    using std::exp;
    using std::log;
    const Real mag = exp(log(abs(p.c)) - p.c1 * (q - p.q0));
    return p.c < 0 ? Real(-mag) : mag;
  }
  static Real x_of(const WeiHuaParams<Real>& p, const Real& q) {
    using std::abs;
    const Real g = g_of(p, q);
    // g/(1 - g), rewritten for |g| > 1.
    const Real ratio = abs(g) > 1 ? Real(1 / (1 / g - 1)) : Real(g / (1 - g));
    return p.c1 / p.c2 * ratio - p.c0 / p.c1;
  }
  static Real dx_of(const WeiHuaParams<Real>& p, const Real& q) {
    using std::abs;
    const Real g = g_of(p, q);
    Real shape;
    if (abs(g) > 1) {
      const Real ig = 1 / g;
      shape = ig / ((ig - 1) * (ig - 1));
    } else {
      shape = g / ((1 - g) * (1 - g));
    }
    return -p.c1 * p.c1 / p.c2 * shape;
  }
  static Real well_of(const WeiHuaParams<Real>& p, const Real& q) {
    using std::abs;
    const Real g = g_of(p, q);
    Real r;
    if (abs(g) > 1) {
      const Real ig = 1 / g;
      r = (ig - 1 / p.g_eq) / (ig - 1);
    } else {
      r = (1 - g / p.g_eq) / (1 - g);
    }
    return (1 - p.c2) * p.W * p.W * r * r / 2;
  }
  static Real log_psi0_of(const WeiHuaParams<Real>& p, const Real& q) {
    using std::log1p;
    return (log1p(-g_of(p, q)) - log1p(-p.C)) / p.c2 - p.c0 / p.c1 * q;
  }
  static double x_upper_of(const WeiHuaParams<Real>& p) { return d(-p.c0 / p.c1); }
  static double x_lower_of(const WeiHuaParams<Real>& p) {
    return p.c > 0 ? inf : d(-p.c1 / p.c2 - p.c0 / p.c1);
  }

  // Kratzer-Fues and its s-generalization.
  static Real x_of(const KratzerParams<Real>& p, const Real& q) {
    return 1 / (p.c1 * (p.c1 * q + 1)) - p.c0 / p.c1;
  }
  static Real dx_of(const KratzerParams<Real>&p, const Real& q) {
    const Real t = p.c1 * q + 1;
    return -1 / (t * t);
  }
  static Real well_of(const KratzerParams<Real>& p, const Real& q) {
    const Real r = (p.c1 * q - p.s) / (1 + p.c1 * q);
    return p.c0 * p.c0 / (p.c1 * p.c1 * (1 - p.c1 * p.c1)) * r * r / 2;
  }
  static Real log_psi0_of(const KratzerParams<Real>& p, const Real& q) {
    using std::log1p;
    return log1p(p.c1 * q) / (p.c1 * p.c1) - p.c0 / p.c1 * q;
  }
  static double x_upper_of(const KratzerParams<Real>& p) { return d(-p.c0 / p.c1); }
  static double x_lower_of(const KratzerParams<Real>&) { return inf; }

  Family family_;
  Params params_;
  Domain domain_;
  Real e0_;
  std::optional<Real> d_const_;
};

using OscillatorModel = BasicOscillatorModel<double>;

inline double eval_superpotential(const OscillatorModel& m, double q) { return m.superpotential(q); }
inline double eval_superpotential_derivative(const OscillatorModel& m, double q) {
  return m.superpotential_derivative(q);
}
inline double commutator_value(const OscillatorModel& m, double q) { return m.commutator(q); }
inline double riccati_potential(const OscillatorModel& m, double q) { return m.riccati_potential(q); }

}  // namespace anharmonic
