#pragma once

// Ground states psi0 = exp(int_0^q x dq'), coherent states
// psi_alpha = psi0 exp(sqrt(2) alpha q), ladder operators, normalization
// and expectation values on a truncated uniform grid.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "anharmonic/error.hpp"
#include "anharmonic/format.hpp"
#include "anharmonic/numerics.hpp"
#include "anharmonic/oscillator.hpp"

namespace anharmonic {

/// Relative edge magnitude below which a grid is taken to cover a state.
inline constexpr double truncation_threshold = 1e-12;

class WaveFunction {
 public:
  WaveFunction(OscillatorModel model, complex alpha) : model_(std::move(model)), alpha_(alpha) {}

  const OscillatorModel& model() const noexcept { return model_; }
  complex alpha() const noexcept { return alpha_; }
  /// Norm of the state this one was normalized from; empty until normalized.
  std::optional<double> norm() const noexcept { return norm_; }
  double scale() const noexcept { return scale_; }

  double log_amplitude(double q) const {
    return model_.log_ground_state(q) + std::numbers::sqrt2 * alpha_.real() * q + std::log(scale_);
  }

  complex operator()(double q) const {
    const double re = model_.log_ground_state(q) + std::numbers::sqrt2 * alpha_.real() * q;
    const double im = std::numbers::sqrt2 * alpha_.imag() * q;
    return scale_ * std::exp(complex(re, im));
  }

  SampledFunction<complex> samples(const Grid& grid) const {
    check_grid(grid);
    return sample(grid, [this](double q) { return (*this)(q); });
  }

  WaveFunction rescaled(double factor, double measured_norm) const {
    WaveFunction out = *this;
    out.scale_ *= factor;
    out.norm_ = measured_norm;
    return out;
  }

  void check_grid(const Grid& grid) const {
    const auto& d = model_.domain();
    if (!(grid.q_min() > d.lower && grid.q_max() < d.upper)) {
      throw Error(ErrorKind::domain_violation,
                  "grid [" + format_real(grid.q_min()) + ", " + format_real(grid.q_max()) +
                      "] leaves the model domain (" + format_real(d.lower) + ", " +
                      format_real(d.upper) + ")");
    }
  }

 private:
  OscillatorModel model_;
  complex alpha_;
  double scale_ = 1.0;
  std::optional<double> norm_;
};

/// Open interval for sqrt(2) Re(alpha) inside which psi_alpha decays at both
/// ends: (-x(lower end), -x(upper end)).
struct AdmissibilityBound {
  double inf_re_alpha;
  double sup_re_alpha;

  bool contains(complex alpha) const noexcept {
    const double a = std::numbers::sqrt2 * alpha.real();
    return a > inf_re_alpha && a < sup_re_alpha;
  }
};

inline AdmissibilityBound admissible_bound(const OscillatorModel& model) {
  return {-model.superpotential_at_lower(), -model.superpotential_at_upper()};
}

inline bool admissible(const OscillatorModel& model, complex alpha) {
  return admissible_bound(model).contains(alpha);
}

inline WaveFunction ground_state(const OscillatorModel& model) { return WaveFunction(model, 0.0); }

inline WaveFunction coherent_state(const OscillatorModel& model, complex alpha) {
  const auto bound = admissible_bound(model);
  if (!bound.contains(alpha)) {
    throw Error(ErrorKind::inadmissible_alpha,
                "sqrt(2) Re(alpha) = " + format_real(std::numbers::sqrt2 * alpha.real()) +
                    " must lie in (" + format_real(bound.inf_re_alpha) + ", " +
                    format_real(bound.sup_re_alpha) + ") for " + model.descriptor());
  }
  return WaveFunction(model, alpha);
}

enum class Ladder { annihilation, creation };

/// A phi = (phi' - x phi)/sqrt(2), A+ phi = (-phi' - x phi)/sqrt(2).
inline SampledFunction<complex> apply_ladder(const OscillatorModel& model,
                                             const SampledFunction<complex>& phi, Ladder which) {
  const auto dphi = differentiate(phi, 1);
  const double sign = which == Ladder::annihilation ? 1.0 : -1.0;
  std::vector<complex> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double x = model.superpotential(phi.grid[i]);
    out[i] = (sign * dphi[i] - x * phi[i]) / std::numbers::sqrt2;
  }
  return SampledFunction<complex>(phi.grid, std::move(out));
}

inline SampledFunction<complex> apply_ladder(const OscillatorModel& model, const WaveFunction& psi,
                                             Ladder which, const Grid& grid) {
  return apply_ladder(model, psi.samples(grid), which);
}

namespace detail {

inline void check_truncation(const SampledFunction<complex>& s) {
  double peak = 0.0;
  for (const auto& v : s.values) peak = std::max(peak, std::abs(v));
  const double lo = std::abs(s.values.front());
  const double hi = std::abs(s.values.back());
  if (!(peak > 0.0) || !std::isfinite(peak) || lo >= truncation_threshold * peak ||
      hi >= truncation_threshold * peak) {
    throw Error(ErrorKind::truncation_insufficient,
                "edge magnitudes " + format_real(peak > 0.0 ? lo / peak : lo) + ", " +
                    format_real(peak > 0.0 ? hi / peak : hi) + " of peak on [" +
                    format_real(s.grid.q_min()) + ", " + format_real(s.grid.q_max()) +
                    "]; widen the grid");
  }
}

}  // namespace detail

/// Whether a grid that fails the truncation rule is an error or is accepted
/// as given (explicit user grids).
enum class Coverage { required, unchecked };

/// Whether both grid ends sit below the truncation threshold for psi.
inline bool covers(const WaveFunction& psi, const Grid& grid) {
  try {
    detail::check_truncation(psi.samples(grid));
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline WaveFunction normalize(const WaveFunction& psi, const Grid& grid,
                              Coverage coverage = Coverage::required) {
  const auto s = psi.samples(grid);
  if (coverage == Coverage::required) detail::check_truncation(s);
  const double n = l2_norm(s);
  return psi.rescaled(1.0 / n, n);
}

enum class Observable { x, p, x_squared, p_squared, x_prime };

/// Quadrature of conj(psi) O psi; psi is expected to be normalized on grid.
inline complex expectation(const WaveFunction& psi, Observable obs, const Grid& grid,
                           Coverage coverage = Coverage::required) {
  const auto s = psi.samples(grid);
  if (coverage == Coverage::required) detail::check_truncation(s);
  const auto& model = psi.model();
  std::vector<complex> op(s.size());
  if (obs == Observable::p || obs == Observable::p_squared) {
    const auto d = differentiate(s, obs == Observable::p ? 1 : 2);
    const complex factor = obs == Observable::p ? complex(0.0, -1.0) : complex(-1.0, 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) op[i] = factor * d[i];
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double q = grid[i];
      double m = 0.0;
      switch (obs) {
        case Observable::x: m = model.superpotential(q); break;
        case Observable::x_squared: {
          const double x = model.superpotential(q);
          m = x * x;
          break;
        }
        default: m = model.superpotential_derivative(q); break;
      }
      op[i] = m * s[i];
    }
  }
  std::vector<complex> integrand(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) integrand[i] = std::conj(s[i]) * op[i];
  return integrate_simpson(SampledFunction<complex>(grid, std::move(integrand)));
}

namespace detail {

template <typename F>
double bisect(F&& f, double lo, double hi) {
  // f(lo) > 0 > f(hi) or the reverse; returns the end on the non-positive side.
  const bool lo_positive = f(lo) > 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if ((f(mid) > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo_positive ? hi : lo;
}

}  // namespace detail

/// Grid whose ends sit where |psi_alpha| has fallen to half the truncation
/// threshold relative to its peak. log|psi_alpha| is concave (x' < 0), so the
/// peak is the root of x(q) + sqrt(2) Re(alpha) and each cutoff is unique.
inline Grid auto_grid(const OscillatorModel& model, complex alpha, long long n = 4001) {
  const auto bound = admissible_bound(model);
  if (!bound.contains(alpha)) {
    throw Error(ErrorKind::inadmissible_alpha,
                "no decaying grid for alpha=" + format_complex(alpha) + " on " + model.descriptor());
  }
  const double a = std::numbers::sqrt2 * alpha.real();
  const auto& dom = model.domain();
  auto slope = [&](double q) { return model.superpotential(q) + a; };
  auto log_amp = [&](double q) { return model.log_ground_state(q) + a * q; };

  // Bracket the peak.
  double lo;
  if (std::isfinite(dom.lower)) {
    double delta = 1.0;
    lo = dom.lower + delta;
    while (slope(lo) <= 0.0) {
      delta *= 0.5;
      lo = dom.lower + delta;
      if (lo == dom.lower) throw Error(ErrorKind::truncation_insufficient, "peak not bracketed");
    }
  } else {
    lo = -1.0;
    while (slope(lo) <= 0.0) {
      lo *= 2.0;
      if (lo < -1e12) throw Error(ErrorKind::truncation_insufficient, "peak not bracketed");
    }
  }
  double hi = std::max(lo, 0.0) + 1.0;
  while (slope(hi) >= 0.0) {
    hi = 2.0 * hi + 1.0;
    if (hi > 1e12) throw Error(ErrorKind::truncation_insufficient, "peak not bracketed");
  }
  const double peak = detail::bisect(slope, lo, hi);
  const double level = log_amp(peak) + std::log(0.5 * truncation_threshold);
  auto above = [&](double q) { return log_amp(q) - level; };

  double right_step = 1.0;
  double right = peak + right_step;
  while (above(right) > 0.0) {
    right_step *= 2.0;
    right = peak + right_step;
    if (right_step > 1e12) throw Error(ErrorKind::truncation_insufficient, "no right cutoff");
  }
  right = detail::bisect(above, peak, right);

  double left;
  if (std::isfinite(dom.lower)) {
    // log|psi| -> -inf at a finite lower end; halve the distance to it.
    double dist = peak - dom.lower;
    double inner = peak;
    double q = peak;
    for (;;) {
      dist *= 0.5;
      q = dom.lower + dist;
      if (!(q > dom.lower)) {
        throw Error(ErrorKind::truncation_insufficient,
                    "state does not decay below threshold before the domain boundary");
      }
      if (above(q) <= 0.0) break;
      inner = q;
    }
    left = detail::bisect(above, q, inner);
  } else {
    double left_step = 1.0;
    left = peak - left_step;
    while (above(left) > 0.0) {
      left_step *= 2.0;
      left = peak - left_step;
      if (left_step > 1e12) throw Error(ErrorKind::truncation_insufficient, "no left cutoff");
    }
    left = detail::bisect(above, left, peak);
  }
  return make_grid(left, right, n);
}

}  // namespace anharmonic
