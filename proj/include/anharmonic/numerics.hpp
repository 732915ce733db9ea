#pragma once

// Uniform grids, composite Simpson quadrature, fourth-order finite
// differences and a classical Runge-Kutta integrator for dx/dq = rhs(q, x).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "anharmonic/error.hpp"

namespace anharmonic {

using complex = std::complex<double>;

class Grid {
 public:
  Grid(double q_min, double q_max, std::size_t n) : q_min_(q_min), q_max_(q_max), n_(n) {
    if (!std::isfinite(q_min) || !std::isfinite(q_max) || !(q_min < q_max)) {
      throw Error(ErrorKind::invalid_range,
                  "grid requires finite q_min < q_max, got [" + std::to_string(q_min) + ", " +
                      std::to_string(q_max) + "]");
    }
    if (n < 5 || n % 2 == 0) {
      throw Error(ErrorKind::invalid_count,
                  "grid point count must be odd and >= 5, got " + std::to_string(n));
    }
    step_ = (q_max - q_min) / static_cast<double>(n - 1);
  }

  double q_min() const noexcept { return q_min_; }
  double q_max() const noexcept { return q_max_; }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return step_; }

  /// Last point is pinned to q_max so endpoints are exact.
  double operator[](std::size_t i) const noexcept {
    return i + 1 == n_ ? q_max_ : q_min_ + static_cast<double>(i) * step_;
  }

  std::vector<double> points() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
  }

  /// Same interval with the step halved (2n - 1 points).
  Grid refined() const { return Grid(q_min_, q_max_, 2 * n_ - 1); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double q_min_;
  double q_max_;
  std::size_t n_;
  double step_ = 0.0;
};

inline Grid make_grid(double q_min, double q_max, long long n) {
  if (n < 5 || n % 2 == 0) {
    throw Error(ErrorKind::invalid_count,
                "grid point count must be odd and >= 5, got " + std::to_string(n));
  }
  return Grid(q_min, q_max, static_cast<std::size_t>(n));
}

/// Values of a function on the points of a grid.
template <typename T>
struct SampledFunction {
  Grid grid;
  std::vector<T> values;

  SampledFunction(Grid g, std::vector<T> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) {
      throw Error(ErrorKind::invalid_input, "sample count does not match grid size");
    }
  }

  std::size_t size() const noexcept { return values.size(); }
  const T& operator[](std::size_t i) const noexcept { return values[i]; }
  T& operator[](std::size_t i) noexcept { return values[i]; }
};

template <typename F>
auto sample(const Grid& grid, F&& f) {
  using T = std::decay_t<decltype(f(0.0))>;
  std::vector<T> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
  return SampledFunction<T>(grid, std::move(values));
}

/// Composite Simpson rule over the whole grid; exact for cubics.
template <typename T>
T integrate_simpson(const SampledFunction<T>& f) {
  const std::size_t n = f.size();
  T sum = f[0] + f[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  }
  return sum * f.grid.step() / 3.0;
}

/// Fourth-order differences: 5-point central stencils inside and one-sided
/// stencils on the two outermost points at each end (6-point when the grid has
/// at least 7 points, 5-point otherwise).
template <typename T>
SampledFunction<T> differentiate(const SampledFunction<T>& f, int order) {
  const std::size_t n = f.size();
  const double h = f.grid.step();
  const auto& v = f.values;
  std::vector<T> d(n);
  if (order == 1) {
    const double s = 1.0 / (12.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i) {
      d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) * s;
    }
    if (n >= 7) {
      const double t = 1.0 / (60.0 * h);
      d[0] = (-137.0 * v[0] + 300.0 * v[1] - 300.0 * v[2] + 200.0 * v[3] - 75.0 * v[4] +
              12.0 * v[5]) * t;
      d[1] = (-12.0 * v[0] - 65.0 * v[1] + 120.0 * v[2] - 60.0 * v[3] + 20.0 * v[4] - 3.0 * v[5]) * t;
      d[n - 2] = (12.0 * v[n - 1] + 65.0 * v[n - 2] - 120.0 * v[n - 3] + 60.0 * v[n - 4] -
                  20.0 * v[n - 5] + 3.0 * v[n - 6]) * t;
      d[n - 1] = (137.0 * v[n - 1] - 300.0 * v[n - 2] + 300.0 * v[n - 3] - 200.0 * v[n - 4] +
                  75.0 * v[n - 5] - 12.0 * v[n - 6]) * t;
    } else {
      d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * s;
      d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * s;
      d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) * s;
      d[n - 1] =
          (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] + 3.0 * v[n - 5]) * s;
    }
  } else if (order == 2) {
    const double s = 1.0 / (12.0 * h * h);
    for (std::size_t i = 2; i + 2 < n; ++i) {
      d[i] = (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) * s;
    }
    if (n >= 7) {
      // Six-point one-sided stencils keep the edges at O(h^4) like the interior.
      d[0] = (45.0 * v[0] - 154.0 * v[1] + 214.0 * v[2] - 156.0 * v[3] + 61.0 * v[4] - 10.0 * v[5]) * s;
      d[1] = (10.0 * v[0] - 15.0 * v[1] - 4.0 * v[2] + 14.0 * v[3] - 6.0 * v[4] + v[5]) * s;
      d[n - 2] = (10.0 * v[n - 1] - 15.0 * v[n - 2] - 4.0 * v[n - 3] + 14.0 * v[n - 4] -
                  6.0 * v[n - 5] + v[n - 6]) * s;
      d[n - 1] = (45.0 * v[n - 1] - 154.0 * v[n - 2] + 214.0 * v[n - 3] - 156.0 * v[n - 4] +
                  61.0 * v[n - 5] - 10.0 * v[n - 6]) * s;
    } else {
      d[0] = (35.0 * v[0] - 104.0 * v[1] + 114.0 * v[2] - 56.0 * v[3] + 11.0 * v[4]) * s;
      d[1] = (11.0 * v[0] - 20.0 * v[1] + 6.0 * v[2] + 4.0 * v[3] - v[4]) * s;
      d[n - 2] = (11.0 * v[n - 1] - 20.0 * v[n - 2] + 6.0 * v[n - 3] + 4.0 * v[n - 4] - v[n - 5]) * s;
      d[n - 1] =
          (35.0 * v[n - 1] - 104.0 * v[n - 2] + 114.0 * v[n - 3] - 56.0 * v[n - 4] + 11.0 * v[n - 5]) * s;
    }
  } else {
    throw Error(ErrorKind::invalid_input, "derivative order must be 1 or 2");
  }
  return SampledFunction<T>(f.grid, std::move(d));
}

/// L2 norm sqrt(int |f|^2 dq) by Simpson quadrature.
template <typename T>
double l2_norm(const SampledFunction<T>& f) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = std::norm(f[i]);
  return std::sqrt(integrate_simpson(SampledFunction<double>(f.grid, std::move(sq))));
}

struct OdeSolution {
  SampledFunction<double> x;
  /// Error of the returned (step h) solution: 16/15 max |x_h - x_{h/2}|.
  double error_estimate;
};

using OdeRhs = std::function<double(double q, double x)>;

namespace detail {

inline constexpr double ode_blowup = 1e150;

inline std::vector<double> rk4_march(const OdeRhs& rhs, double x0, const Grid& grid) {
  const std::size_t n = grid.size();
  const double h = grid.step();
  std::vector<double> xs(n);
  xs[0] = x0;
  double x = x0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double q = grid[i];
    const double k1 = rhs(q, x);
    const double k2 = rhs(q + 0.5 * h, x + 0.5 * h * k1);
    const double k3 = rhs(q + 0.5 * h, x + 0.5 * h * k2);
    const double k4 = rhs(q + h, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(x) || std::abs(x) > ode_blowup) {
      throw Error(ErrorKind::divergence,
                  "trajectory left the representable range near q=" + std::to_string(grid[i + 1]));
    }
    xs[i + 1] = x;
  }
  return xs;
}

}  // namespace detail

/// Fixed-step RK4 from grid.q_min with x(q_min) = x0, plus a step-halving
/// error estimate. Throws divergence when the trajectory runs into a pole.
inline OdeSolution solve_first_order_ode(const OdeRhs& rhs, double x0, const Grid& grid) {
  if (!std::isfinite(x0)) throw Error(ErrorKind::invalid_input, "initial value must be finite");
  auto coarse = detail::rk4_march(rhs, x0, grid);
  const auto fine = detail::rk4_march(rhs, x0, grid.refined());
  double err = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    err = std::max(err, std::abs(coarse[i] - fine[2 * i]));
  }
  return {SampledFunction<double>(grid, std::move(coarse)), err * 16.0 / 15.0};
}

}  // namespace anharmonic
