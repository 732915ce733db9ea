#pragma once

// Generalized Kratzer-Fues expansion
//   V(r) = c0 u^2 (1 + sum_n c_n u^n),  u = (r - r_e(s+1)) / r
// and a damped least-squares fit of it to sampled potential points.
//
// r_e and s enter V only through rho = r_e(s+1), so the fit holds s at its
// initial value and adjusts r_e, c0, c_1..c_N.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anharmonic/error.hpp"
#include "anharmonic/format.hpp"

namespace anharmonic {

struct PotentialSample {
  double r;
  double v;
};

struct ExpansionParams {
  double r_e = 1.0;
  double s = 0.0;
  double c0 = 1.0;
  std::vector<double> c;  // c_1..c_N

  std::size_t order() const noexcept { return c.size(); }
  double equilibrium() const noexcept { return r_e * (s + 1.0); }
};

struct FitResult {
  ExpansionParams params;
  double rss = 0.0;
  int iterations = 0;
  bool converged = false;
  /// rss divided by the sum of squared deviations of the data from its mean.
  double scaled_rss = 0.0;
  /// rss of the starting point and after every accepted step.
  std::vector<double> rss_history;
};

namespace detail {

inline void check_params(const ExpansionParams& p) {
  if (!(std::isfinite(p.r_e) && p.r_e > 0.0)) {
    throw Error(ErrorKind::invalid_params, "requires r_e > 0, got r_e=" + format_real(p.r_e));
  }
  if (!(std::isfinite(p.s) && p.s > -1.0)) {
    throw Error(ErrorKind::invalid_params, "requires s > -1, got s=" + format_real(p.s));
  }
  if (!(std::isfinite(p.c0) && p.c0 > 0.0)) {
    throw Error(ErrorKind::invalid_params, "requires c0 > 0, got c0=" + format_real(p.c0));
  }
  for (double cn : p.c) {
    if (!std::isfinite(cn)) throw Error(ErrorKind::invalid_params, "c_n must be finite");
  }
}

inline void check_r(double r) {
  if (!(std::isfinite(r) && r > 0.0)) {
    throw Error(ErrorKind::invalid_input, "requires r > 0, got r=" + format_real(r));
  }
}

/// 1 + sum c_n u^n and its derivative in u.
inline std::pair<double, double> tail(const ExpansionParams& p, double u) {
  double value = 0.0;
  double slope = 0.0;
  for (std::size_t k = p.c.size(); k-- > 0;) {
    // Horner on sum_{n>=1} c_n u^(n-1), then multiply by u.
    slope = slope * u + value;
    value = value * u + p.c[k];
  }
  return {1.0 + value * u, value + slope * u};
}

}  // namespace detail

inline double eval_expansion(const ExpansionParams& p, double r) {
  detail::check_r(r);
  const double u = (r - p.equilibrium()) / r;
  return p.c0 * u * u * detail::tail(p, u).first;
}

/// Lower end of the convergence region R in [r_e(s+1)/2, inf).
inline double convergence_radius_lower(double r_e, double s) {
  if (!(std::isfinite(r_e) && r_e > 0.0)) {
    throw Error(ErrorKind::invalid_params, "requires r_e > 0, got r_e=" + format_real(r_e));
  }
  if (!(std::isfinite(s) && s > -1.0)) {
    throw Error(ErrorKind::invalid_params, "requires s > -1, got s=" + format_real(s));
  }
  return r_e * (s + 1.0) / 2.0;
}

/// dV/d(r_e, s, c0, c_1..c_N) at r.
inline std::vector<double> expansion_gradient(const ExpansionParams& p, double r) {
  detail::check_r(r);
  const double u = (r - p.equilibrium()) / r;
  const auto [t, dt] = detail::tail(p, u);
  // dV/du = c0 (2u t + u^2 t'), du/dr_e = -(s+1)/r, du/ds = -r_e/r.
  const double dv_du = p.c0 * (2.0 * u * t + u * u * dt);
  std::vector<double> g;
  g.reserve(3 + p.c.size());
  g.push_back(dv_du * (-(p.s + 1.0) / r));
  g.push_back(dv_du * (-p.r_e / r));
  g.push_back(u * u * t);
  double un = u * u;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    un *= u;
    g.push_back(p.c0 * un);
  }
  return g;
}

namespace detail {

inline double residual_sum(const std::vector<PotentialSample>& data, const ExpansionParams& p) {
  double rss = 0.0;
  for (const auto& d : data) {
    const double e = eval_expansion(p, d.r) - d.v;
    rss += e * e;
  }
  return rss;
}

}  // namespace detail

/// Starting point: rho from a parabola through the three lowest samples,
/// c0 from the mean of the samples in the top decile of r.
inline ExpansionParams initial_guess(std::vector<PotentialSample> data, std::size_t order) {
  std::sort(data.begin(), data.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  std::size_t k = 0;
  for (std::size_t i = 1; i < data.size(); ++i) {
    if (data[i].v < data[k].v) k = i;
  }
  double rho = data[k].r;
  if (k > 0 && k + 1 < data.size()) {
    const double x0 = data[k - 1].r, x1 = data[k].r, x2 = data[k + 1].r;
    const double y0 = data[k - 1].v, y1 = data[k].v, y2 = data[k + 1].v;
    const double den = (x0 - x1) * (y0 - y2) - (x0 - x2) * (y0 - y1);
    if (den != 0.0) {
      const double num = (x0 - x1) * (x0 - x1) * (y0 - y2) - (x0 - x2) * (x0 - x2) * (y0 - y1);
      const double vertex = x0 - 0.5 * num / den;
      if (vertex > x0 && vertex < x2) rho = vertex;
    }
  }
  const std::size_t top = std::max<std::size_t>(1, data.size() / 10);
  double plateau = 0.0;
  for (std::size_t i = data.size() - top; i < data.size(); ++i) plateau += data[i].v;
  plateau /= static_cast<double>(top);

  ExpansionParams p;
  p.r_e = rho > 0.0 ? rho : data.front().r;
  p.s = 0.0;
  p.c0 = plateau > 0.0 ? plateau : 1.0;
  p.c.assign(order, 0.0);
  return p;
}

struct FitOptions {
  int max_iterations = 500;
  double rss_tolerance = 1e-12;   // relative rss change
  double step_tolerance = 1e-12;  // step norm relative to parameter norm
  double damping_cap = 1e20;
};

/// Levenberg-Marquardt over (r_e, c0, c_1..c_N) with s fixed.
inline FitResult fit_expansion(const std::vector<PotentialSample>& data, std::size_t order,
                               const std::optional<ExpansionParams>& init = std::nullopt,
                               const FitOptions& opt = {}) {
  const std::size_t m = order + 3;
  if (data.size() < m) {
    throw Error(ErrorKind::underdetermined, std::to_string(data.size()) + " samples for " +
                                                std::to_string(m) + " parameters");
  }
  for (const auto& d : data) {
    detail::check_r(d.r);
    if (!std::isfinite(d.v)) throw Error(ErrorKind::invalid_input, "non-finite potential value");
  }
  const bool spread = std::any_of(data.begin(), data.end(),
                                  [&](const PotentialSample& d) { return d.r != data.front().r; });
  if (!spread) throw Error(ErrorKind::underdetermined, "all samples share one r");

  ExpansionParams p = init ? *init : initial_guess(data, order);
  if (p.c.size() != order) {
    throw Error(ErrorKind::invalid_params, "initial guess has " + std::to_string(p.c.size()) +
                                               " c_n, expected " + std::to_string(order));
  }
  detail::check_params(p);

  const std::size_t k = order + 2;  // free parameters
  auto pack = [&](const ExpansionParams& q) {
    Eigen::VectorXd v(k);
    v[0] = q.r_e;
    v[1] = q.c0;
    for (std::size_t i = 0; i < order; ++i) v[2 + i] = q.c[i];
    return v;
  };
  auto unpack = [&](const Eigen::VectorXd& v) {
    ExpansionParams q = p;
    q.r_e = v[0];
    q.c0 = v[1];
    for (std::size_t i = 0; i < order; ++i) q.c[i] = v[2 + i];
    return q;
  };

  double mean = 0.0;
  for (const auto& d : data) mean += d.v;
  mean /= static_cast<double>(data.size());
  double spread_sq = 0.0;
  for (const auto& d : data) spread_sq += (d.v - mean) * (d.v - mean);

  double rss = detail::residual_sum(data, p);
  double lambda = 1e-3;
  FitResult result;
  result.rss_history.push_back(rss);
  const std::size_t n = data.size();
  Eigen::MatrixXd J(n, k);
  Eigen::VectorXd res(n);

  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto g = expansion_gradient(p, data[i].r);
      J(i, 0) = g[0];
      for (std::size_t j = 1; j < k; ++j) J(i, j) = g[j + 1];
      res[i] = eval_expansion(p, data[i].r) - data[i].v;
    }
    if (rss == 0.0) {
      result.converged = true;
      break;
    }
    const Eigen::MatrixXd jtj = J.transpose() * J;
    const Eigen::VectorXd grad = J.transpose() * res;
    const Eigen::VectorXd diag = jtj.diagonal().cwiseMax(1e-300);
    const Eigen::VectorXd theta = pack(p);

    bool accepted = false;
    bool done = false;
    while (!accepted) {
      Eigen::MatrixXd a = jtj;
      a.diagonal() += lambda * diag;
      const Eigen::VectorXd step = a.ldlt().solve(-grad);
      if (!step.allFinite()) {
        lambda *= 10.0;
        if (lambda > opt.damping_cap) {
          throw Error(ErrorKind::singular_jacobian, "damping reached its cap without progress");
        }
        continue;
      }
      const double step_norm = step.norm() / std::max(theta.norm(), 1e-300);
      const ExpansionParams trial = unpack(theta + step);
      const bool valid = trial.r_e > 0.0 && trial.c0 > 0.0;
      const double trial_rss = valid ? detail::residual_sum(data, trial) : HUGE_VAL;
      if (valid && trial_rss <= rss) {
        const double change = (rss - trial_rss) / rss;
        p = trial;
        rss = trial_rss;
        result.rss_history.push_back(rss);
        lambda = std::max(lambda / 10.0, 1e-15);
        accepted = true;
        if (change < opt.rss_tolerance || step_norm < opt.step_tolerance) done = true;
      } else if (step_norm < opt.step_tolerance) {
        // No representable improvement left.
        accepted = true;
        done = true;
      } else {
        lambda *= 10.0;
        if (lambda > opt.damping_cap) {
          throw Error(ErrorKind::singular_jacobian, "damping reached its cap without progress");
        }
      }
    }
    if (done) {
      result.converged = true;
      ++it;
      break;
    }
  }
  result.params = p;
  result.rss = rss;
  result.iterations = it;
  result.scaled_rss = spread_sq > 0.0 ? rss / spread_sq : rss;
  return result;
}

/// Reads comma-separated "r,v" rows; '#' starts a comment and a leading
/// "r,v" column line is skipped.
inline std::vector<PotentialSample> read_samples(std::istream& in) {
  std::vector<PotentialSample> out;
  std::string line;
  std::size_t lineno = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (!seen_row && (line == "r,v" || line == "r, v")) {
      seen_row = true;
      continue;
    }
    seen_row = true;
    const auto comma = line.find(',');
    auto bad = [&] {
      return Error(ErrorKind::invalid_input,
                   "line " + std::to_string(lineno) + ": expected 'r,v', got '" + line + "'");
    };
    if (comma == std::string::npos) throw bad();
    auto field = [](std::string f) {
      const auto a = f.find_first_not_of(" \t");
      const auto b = f.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
    };
    const auto r = parse_real(field(line.substr(0, comma)));
    const auto v = parse_real(field(line.substr(comma + 1)));
    if (!r || !v) throw bad();
    out.push_back({*r, *v});
  }
  return out;
}

}  // namespace anharmonic
