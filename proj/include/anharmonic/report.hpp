#pragma once

// Structured (JSON) forms of verification reports and fit results.

#include <string>

#include <json.hpp>

#include "anharmonic/fit.hpp"
#include "anharmonic/format.hpp"
#include "anharmonic/verify.hpp"

namespace anharmonic {

using json = nlohmann::ordered_json;

inline json to_json(const Check& c) {
  return json{{"name", c.name},
              {"value", c.value},
              {"tolerance_name", c.tolerance_name},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
}

inline json to_json(const VerificationReport& r) {
  json out;
  out["model"] = r.model;
  out["alpha"] = format_complex(r.alpha);
  out["grid"] = json{{"q_min", r.q_min}, {"q_max", r.q_max}, {"n", r.n}};
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  json q = json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  out["quantities"] = std::move(q);
  out["all_pass"] = r.all_pass();
  return out;
}

inline json to_json(const ExpansionParams& p) {
  json c = json::array();
  for (double v : p.c) c.push_back(v);
  return json{{"r_e", p.r_e}, {"s", p.s}, {"c0", p.c0}, {"c", std::move(c)}};
}

inline json to_json(const FitResult& f) {
  return json{{"params", to_json(f.params)},
              {"equilibrium", f.params.equilibrium()},
              {"rss", f.rss},
              {"scaled_rss", f.scaled_rss},
              {"iterations", f.iterations},
              {"converged", f.converged}};
}

}  // namespace anharmonic
