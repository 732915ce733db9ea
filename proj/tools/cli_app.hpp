#pragma once

// Command-line front end: construct, coherent, verify, generate, fit.
// Exit codes: 0 success, 1 verification or convergence failure, 2 usage or
// parameter error.

#include <algorithm>
#include <cctype>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anharmonic/anharmonic.hpp"

namespace anharmonic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr long long default_points = 4001;
inline constexpr const char* default_alphas = "0,0.1,0.1+0.2i";

struct RunConfig {
  std::vector<std::string> families;
  std::string form;
  std::vector<std::string> params;
  std::string alpha;
  std::string alphas;
  std::optional<double> q_min;
  std::optional<double> q_max;
  long long n = default_points;
  std::string grid;
  std::vector<std::string> tolerances;
  std::string out;
  std::string report;
  std::string emit = "csv";
  std::string data;
  long long order = 0;
};

/// Raised for problems with the invocation itself rather than the numerics.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using ParamMap = std::map<std::string, double>;

inline ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects name=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const auto value = parse_real(item.substr(eq + 1));
    if (!value) throw UsageError("--param " + key + ": not a number: '" + item.substr(eq + 1) + "'");
    if (!out.emplace(key, *value).second) throw UsageError("--param " + key + " given twice");
  }
  return out;
}

inline Tolerances parse_tolerances(const std::vector<std::string>& items) {
  Tolerances tol;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + item + "'");
    const auto value = parse_real(item.substr(eq + 1));
    if (!value) throw UsageError("--tol " + item.substr(0, eq) + ": not a number");
    tol.set(item.substr(0, eq), *value);
  }
  return tol;
}

inline complex parse_alpha(const std::string& text) {
  const auto z = parse_complex(text);
  if (!z) throw UsageError("cannot parse alpha '" + text + "' (expected a, a+bi or a-bi)");
  return *z;
}

inline std::vector<complex> parse_alpha_list(const std::string& text) {
  std::vector<complex> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_alpha(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct FamilySpec {
  const char* name;
  std::vector<std::pair<const char*, double>> defaults;
};

inline const std::vector<FamilySpec>& family_specs() {
  static const std::vector<FamilySpec> specs = {
      {"harmonic", {}},
      {"morse", {{"s", 1.0}, {"xe", 0.5}}},
      {"weihua", {{"c0", 0.2}, {"c1", 1.0}, {"c2", 0.5}}},
      {"kratzer", {{"c1", 0.5}}},
      {"gkratzer", {{"c0", 0.75}, {"c1", 0.5}}},
  };
  return specs;
}

inline OscillatorModel build_model(const std::string& family, const ParamMap& given) {
  const auto& specs = family_specs();
  const auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const FamilySpec& s) { return family == s.name; });
  if (it == specs.end()) {
    throw UsageError("unknown family '" + family +
                     "' (known: harmonic, morse, weihua, kratzer, gkratzer, all)");
  }
  ParamMap p;
  for (const auto& [k, v] : it->defaults) p[k] = v;
  for (const auto& [k, v] : given) {
    if (!p.count(k)) throw UsageError("parameter '" + k + "' is not defined for family " + family);
    p[k] = v;
  }
  if (family == "harmonic") return make_harmonic();
  if (family == "morse") return make_generalized_morse(p["s"], p["xe"]);
  if (family == "weihua") return make_wei_hua(p["c0"], p["c1"], p["c2"]);
  if (family == "kratzer") return make_kratzer_fues(p["c1"]);
  return make_generalized_kratzer_fues(p["c0"], p["c1"]);
}

/// The six reference models used by "--family all".
inline std::vector<OscillatorModel> desk_models() {
  return {make_harmonic(),
          make_generalized_morse(1.0, 0.5),
          make_generalized_morse(1.2, 0.125),
          make_wei_hua(0.2, 1.0, 0.5),
          make_kratzer_fues(0.5),
          make_generalized_kratzer_fues(0.75, 0.5)};
}

inline std::vector<OscillatorModel> models_from(const RunConfig& cfg) {
  if (cfg.families.empty()) throw UsageError("--family is required");
  const auto params = parse_params(cfg.params);
  std::vector<OscillatorModel> out;
  for (const auto& f : cfg.families) {
    if (f == "all") {
      if (!params.empty()) throw UsageError("--param cannot be combined with --family all");
      for (auto& m : desk_models()) out.push_back(std::move(m));
    } else {
      out.push_back(build_model(f, params));
    }
  }
  return out;
}

inline OscillatorModel single_model(const RunConfig& cfg) {
  if (cfg.families.size() != 1 || cfg.families.front() == "all") {
    throw UsageError("this command takes exactly one --family");
  }
  return models_from(cfg).front();
}

struct ResolvedGrid {
  Grid grid;
  Coverage coverage;
};

inline bool explicit_grid(const RunConfig& cfg) {
  if (!cfg.grid.empty() && cfg.grid != "auto") {
    throw UsageError("--grid accepts only 'auto', got '" + cfg.grid + "'");
  }
  if (cfg.q_min.has_value() != cfg.q_max.has_value()) {
    throw UsageError("--qmin and --qmax must be given together");
  }
  if (cfg.q_min && cfg.grid == "auto") throw UsageError("--grid auto conflicts with --qmin/--qmax");
  return cfg.q_min.has_value();
}

inline ResolvedGrid resolve_grid(const RunConfig& cfg, const OscillatorModel& model, complex alpha,
                                 std::ostream& err) {
  if (!explicit_grid(cfg)) return {auto_grid(model, alpha, cfg.n), Coverage::required};
  const Grid grid = make_grid(*cfg.q_min, *cfg.q_max, cfg.n);
  const WaveFunction psi(model, alpha);
  psi.check_grid(grid);
  if (!covers(psi, grid)) {
    err << "warning: edge magnitude of psi exceeds " << format_real(truncation_threshold)
        << " of its peak on [" << format_real(grid.q_min()) << ", " << format_real(grid.q_max())
        << "] for " << model.descriptor() << "\n";
  }
  return {grid, Coverage::unchecked};
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_input, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorKind::invalid_input, "failed writing '" + path + "'");
}

inline void header_pairs(std::ostringstream& os,
                         const std::vector<std::pair<std::string, double>>& pairs) {
  for (const auto& [k, v] : pairs) os << "# " << k << '=' << format_real(v) << '\n';
}

inline void grid_header(std::ostringstream& os, const Grid& g) {
  os << "# grid: q_min=" << format_real(g.q_min()) << ",q_max=" << format_real(g.q_max())
     << ",n=" << g.size() << '\n';
}

template <typename... T>
void row(std::ostringstream& os, double first, T... rest) {
  os << format_real(first);
  ((os << ',' << format_real(rest)), ...);
  os << '\n';
}

inline std::string script_path(const std::string& table) {
  std::filesystem::path p(table);
  p.replace_extension(".gp");
  return p.string();
}

/// gnuplot script next to the table; refers to it by file name only.
inline void write_plot_script(const std::string& table, const std::string& title,
                              const std::string& xlabel,
                              const std::vector<std::pair<int, std::string>>& columns,
                              std::ostream& out) {
  const std::string name = std::filesystem::path(table).filename().string();
  std::ostringstream os;
  os << "# gnuplot; run from the directory holding " << name << "\n";
  os << "set datafile separator ','\n";
  os << "set datafile commentschars '#'\n";
  os << "set key outside right\n";
  os << "set title '" << title << "' noenhanced\n";
  os << "set xlabel '" << xlabel << "'\n";
  os << "plot ";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << name << "' using 1:" << columns[i].first << " with lines title '"
       << columns[i].second << "' noenhanced";
  }
  os << "\npause -1\n";
  write_text(script_path(table), os.str(), out);
}

inline void check_emit(const RunConfig& cfg, bool plot_allowed) {
  if (cfg.emit != "csv" && cfg.emit != "report" && cfg.emit != "plotscript") {
    throw UsageError("--emit must be csv, report or plotscript, got '" + cfg.emit + "'");
  }
  if (cfg.emit == "plotscript") {
    if (!plot_allowed) throw UsageError("--emit plotscript is not available for this command");
    if (cfg.out.empty() || cfg.out == "-") throw UsageError("--emit plotscript needs --out");
  }
}

inline std::string report_target(const RunConfig& cfg) {
  return cfg.report.empty() ? cfg.out : cfg.report;
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_emit(cfg, true);
  if (cfg.emit == "report") throw UsageError("construct writes tables only");
  const auto model = single_model(cfg);
  const auto [grid, coverage] = resolve_grid(cfg, model, 0.0, err);
  std::ostringstream os;
  os << "# construct\n# model: " << model.descriptor() << '\n';
  header_pairs(os, model.derived_constants());
  grid_header(os, grid);
  os << "# columns: q,x,x_prime,v_minus_e0,psi0\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double q = grid[i];
    row(os, q, model.superpotential(q), model.superpotential_derivative(q),
        model.closed_form_potential(q), std::exp(model.log_ground_state(q)));
  }
  write_text(cfg.out, os.str(), out);
  if (cfg.emit == "plotscript") {
    write_plot_script(cfg.out, model.descriptor(), "q",
                      {{2, "x"}, {3, "x'"}, {4, "V - E0"}, {5, "psi0"}}, out);
  }
  return exit_ok;
}

inline int cmd_coherent(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_emit(cfg, true);
  const auto model = single_model(cfg);
  if (cfg.alpha.empty() && cfg.alphas.empty()) throw UsageError("--alpha is required");
  const auto list = parse_alpha_list(cfg.alpha.empty() ? cfg.alphas : cfg.alpha);
  if (list.size() != 1) throw UsageError("coherent takes exactly one alpha");
  const complex alpha = list.front();
  const auto tol = parse_tolerances(cfg.tolerances);
  coherent_state(model, alpha);  // admissibility before grid selection
  const auto [grid, coverage] = resolve_grid(cfg, model, alpha, err);
  const auto report = verify_coherent(model, alpha, grid, tol, coverage);
  const std::string report_text = to_json(report).dump(2) + "\n";

  if (cfg.emit == "report") {
    write_text(report_target(cfg), report_text, out);
  } else {
    const auto psi = normalize(coherent_state(model, alpha), grid, coverage);
    std::ostringstream os;
    os << "# coherent\n# model: " << model.descriptor() << "\n# alpha: " << format_complex(alpha)
       << '\n';
    header_pairs(os, model.derived_constants());
    os << "# norm=" << format_real(*psi.norm()) << '\n';
    grid_header(os, grid);
    os << "# columns: q,re_psi,im_psi,abs2_psi\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const complex v = psi(grid[i]);
      row(os, grid[i], v.real(), v.imag(), std::norm(v));
    }
    write_text(cfg.out, os.str(), out);
    if (cfg.emit == "plotscript") {
      write_plot_script(cfg.out, model.descriptor() + " alpha=" + format_complex(alpha), "q",
                        {{2, "Re psi"}, {3, "Im psi"}, {4, "|psi|^2"}}, out);
    }
    if (!cfg.report.empty()) write_text(cfg.report, report_text, out);
  }
  return report.all_pass() ? exit_ok : exit_failed;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_emit(cfg, false);
  const auto models = models_from(cfg);
  const auto tol = parse_tolerances(cfg.tolerances);
  const auto alphas = parse_alpha_list(
      !cfg.alphas.empty() ? cfg.alphas : (!cfg.alpha.empty() ? cfg.alpha : default_alphas));

  json runs = json::array();
  json skipped = json::array();
  std::ostringstream table;
  table << "# verify\n# columns: model,alpha,check,value,tolerance,pass\n";
  bool all_pass = true;
  auto record = [&](const VerificationReport& r) {
    runs.push_back(to_json(r));
    all_pass = all_pass && r.all_pass();
    for (const auto& c : r.checks) {
      table << '"' << r.model << "\"," << format_complex(r.alpha) << ',' << c.name << ','
            << format_real(c.value) << ',' << format_real(c.tolerance) << ','
            << (c.pass ? "pass" : "fail") << '\n';
    }
  };
  for (const auto& model : models) {
    const auto g0 = resolve_grid(cfg, model, 0.0, err);
    record(verify_model(model, g0.grid, tol, g0.coverage));
    for (const complex alpha : alphas) {
      if (!admissible(model, alpha)) {
        skipped.push_back(json{{"model", model.descriptor()},
                               {"alpha", format_complex(alpha)},
                               {"reason", "inadmissible"}});
        continue;
      }
      const auto g = resolve_grid(cfg, model, alpha, err);
      record(verify_coherent(model, alpha, g.grid, tol, g.coverage));
    }
  }
  json doc;
  doc["runs"] = std::move(runs);
  doc["skipped"] = std::move(skipped);
  doc["all_pass"] = all_pass;
  const std::string report_text = doc.dump(2) + "\n";
  if (cfg.emit == "report") {
    write_text(report_target(cfg), report_text, out);
  } else {
    write_text(cfg.out, table.str(), out);
    if (!cfg.report.empty()) write_text(cfg.report, report_text, out);
  }
  return all_pass ? exit_ok : exit_failed;
}

inline GeneratingSeries series_from(const RunConfig& cfg) {
  if (cfg.form.empty()) throw UsageError("--form is required");
  GeneratingSeries s;
  s.form = parse_series_form(cfg.form);
  for (const auto& [k, v] : parse_params(cfg.params)) {
    if (k == "c0") {
      s.c0 = v;
    } else if (k == "c1") {
      s.c1 = v;
    } else if (k == "c2") {
      s.c2 = v;
    } else if (k == "x0") {
      s.x0 = v;
    } else {
      throw UsageError("parameter '" + k + "' is not defined for series (c0, c1, c2, x0)");
    }
  }
  return s;
}

inline int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_emit(cfg, true);
  if (cfg.emit == "report") throw UsageError("generate writes tables only");
  const auto series = series_from(cfg);
  if (cfg.grid == "auto") throw UsageError("generate needs an explicit --qmax");
  if (!cfg.q_max) throw UsageError("--qmax is required");
  const double q_min = cfg.q_min.value_or(0.0);
  const Grid grid = make_grid(q_min, *cfg.q_max, cfg.n);
  const auto gen = superpotential_from_series(series, grid);

  std::optional<OscillatorModel> closed;
  std::string no_closed_reason;
  if (!series.uses_default_initial_value()) {
    no_closed_reason = "x0 differs from (1 - c0)/c1";
  } else {
    try {
      closed = closed_form_from_series(series);
      if (!(grid.q_min() > closed->domain().lower && grid.q_max() < closed->domain().upper)) {
        closed.reset();
        no_closed_reason = "grid leaves the closed-form domain";
      }
    } catch (const Error& e) {
      no_closed_reason = e.what();
    }
  }

  std::ostringstream os;
  os << "# generate\n# series: " << to_string(series.form) << "(c0=" << format_real(series.c0)
     << ",c1=" << format_real(series.c1) << ",c2=" << format_real(series.c2)
     << ",x0=" << format_real(series.initial_value()) << ")\n";
  os << "# error_estimate=" << format_real(gen.error_estimate) << '\n';
  if (gen.exceeds_unit_interval) os << "# note: |x| exceeds 1 on this grid\n";
  grid_header(os, grid);
  if (closed) {
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      dev = std::max(dev, std::abs(gen.x[i] - closed->superpotential(grid[i])));
    }
    os << "# closed_form: " << closed->descriptor() << '\n';
    os << "# max_deviation=" << format_real(dev) << '\n';
    os << "# columns: q,x,x_closed\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      row(os, grid[i], gen.x[i], closed->superpotential(grid[i]));
    }
  } else {
    os << "# closed_form: none (" << no_closed_reason << ")\n";
    os << "# columns: q,x\n";
    for (std::size_t i = 0; i < grid.size(); ++i) row(os, grid[i], gen.x[i]);
  }
  write_text(cfg.out, os.str(), out);
  if (cfg.emit == "plotscript") {
    std::vector<std::pair<int, std::string>> cols{{2, "x (integrated)"}};
    if (closed) cols.emplace_back(3, "x (closed form)");
    write_plot_script(cfg.out, std::string(to_string(series.form)) + " series", "q", cols, out);
  }
  return exit_ok;
}

inline int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_emit(cfg, true);
  if (cfg.data.empty()) throw UsageError("--data is required");
  if (cfg.order < 0) throw UsageError("--order must be >= 0");
  std::ifstream in(cfg.data);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot read '" + cfg.data + "'");
  const auto data = read_samples(in);
  const auto order = static_cast<std::size_t>(cfg.order);

  std::optional<ExpansionParams> init;
  const auto params = parse_params(cfg.params);
  if (!params.empty() && data.size() >= order + 3) {
    ExpansionParams p = initial_guess(data, order);
    if (auto s = params.find("s"); s != params.end()) {
      p.r_e = p.equilibrium() / (s->second + 1.0);
      p.s = s->second;
    }
    for (const auto& [k, v] : params) {
      if (k == "r_e") {
        p.r_e = v;
      } else if (k == "c0") {
        p.c0 = v;
      } else if (k == "s") {
        continue;
      } else if (k.size() > 1 && k[0] == 'c' && std::all_of(k.begin() + 1, k.end(),
                                                    [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
        const auto idx = std::stoul(k.substr(1));
        if (idx == 0 || idx > order) throw UsageError("'" + k + "' exceeds --order");
        p.c[idx - 1] = v;
      } else {
        throw UsageError("parameter '" + k + "' is not defined for fit (r_e, s, c0, c1..cN)");
      }
    }
    init = p;
  }
  const auto result = fit_expansion(data, order, init);

  if (cfg.emit == "report") {
    write_text(report_target(cfg), to_json(result).dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "# fit\n# data: " << std::filesystem::path(cfg.data).filename().string()
       << "\n# order=" << order << "\n# r_e=" << format_real(result.params.r_e)
       << "\n# s=" << format_real(result.params.s) << "\n# c0=" << format_real(result.params.c0)
       << '\n';
    for (std::size_t i = 0; i < order; ++i) {
      os << "# c" << i + 1 << '=' << format_real(result.params.c[i]) << '\n';
    }
    os << "# rss=" << format_real(result.rss) << "\n# scaled_rss=" << format_real(result.scaled_rss)
       << "\n# iterations=" << result.iterations
       << "\n# converged=" << (result.converged ? "true" : "false") << '\n';
    os << "# columns: r,v,v_fit\n";
    auto sorted = data;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.r < b.r; });
    for (const auto& d : sorted) row(os, d.r, d.v, eval_expansion(result.params, d.r));
    write_text(cfg.out, os.str(), out);
    if (cfg.emit == "plotscript") {
      write_plot_script(cfg.out, "expansion fit", "r", {{2, "data"}, {3, "fit"}}, out);
    }
    if (!cfg.report.empty()) write_text(cfg.report, to_json(result).dump(2) + "\n", out);
  }
  return result.converged ? exit_ok : exit_failed;
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::divergence:
    case ErrorKind::singular_jacobian: return exit_failed;
    default: return exit_usage;
  }
}

inline void add_grid_options(CLI::App* c, RunConfig& cfg) {
  c->add_option("--qmin", cfg.q_min, "Lower grid end");
  c->add_option("--qmax", cfg.q_max, "Upper grid end");
  c->add_option("--n", cfg.n, "Grid points (odd, >= 5)");
}

inline void add_output_options(CLI::App* c, RunConfig& cfg) {
  c->add_option("--out", cfg.out, "Output file (default stdout)");
  c->add_option("--emit", cfg.emit, "csv, report or plotscript");
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  RunConfig cfg;
  CLI::App app{"Supersymmetric ladder operators and coherent states of anharmonic oscillators",
               "anharmonic"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Tabulate x, x', V - E0 and psi0 for a model");
  auto* coherent = app.add_subcommand("coherent", "Tabulate a normalized coherent state and verify it");
  auto* verify = app.add_subcommand("verify", "Run the verification suite over models and alphas");
  auto* generate = app.add_subcommand("generate", "Integrate dx/dq = -f(x) for a generating series");
  auto* fit = app.add_subcommand("fit", "Fit the Kratzer-Fues type expansion to r,v samples");

  for (auto* c : {construct, coherent, verify}) {
    c->add_option("--family", cfg.families, "harmonic, morse, weihua, kratzer, gkratzer (or all)");
    c->add_option("--param", cfg.params, "Model parameter name=value");
    c->add_option("--grid", cfg.grid, "'auto' for the truncation rule");
    add_grid_options(c, cfg);
  }
  for (auto* c : {coherent, verify}) {
    c->add_option("--alpha", cfg.alpha, "Coherent-state label a, a+bi or a-bi");
    c->add_option("--tol", cfg.tolerances, "Tolerance override name=value");
    c->add_option("--report", cfg.report, "JSON report file");
  }
  verify->add_option("--alphas", cfg.alphas, "Comma-separated alpha list");
  generate->add_option("--form", cfg.form, "constant, linear, parabolic, squared-linear");
  generate->add_option("--param", cfg.params, "Series coefficient c0, c1, c2 or x0 as name=value");
  generate->add_option("--grid", cfg.grid, "Not supported; give --qmax");
  add_grid_options(generate, cfg);
  fit->add_option("--data", cfg.data, "File of r,v rows");
  fit->add_option("--order", cfg.order, "Number of c_n terms");
  fit->add_option("--param", cfg.params, "Initial value r_e, s, c0 or cN as name=value");
  fit->add_option("--report", cfg.report, "JSON result file");
  for (auto* c : {construct, coherent, verify, generate, fit}) add_output_options(c, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*construct) return cmd_construct(cfg, out, err);
    if (*coherent) return cmd_coherent(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*generate) return cmd_generate(cfg, out, err);
    return cmd_fit(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace anharmonic::cli
