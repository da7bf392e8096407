#include "lowscat/cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lowscat/analytic.hpp"
#include "lowscat/errors.hpp"
#include "lowscat/observables.hpp"
#include "lowscat/potential.hpp"
#include "lowscat/reference_data.hpp"
#include "lowscat/solver.hpp"
#include "lowscat/tuner.hpp"
#include "lowscat/units.hpp"

namespace lowscat::cli {

namespace {

using nlohmann::json;

std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Deterministic output: every float is rounded to 10 significant digits.
double round10(double x) { return std::strtod(fmt10(x).c_str(), nullptr); }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json a_to_json(const observables::ScatteringLength& a) {
  if (a.unitary) return a.value < 0.0 ? "unitary-" : "unitary+";
  return round10(a.value);
}

json observables_to_json(const observables::ScatteringObservables& obs) {
  json j;
  j["a"] = a_to_json(obs.a);
  if (obs.r0.has_value()) {
    j["r0"] = round10(*obs.r0);
  } else {
    j["r0"] = nullptr;
  }
  j["nodes"] = obs.nodes;
  j["dr"] = round10(obs.dr);
  j["method"] = solver::method_name(obs.method);
  j["rule"] = quadrature::rule_name(obs.rule);
  return j;
}

json potential_to_json(const potentials::PotentialSpec& spec) {
  return json::parse(potentials::potential_to_json_text(spec));
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open output file: " + path);
  f << text << "\n";
  if (!f) throw IoError("write failed: " + path);
}

// Flags shared by the commands that take a potential plus solver settings.
struct CommonOpts {
  std::string potential;
  double v = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  double c12 = 0.0;
  double c6 = 0.0;
  std::string file;
  std::string config_path;
  double dr = policy::default_dr;
  std::string method = "numerov";
  std::string rule = "simpson";
  double epsilon_tail = policy::default_epsilon_tail;
  double core_threshold = policy::default_core_threshold;
  double max_radius = policy::default_max_radius;
  std::string out_path;

  CLI::Option* opt_v = nullptr;
  CLI::Option* opt_mu = nullptr;
  CLI::Option* opt_lambda = nullptr;
  CLI::Option* opt_c12 = nullptr;
  CLI::Option* opt_c6 = nullptr;

  void attach(CLI::App* cmd, bool with_potential = true) {
    if (with_potential) {
      cmd->add_option("--potential", potential,
                      "family: well|mpt|gaussian|lennard-jones|tabulated");
      opt_v = cmd->add_option("--v", v, "depth parameter");
      opt_mu = cmd->add_option("--mu", mu, "inverse range parameter");
      opt_lambda = cmd->add_option("--lambda", lambda, "mPT lambda (alternative to --v)");
      opt_c12 = cmd->add_option("--c12", c12, "Lennard-Jones repulsive constant");
      opt_c6 = cmd->add_option("--c6", c6, "Lennard-Jones attractive constant");
      cmd->add_option("--file", file, "potential spec JSON file");
    }
    cmd->add_option("--config", config_path, "JSON config file (same keys as flags)");
    cmd->add_option("--dr", dr, "grid step (dimensionless)");
    cmd->add_option("--method", method, "numerov|central");
    cmd->add_option("--rule", rule, "simpson|trapezoid");
    cmd->add_option("--epsilon-tail", epsilon_tail, "tail threshold for R");
    cmd->add_option("--core-threshold", core_threshold, "hard-core threshold for r_min");
    cmd->add_option("--max-radius", max_radius, "range search bound");
    cmd->add_option("--out", out_path, "output file (default stdout)");
  }

  // --config supplies defaults; explicit flags win.
  void merge_config() {
    if (config_path.empty()) return;
    std::ifstream f(config_path);
    if (!f) throw IoError("cannot open config file: " + config_path);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw InvalidArgumentError(std::string("config parse error: ") + e.what());
    }
    const auto take = [&](const char* key, auto& slot, CLI::Option* opt) {
      if (j.contains(key) && (opt == nullptr || opt->count() == 0)) {
        j.at(key).get_to(slot);
      }
    };
    if (j.contains("potential") && potential.empty()) j.at("potential").get_to(potential);
    take("v", v, opt_v);
    take("mu", mu, opt_mu);
    take("lambda", lambda, opt_lambda);
    take("c12", c12, opt_c12);
    take("c6", c6, opt_c6);
    if (j.contains("file") && file.empty()) j.at("file").get_to(file);
    if (j.contains("dr")) j.at("dr").get_to(dr);
    if (j.contains("method")) j.at("method").get_to(method);
    if (j.contains("rule")) j.at("rule").get_to(rule);
    if (j.contains("epsilon_tail")) j.at("epsilon_tail").get_to(epsilon_tail);
    if (j.contains("core_threshold")) j.at("core_threshold").get_to(core_threshold);
  }

  potentials::PotentialSpec build_potential() const {
    if (!file.empty()) {
      std::ifstream f(file);
      if (!f) throw IoError("cannot open potential file: " + file);
      std::stringstream ss;
      ss << f.rdbuf();
      return potentials::potential_from_json_text(ss.str());
    }
    if (potential.empty()) {
      throw InvalidArgumentError("no potential given (--potential or --file)");
    }
    const auto family = potentials::family_from_name(potential);
    switch (family) {
      case potentials::Family::spherical_well:
        return potentials::PotentialSpec::spherical_well(v, mu);
      case potentials::Family::modified_poschl_teller:
        if (opt_lambda != nullptr && opt_lambda->count() > 0) {
          return potentials::PotentialSpec::modified_poschl_teller_lambda(lambda, mu);
        }
        return potentials::PotentialSpec::modified_poschl_teller(v, mu);
      case potentials::Family::gaussian:
        return potentials::PotentialSpec::gaussian(v, mu);
      case potentials::Family::lennard_jones:
        return potentials::PotentialSpec::lennard_jones(c12, c6);
      case potentials::Family::tabulated:
        throw InvalidArgumentError("tabulated potentials need --file");
    }
    throw InvalidArgumentError("bad potential family");
  }

  observables::SolverConfig solver_config() const {
    observables::SolverConfig cfg;
    cfg.dr = dr;
    cfg.method = solver::method_from_name(method);
    cfg.rule = quadrature::rule_from_name(rule);
    return cfg;
  }

  potentials::RangeOptions range_options() const {
    return {epsilon_tail, core_threshold, max_radius};
  }
};

int cmd_compute(const CommonOpts& opts, std::ostream& out) {
  const auto spec = opts.build_potential();
  const auto range = potentials::derive_range(spec, opts.range_options());
  const auto obs = observables::compute_observables(spec, range, opts.solver_config());
  json j = observables_to_json(obs);
  j["potential"] = potential_to_json(spec);
  j["R"] = round10(range.R);
  if (range.r_min > 0.0) j["r_min"] = round10(range.r_min);
  write_output(j.dump(), opts.out_path, out);
  return 0;
}

int cmd_wavefunction(const CommonOpts& opts, std::ostream& out) {
  const auto spec = opts.build_potential();
  const auto range = potentials::derive_range(spec, opts.range_options());
  const auto cfg = opts.solver_config();
  auto sol = solver::integrate(spec, range, 0, 0.0, cfg.dr, cfg.method);
  const auto a = observables::classify_scattering_length(
      observables::scattering_length(sol), range.R);
  if (a.is_zero()) {
    // no g = 1 - r/a tail to match; scale to unit slope instead
    const double c = sol.R / sol.u_at_R();
    for (double& x : sol.u) x *= c;
    sol.normalized = true;
  } else {
    sol = observables::normalize(sol, a);
  }
  std::string text = "r,u";
  for (std::size_t i = 0; i < sol.u.size(); ++i) {
    text += "\n";
    text += fmt17(sol.r(i));
    text += ",";
    text += fmt17(sol.u[i]);
  }
  write_output(text, opts.out_path, out);
  return 0;
}

int cmd_phaseshift(const CommonOpts& opts, int l, double k_single, double k_min,
                   double k_max, int k_points, const std::string& format,
                   std::ostream& out) {
  const auto spec = opts.build_potential();
  const auto range = potentials::derive_range(spec, opts.range_options());
  const auto cfg = opts.solver_config();

  std::vector<double> ks;
  if (k_single > 0.0) {
    ks.push_back(k_single);
  } else {
    if (!(k_min > 0.0) || !(k_max >= k_min) || k_points < 1) {
      throw InvalidArgumentError("phaseshift: need --k or a valid --kmin/--kmax/--points");
    }
    for (int i = 0; i < k_points; ++i) {
      ks.push_back(k_points == 1
                       ? k_min
                       : k_min + (k_max - k_min) * i / static_cast<double>(k_points - 1));
    }
  }

  const auto obs = observables::compute_observables(spec, range, cfg);
  std::vector<observables::PhaseShiftResult> results;
  results.reserve(ks.size());
  for (const double k : ks) {
    results.push_back(observables::phase_shift(spec, range, l, k, cfg.dr, cfg.method));
  }
  // unwrap: shift by multiples of pi so delta(k) is continuous along the scan
  for (std::size_t i = 1; i < results.size(); ++i) {
    const double prev = results[i - 1].delta;
    double d = results[i].delta;
    d -= std::numbers::pi * std::round((d - prev) / std::numbers::pi);
    results[i].delta = d;
  }

  const bool have_expansion = !obs.a.is_zero() && obs.r0.has_value();
  if (format == "csv") {
    std::string text = "k,delta,cot_delta,kcot,kcot_expansion";
    for (const auto& r : results) {
      text += "\n" + fmt10(r.k) + "," + fmt10(r.delta) + "," + fmt10(r.cot_delta) + "," +
              fmt10(r.kcot) + ",";
      text += have_expansion ? fmt10(observables::kcot_expansion(obs.a, *obs.r0, r.k)) : "";
    }
    write_output(text, opts.out_path, out);
  } else {
    json rows = json::array();
    for (const auto& r : results) {
      json row;
      row["k"] = round10(r.k);
      row["l"] = r.l;
      row["beta"] = round10(r.beta);
      row["delta"] = round10(r.delta);
      row["cot_delta"] = std::isfinite(r.cot_delta) ? json(round10(r.cot_delta))
                                                    : json(r.cot_delta > 0 ? "inf" : "-inf");
      row["kcot"] = std::isfinite(r.kcot) ? json(round10(r.kcot)) : json(nullptr);
      if (have_expansion) {
        row["kcot_expansion"] = round10(observables::kcot_expansion(obs.a, *obs.r0, r.k));
      }
      rows.push_back(row);
    }
    json j;
    j["potential"] = potential_to_json(spec);
    j["a"] = a_to_json(obs.a);
    if (obs.r0.has_value()) j["r0"] = round10(*obs.r0);
    j["phase_shifts"] = rows;
    write_output(j.dump(), opts.out_path, out);
  }
  return 0;
}

int cmd_scan(const CommonOpts& opts, const std::string& vary, double from, double to,
             int points, std::ostream& out) {
  const auto spec = opts.build_potential();
  const auto param = tuner::varied_param_from_name(vary);
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? from
                               : from + (to - from) * i / static_cast<double>(points - 1));
  }
  const auto rows = tuner::scan(spec, param, grid, opts.solver_config(), opts.range_options());
  std::string text = vary + ",a,r0,nodes,diverging,error";
  for (const auto& row : rows) {
    text += "\n" + fmt10(row.param) + ",";
    if (row.ok) {
      text += (row.obs.a.unitary ? (row.obs.a.value < 0 ? std::string("unitary-")
                                                        : std::string("unitary+"))
                                 : fmt10(row.obs.a.value)) +
              "," + (row.obs.r0 ? fmt10(*row.obs.r0) : std::string()) + "," +
              std::to_string(row.obs.nodes) + "," + (row.divergence_flag ? "1" : "0") + ",";
    } else {
      text += ",,,," + row.error;
    }
  }
  write_output(text, opts.out_path, out);
  return 0;
}

int cmd_tune(const CommonOpts& opts, const std::string& family_name,
             const std::string& target_a, double target_r0, int nodes, double tol_a,
             double tol_r0, int max_outer, bool trace, std::ostream& out) {
  const auto family = potentials::family_from_name(family_name);
  tuner::TuneTarget target;
  if (target_a == "unitary" || target_a == "unitary+" || target_a == "unitary-") {
    target.a_target = {target_a == "unitary-" ? -1e30 : 1e30, true};
  } else {
    try {
      target.a_target = {std::stod(target_a), false};
    } catch (const std::exception&) {
      throw InvalidArgumentError("tune: --target-a must be a number or 'unitary'");
    }
  }
  target.r0_target = target_r0;
  target.desired_nodes = nodes;
  target.tol_a = tol_a;
  target.tol_r0 = tol_r0;
  target.max_outer_iterations = max_outer;

  potentials::PotentialSpec initial = tuner::default_cold_start(family, target);
  const bool has_guess = (opts.opt_v && opts.opt_v->count()) ||
                         (opts.opt_c6 && opts.opt_c6->count());
  if (has_guess) {
    initial = opts.build_potential();
  }

  const auto result = tuner::tune(family, initial, target, opts.solver_config(),
                                  opts.range_options(), trace);
  json j;
  j["potential"] = potential_to_json(result.spec);
  j["achieved"] = observables_to_json(result.achieved);
  j["outer_iterations"] = result.outer_iterations;
  j["converged"] = result.converged;
  if (trace) {
    json hist = json::array();
    for (const auto& t : result.trace) {
      hist.push_back({{"outer", t.outer},
                      {"v1", round10(t.v1)},
                      {"v2", round10(t.v2)},
                      {"a", t.a_unitary ? json(t.a < 0 ? "unitary-" : "unitary+")
                                        : json(round10(t.a))},
                      {"r0", round10(t.r0)},
                      {"nodes", t.nodes}});
    }
    j["trace"] = hist;
  }
  write_output(j.dump(), opts.out_path, out);
  return 0;
}

int cmd_bound(const std::string& preset, double a, double r0, const std::string& unit_name,
              const std::string& mass, const std::string& out_path, std::ostream& out) {
  double a_val = a;
  double r0_val = r0;
  std::string unit = unit_name;
  std::string mass_name = mass;
  if (!preset.empty()) {
    bool found = false;
    for (const auto& row : reference::table1) {
      if (preset == row.system) {
        a_val = row.a;
        r0_val = row.r0;
        unit = row.unit;
        mass_name = row.mass_preset;
        found = true;
      }
    }
    if (!found) throw InvalidArgumentError("unknown preset: " + preset);
  }
  const auto lu = units::length_unit_from_name(unit);
  double mass_c2 = 1.0;
  if (lu != units::LengthUnit::dimensionless || !mass_name.empty()) {
    try {
      mass_c2 = units::reduced_mass_c2_preset(mass_name);
    } catch (const InvalidArgumentError&) {
      try {
        mass_c2 = std::stod(mass_name);
      } catch (const std::exception&) {
        throw InvalidArgumentError("bound: --mass must be nn|np|he4-dimer or a MeV value");
      }
    }
  }
  const auto scale = units::make_scale(1.0, lu, mass_c2);
  const auto est = observables::bound_state_energies(a_val, r0_val, scale);
  json j;
  j["a"] = round10(a_val);
  j["r0"] = round10(r0_val);
  j["unit"] = units::length_unit_name(lu);
  j["kappa"] = round10(est.kappa);
  j["e_zr_mev"] = round10(est.e_zr);
  j["e_fr_mev"] = round10(est.e_fr);
  if (lu == units::LengthUnit::angstrom) {
    j["e_zr_mk"] = round10(units::mev_to_millikelvin(est.e_zr));
    j["e_fr_mk"] = round10(units::mev_to_millikelvin(est.e_fr));
  }
  write_output(j.dump(), out_path, out);
  return 0;
}

potentials::PotentialSpec row_spec(const reference::AttractiveRow& row) {
  switch (row.family) {
    case potentials::Family::spherical_well:
      return potentials::PotentialSpec::spherical_well(row.v, row.mu);
    case potentials::Family::modified_poschl_teller:
      return potentials::PotentialSpec::modified_poschl_teller(row.v, row.mu);
    default:
      return potentials::PotentialSpec::gaussian(row.v, row.mu);
  }
}

bool row_matches(const observables::ScatteringObservables& obs, bool a_unitary,
                 double a_expected, double a_tol_rel, double a_tol_abs, double r0_expected,
                 double r0_tol) {
  bool a_ok;
  if (a_unitary) {
    a_ok = std::abs(obs.a.inverse()) < reference::unitary_inv_a_bound / r0_expected;
  } else if (obs.a.unitary) {
    a_ok = false;
  } else if (a_tol_abs > 0.0) {
    a_ok = std::abs(obs.a.value - a_expected) <= a_tol_abs;
  } else {
    a_ok = std::abs(obs.a.value - a_expected) <= a_tol_rel * std::abs(a_expected);
  }
  const bool r0_ok = obs.r0.has_value() && std::abs(*obs.r0 - r0_expected) <= r0_tol;
  return a_ok && r0_ok;
}

int cmd_table(int which, const std::string& verify_path, const CommonOpts& opts,
              std::ostream& out) {
  char buf[256];
  bool all_ok = true;

  if (!verify_path.empty()) {
    // Round-trip: a compute result (with its potential provenance block) is
    // checked against the matching benchmark row.
    std::ifstream f(verify_path);
    if (!f) throw IoError("cannot open verify file: " + verify_path);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw InvalidArgumentError(std::string("verify JSON parse error: ") + e.what());
    }
    const auto spec = potentials::potential_from_json_text(j.at("potential").dump());
    observables::ScatteringObservables obs;
    if (j.at("a").is_string()) {
      const std::string s = j.at("a").get<std::string>();
      obs.a = {s == "unitary-" ? -1e30 : 1e30, true};
    } else {
      obs.a = {j.at("a").get<double>(), false};
    }
    if (j.contains("r0") && !j.at("r0").is_null()) obs.r0 = j.at("r0").get<double>();

    const auto close = [](double x, double y) { return std::abs(x - y) < 1e-9; };
    for (const auto& row : reference::table3) {
      const auto rs = row_spec(row);
      if (rs.family != spec.family || !close(rs.v, spec.v) || !close(rs.mu, spec.mu)) continue;
      const bool ok = row_matches(obs, row.a_unitary, row.a, reference::table3_a_rel_tol,
                                  0.0, row.r0, reference::table3_r0_abs_tol);
      out << (ok ? "[PASS] " : "[FAIL] ") << potentials::family_name(row.family) << " "
          << row.system << "\n";
      return ok ? 0 : 3;
    }
    for (const auto& row : reference::table4) {
      if (spec.family != potentials::Family::lennard_jones || !close(row.c12, spec.c12) ||
          !close(row.c6, spec.c6)) {
        continue;
      }
      const bool ok = row_matches(obs, row.a_unitary, row.a, 0.0, row.a_tol, row.r0,
                                  reference::table3_r0_abs_tol);
      out << (ok ? "[PASS] " : "[FAIL] ") << "lennard-jones " << row.system << "\n";
      return ok ? 0 : 3;
    }
    throw InvalidArgumentError("verify: potential matches no benchmark row");
  }

  if (which == 1) {
    out << "system      E_zr(obs)   E_zr(exp)   E_fr(obs)   E_fr(exp)   status\n";
    for (const auto& row : reference::table1) {
      const auto scale = units::make_scale(1.0, units::length_unit_from_name(row.unit),
                                           units::reduced_mass_c2_preset(row.mass_preset));
      const auto est = observables::bound_state_energies(row.a, row.r0, scale);
      const bool mk = std::string(row.unit) == "angstrom";
      const double zr = mk ? units::mev_to_millikelvin(est.e_zr) : est.e_zr;
      const double fr = mk ? units::mev_to_millikelvin(est.e_fr) : est.e_fr;
      const bool ok = std::abs(zr - row.e_zr) <= row.tol && std::abs(fr - row.e_fr) <= row.tol;
      all_ok = all_ok && ok;
      std::snprintf(buf, sizeof(buf), "%-10s %10.4g  %10.4g  %10.4g  %10.4g   %s\n",
                    row.system, zr, row.e_zr, fr, row.e_fr, ok ? "pass" : "FAIL");
      out << buf;
    }
  } else if (which == 3) {
    out << "potential  system      v        mu       a(obs)      a(exp)      r0(obs)  r0(exp)  status\n";
    for (const auto& row : reference::table3) {
      const auto spec = row_spec(row);
      const auto range = potentials::derive_range(spec, opts.range_options());
      const auto obs = observables::compute_observables(spec, range, opts.solver_config());
      const bool ok = row_matches(obs, row.a_unitary, row.a, reference::table3_a_rel_tol,
                                  0.0, row.r0, reference::table3_r0_abs_tol);
      all_ok = all_ok && ok;
      std::snprintf(buf, sizeof(buf),
                    "%-10s %-10s %-8.4f %-8.4f %-11.6g %-11s %-8.4f %-8.4g %s\n",
                    potentials::family_name(row.family).c_str(), row.system, row.v, row.mu,
                    obs.a.value, row.a_unitary ? "unitary" : fmt10(row.a).c_str(),
                    obs.r0.value_or(0.0), row.r0, ok ? "pass" : "FAIL");
      out << buf;
    }
  } else if (which == 4) {
    out << "system      c12          c6           a(obs)      a(exp)      r0(obs)  r0(exp)  status\n";
    for (const auto& row : reference::table4) {
      const auto spec = potentials::PotentialSpec::lennard_jones(row.c12, row.c6);
      const auto range = potentials::derive_range(spec, opts.range_options());
      const auto obs = observables::compute_observables(spec, range, opts.solver_config());
      const bool ok = row_matches(obs, row.a_unitary, row.a, 0.0, row.a_tol, row.r0,
                                  reference::table3_r0_abs_tol);
      all_ok = all_ok && ok;
      std::snprintf(buf, sizeof(buf), "%-10s %-12.8f %-12.8f %-11.6g %-11s %-8.4f %-8.4g %s\n",
                    row.system, row.c12, row.c6, obs.a.value,
                    row.a_unitary ? "unitary" : fmt10(row.a).c_str(), obs.r0.value_or(0.0),
                    row.r0, ok ? "pass" : "FAIL");
      out << buf;
    }
  } else {
    throw InvalidArgumentError("table: --which must be 1, 3 or 4");
  }
  return all_ok ? 0 : 3;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"low-energy two-body scattering observables"};
  app.require_subcommand(1);

  CommonOpts compute_opts;
  auto* compute = app.add_subcommand("compute", "scattering length and effective range");
  compute_opts.attach(compute);

  CommonOpts wf_opts;
  auto* wavefunction = app.add_subcommand("wavefunction", "dump normalized u(r) as CSV");
  wf_opts.attach(wavefunction);

  CommonOpts ps_opts;
  int ps_l = 0;
  double ps_k = 0.0, ps_kmin = 0.0, ps_kmax = 0.0;
  int ps_points = 1;
  std::string ps_format = "json";
  auto* phaseshift = app.add_subcommand("phaseshift", "partial-wave phase shifts on a k grid");
  ps_opts.attach(phaseshift);
  phaseshift->add_option("--l", ps_l, "angular momentum");
  phaseshift->add_option("--k", ps_k, "single wave number");
  phaseshift->add_option("--kmin", ps_kmin, "grid start");
  phaseshift->add_option("--kmax", ps_kmax, "grid end");
  phaseshift->add_option("--points", ps_points, "grid size");
  phaseshift->add_option("--format", ps_format, "json|csv");

  CommonOpts scan_opts;
  std::string scan_vary = "v";
  double scan_from = 0.0, scan_to = 0.0;
  int scan_points = 0;
  auto* scan = app.add_subcommand("scan", "observables along a parameter grid (CSV)");
  scan_opts.attach(scan);
  scan->add_option("--vary", scan_vary, "parameter to vary: v|mu|c12|c6");
  scan->add_option("--from", scan_from, "grid start");
  scan->add_option("--to", scan_to, "grid end");
  scan->add_option("--points", scan_points, "grid size");

  CommonOpts tune_opts;
  std::string tune_family, tune_a = "0";
  double tune_r0 = 1.0, tune_tol_a = 1e-3, tune_tol_r0 = 1e-3;
  int tune_nodes = 0, tune_max_outer = 60;
  bool tune_trace = false;
  auto* tune = app.add_subcommand("tune", "fit two parameters to a target (a, r0)");
  tune_opts.attach(tune);
  tune->add_option("--family", tune_family, "well|mpt|gaussian|lennard-jones")->required();
  tune->add_option("--target-a", tune_a, "target scattering length or 'unitary'")->required();
  tune->add_option("--target-r0", tune_r0, "target effective range")->required();
  tune->add_option("--nodes", tune_nodes, "desired bound-state count");
  tune->add_option("--tol-a", tune_tol_a, "relative tolerance on a");
  tune->add_option("--tol-r0", tune_tol_r0, "relative tolerance on r0");
  tune->add_option("--max-outer", tune_max_outer, "outer iteration cap");
  tune->add_flag("--trace", tune_trace, "record iterate history");

  std::string bound_preset, bound_unit = "fm", bound_mass = "np", bound_out;
  double bound_a = 0.0, bound_r0 = 0.0;
  auto* bound = app.add_subcommand("bound", "zero- and finite-range bound-state energies");
  bound->add_option("--preset", bound_preset, "deuteron|he4-dimer");
  bound->add_option("--a", bound_a, "scattering length (physical units)");
  bound->add_option("--r0", bound_r0, "effective range (physical units)");
  bound->add_option("--length-unit", bound_unit, "fm|angstrom|dimensionless");
  bound->add_option("--mass", bound_mass, "reduced mass: nn|np|he4-dimer or MeV value");
  bound->add_option("--out", bound_out, "output file");

  CommonOpts table_opts;
  int table_which = 3;
  std::string table_verify;
  auto* table = app.add_subcommand("table", "recompute a benchmark table with pass/fail");
  table_opts.attach(table, false);
  table->add_option("--which", table_which, "1|3|4");
  table->add_option("--verify", table_verify, "check a compute JSON against the benchmarks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::stringstream ss;
    int code = app.exit(e, ss, ss);
    out << ss.str();
    return code;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "config", e.what());
    return 2;
  }

  try {
    if (compute->parsed()) {
      compute_opts.merge_config();
      return cmd_compute(compute_opts, out);
    }
    if (wavefunction->parsed()) {
      wf_opts.merge_config();
      return cmd_wavefunction(wf_opts, out);
    }
    if (phaseshift->parsed()) {
      ps_opts.merge_config();
      return cmd_phaseshift(ps_opts, ps_l, ps_k, ps_kmin, ps_kmax, ps_points, ps_format, out);
    }
    if (scan->parsed()) {
      scan_opts.merge_config();
      return cmd_scan(scan_opts, scan_vary, scan_from, scan_to, scan_points, out);
    }
    if (tune->parsed()) {
      tune_opts.merge_config();
      return cmd_tune(tune_opts, tune_family, tune_a, tune_r0, tune_nodes, tune_tol_a,
                      tune_tol_r0, tune_max_outer, tune_trace, out);
    }
    if (bound->parsed()) {
      return cmd_bound(bound_preset, bound_a, bound_r0, bound_unit, bound_mass, bound_out,
                       out);
    }
    if (table->parsed()) {
      return cmd_table(table_which, table_verify, table_opts, out);
    }
  } catch (const IoError& e) {
    emit_error(err, "io", e.what());
    return 4;
  } catch (const InvalidArgumentError& e) {
    emit_error(err, "config", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, "numerical", e.what());
    return 3;
  }
  emit_error(err, "config", "no command given");
  return 2;
}

}  // namespace lowscat::cli
