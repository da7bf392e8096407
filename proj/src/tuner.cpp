#include "lowscat/tuner.hpp"

#include <algorithm>
#include <cmath>

#include "lowscat/analytic.hpp"
#include "lowscat/errors.hpp"

namespace lowscat::tuner {

namespace {

using observables::ScatteringObservables;
using potentials::Family;
using potentials::PotentialSpec;

double get_param(const PotentialSpec& spec, VariedParam p) {
  switch (p) {
    case VariedParam::v: return spec.v;
    case VariedParam::mu: return spec.mu;
    case VariedParam::c12: return spec.c12;
    case VariedParam::c6: return spec.c6;
  }
  throw InvalidArgumentError("bad varied parameter");
}

PotentialSpec set_param(PotentialSpec spec, VariedParam p, double value) {
  switch (p) {
    case VariedParam::v: spec.v = value; break;
    case VariedParam::mu: spec.mu = value; break;
    case VariedParam::c12: spec.c12 = value; break;
    case VariedParam::c6: spec.c6 = value; break;
  }
  return spec;
}

VariedParam depth_param(Family f) {
  return f == Family::lennard_jones ? VariedParam::c6 : VariedParam::v;
}

VariedParam range_param(Family f) {
  return f == Family::lennard_jones ? VariedParam::c12 : VariedParam::mu;
}

ScatteringObservables eval_spec(const PotentialSpec& spec,
                                const observables::SolverConfig& config,
                                const potentials::RangeOptions& opts) {
  const auto range = potentials::derive_range(spec, opts);
  return observables::compute_observables(spec, range, config);
}

struct End {
  double p = 0.0;
  double f = 0.0;
  bool valid = false;
  bool evaluated = false;
};

}  // namespace

double solve_1d(const std::function<Eval1D(double)>& objective, Bracket bracket,
                double target, double tol, bool increasing,
                std::optional<int> desired_nodes, bool nodes_increase_with_param,
                int max_iterations) {
  if (!(bracket.hi > bracket.lo)) {
    throw InvalidArgumentError("solve_1d: bracket must have lo < hi");
  }
  const auto make_end = [&](double p) {
    const Eval1D e = objective(p);
    const bool ok = !desired_nodes.has_value() || e.nodes == *desired_nodes;
    return End{p, e.value, ok, true};
  };
  // mismatching node count: which bracket end does the candidate replace
  const auto too_deep = [&](int nodes) {
    return (nodes > *desired_nodes) == nodes_increase_with_param;
  };
  // g < 0 means the root lies at a larger parameter
  const auto g = [&](double f) { return increasing ? f - target : target - f; };

  End lo = make_end(bracket.lo);
  End hi = make_end(bracket.hi);
  if (lo.valid && std::abs(lo.f - target) <= tol) return lo.p;
  if (hi.valid && std::abs(hi.f - target) <= tol) return hi.p;

  for (int iter = 0; iter < max_iterations; ++iter) {
    const double width = hi.p - lo.p;
    double p = lo.p + 0.5 * width;
    if (lo.valid && hi.valid && g(lo.f) < 0.0 && g(hi.f) > 0.0) {
      const double secant = lo.p + (target - lo.f) * width / (hi.f - lo.f);
      p = std::clamp(secant, lo.p + 0.05 * width, hi.p - 0.05 * width);
    }
    const Eval1D e = objective(p);
    const bool ok = !desired_nodes.has_value() || e.nodes == *desired_nodes;
    if (ok && std::abs(e.value - target) <= tol) return p;

    if (!ok) {
      if (too_deep(e.nodes)) {
        hi = End{p, e.value, false, true};
      } else {
        lo = End{p, e.value, false, true};
      }
    } else if (g(e.value) < 0.0) {
      lo = End{p, e.value, true, true};
    } else {
      hi = End{p, e.value, true, true};
    }
    if (hi.p - lo.p < 1e-13 * std::max(1.0, std::abs(hi.p))) break;
  }
  throw NoBracketError("solve_1d: target not reached within the bracketed node sector",
                       lo.f, hi.f);
}

namespace {

// Inner solves run on a coarser grid; the joint convergence check at the end
// of every outer iteration uses the caller's full configuration.
observables::SolverConfig coarse_config(const observables::SolverConfig& config) {
  observables::SolverConfig c = config;
  c.dr = std::max(config.dr, 5e-4);
  return c;
}

struct TargetCheck {
  bool a_ok = false;
  bool r0_ok = false;
  bool nodes_ok = false;
  bool all() const { return a_ok && r0_ok && nodes_ok; }
};

TargetCheck check_target(const ScatteringObservables& obs, const TuneTarget& t) {
  TargetCheck c;
  if (t.a_target.unitary) {
    c.a_ok = std::abs(obs.a.inverse()) <= t.tol_a / t.r0_target;
    c.nodes_ok = obs.grid_nodes == t.desired_nodes;
  } else {
    c.a_ok = !obs.a.unitary &&
             std::abs(obs.a.value - t.a_target.value) /
                     std::max(1.0, std::abs(t.a_target.value)) <=
                 t.tol_a;
    c.nodes_ok = obs.nodes == t.desired_nodes;
  }
  c.r0_ok = obs.r0.has_value() &&
            std::abs(*obs.r0 - t.r0_target) / t.r0_target <= t.tol_r0;
  return c;
}

Bracket initial_depth_bracket(Family family, const TuneTarget& target, double current) {
  if (family == Family::lennard_jones) {
    const double hi = std::max({current * 2.0, 2.0 * std::pow(target.r0_target, 4), 1e-3});
    return {0.0, hi};
  }
  // Universal first guess: well thresholds (pi/2 + n pi)^2 / 2; the node
  // guard trims family differences.
  const int n = target.desired_nodes;
  const double lo = n == 0 ? std::min(0.1, current) : analytic::well_threshold(n - 1) * 1.02;
  const double hi = analytic::well_threshold(n) * 0.98;
  return {lo, std::max(hi, current * 1.05)};
}

}  // namespace

TuneResult tune(Family family, const PotentialSpec& initial_guess, const TuneTarget& target,
                const observables::SolverConfig& config,
                const potentials::RangeOptions& range_opts, bool record_trace) {
  if (family == Family::tabulated) {
    throw InvalidArgumentError("tune: tabulated potentials have no two-parameter form");
  }
  if (initial_guess.family != family) {
    throw InvalidArgumentError("tune: initial guess family mismatch");
  }
  if (!(target.r0_target > 0.0) || !(target.tol_a > 0.0) || !(target.tol_r0 > 0.0) ||
      target.desired_nodes < 0) {
    throw InvalidArgumentError("tune: bad target");
  }

  const auto coarse = coarse_config(config);
  const VariedParam p_depth = depth_param(family);
  const VariedParam p_range = range_param(family);
  const bool unitary = target.a_target.unitary;

  const double a_goal = unitary ? 0.0 : target.a_target.value;
  const double a_tol = unitary ? target.tol_a / target.r0_target
                               : 0.5 * target.tol_a * std::max(1.0, std::abs(a_goal));
  const double r0_tol = 0.5 * target.tol_r0 * target.r0_target;

  PotentialSpec spec = initial_guess;
  TuneResult result;

  // Depth solve: a decreases with depth; for unitary targets land on the
  // a < 0 branch first (the sector's top boundary is the |a| -> inf point),
  // then drive 1/a to zero, which increases with depth and runs continuously
  // through the threshold.
  const auto solve_depth = [&](PotentialSpec s) {
    const auto finite_objective = [&](double p) {
      const auto obs = eval_spec(set_param(s, p_depth, p), coarse, range_opts);
      return Eval1D{obs.a.value, obs.nodes};
    };
    const auto expand = [&](Bracket db, double goal) {
      for (int grow = 0; grow < 60; ++grow) {
        const Eval1D e = finite_objective(db.hi);
        if (e.nodes != target.desired_nodes || e.value <= goal) break;
        db.hi *= (family == Family::lennard_jones) ? 2.0 : 1.2;
      }
      for (int grow = 0; grow < 60 && db.lo > 0.0; ++grow) {
        const Eval1D e = finite_objective(db.lo);
        if (e.nodes != target.desired_nodes || e.value >= goal) break;
        db.lo *= 0.5;
      }
      return db;
    };
    Bracket db = initial_depth_bracket(family, target, get_param(s, p_depth));
    if (unitary) {
      const double waypoint = -50.0 * target.r0_target;
      db = expand(db, waypoint);
      const double v_neg = solve_1d(finite_objective, db, waypoint, 25.0 * target.r0_target,
                                    false, target.desired_nodes, true);
      const auto inv_objective = [&](double p) {
        const auto obs = eval_spec(set_param(s, p_depth, p), coarse, range_opts);
        return Eval1D{obs.a.inverse(), obs.grid_nodes};
      };
      return set_param(s, p_depth,
                       solve_1d(inv_objective, {v_neg, db.hi * 1.5}, 0.0, a_tol, true,
                                target.desired_nodes, true));
    }
    db = expand(db, a_goal);
    return set_param(s, p_depth,
                     solve_1d(finite_objective, db, a_goal, a_tol, false,
                              target.desired_nodes, true));
  };

  for (int outer = 1; outer <= target.max_outer_iterations; ++outer) {
    if (family == Family::lennard_jones) {
      // The two parameters couple too strongly for plain alternation: at
      // fixed c6 the r0 target is often outside the node sector entirely.
      // Solve r0 over c12 with the c6 resolve nested in the objective
      // (r0 is monotone increasing along the a-resolved curve).
      const auto outer_objective = [&](double c12) {
        const auto tuned = solve_depth(set_param(spec, p_range, c12));
        const auto obs = eval_spec(tuned, coarse, range_opts);
        return Eval1D{obs.r0.value_or(1e9), target.desired_nodes};
      };
      Bracket rb{get_param(spec, p_range) / 2.0, get_param(spec, p_range) * 2.0};
      for (int grow = 0; grow < 40; ++grow) {
        if (outer_objective(rb.hi).value >= target.r0_target) break;
        rb.hi *= 2.0;
      }
      for (int grow = 0; grow < 40 && rb.lo > 1e-9; ++grow) {
        if (outer_objective(rb.lo).value <= target.r0_target) break;
        rb.lo *= 0.5;
      }
      const double c12 = solve_1d(outer_objective, rb, target.r0_target, r0_tol, true,
                                  std::nullopt, true);
      spec = solve_depth(set_param(spec, p_range, c12));
    } else {
      // (i) depth for a at fixed range, (ii) mu for r0 at that depth;
      // r0 scales like 1/mu, so the bracket aims at the rescaled value.
      spec = solve_depth(spec);
      const auto r0_objective = [&](double p) {
        const auto obs = eval_spec(set_param(spec, p_range, p), coarse, range_opts);
        return Eval1D{obs.r0.value_or(1e9), unitary ? obs.grid_nodes : obs.nodes};
      };
      const double cur = get_param(spec, p_range);
      Bracket rb{cur / 2.0, cur * 2.0};
      const double r0_now = r0_objective(cur).value;
      if (std::isfinite(r0_now) && r0_now > 0.0) {
        const double mu_est = cur * r0_now / target.r0_target;
        rb = {mu_est / 1.6, mu_est * 1.6};
      }
      for (int grow = 0; grow < 40; ++grow) {
        if (r0_objective(rb.lo).value >= target.r0_target) break;
        rb.lo *= 0.5;
      }
      for (int grow = 0; grow < 40; ++grow) {
        if (r0_objective(rb.hi).value <= target.r0_target) break;
        rb.hi *= 2.0;
      }
      spec = set_param(spec, p_range,
                       solve_1d(r0_objective, rb, target.r0_target, r0_tol, false,
                                target.desired_nodes, true));
    }

    // joint check at full resolution
    const auto obs = eval_spec(spec, config, range_opts);
    if (record_trace) {
      result.trace.push_back({outer, get_param(spec, p_depth), get_param(spec, p_range),
                              obs.a.value, obs.a.unitary, obs.r0.value_or(0.0), obs.nodes});
    }
    if (check_target(obs, target).all()) {
      result.spec = spec;
      result.achieved = obs;
      result.outer_iterations = outer;
      result.converged = true;
      return result;
    }
  }
  throw ConvergenceFailureError(
      "tune: no joint convergence after " + std::to_string(target.max_outer_iterations) +
      " outer iterations; last spec " + potentials::potential_to_json_text(spec));
}

PotentialSpec default_cold_start(Family family, const TuneTarget& target) {
  const double r0 = target.r0_target;
  switch (family) {
    case Family::spherical_well:
    case Family::modified_poschl_teller:
    case Family::gaussian: {
      const double v = target.desired_nodes == 0 ? 0.6 : 2.5;
      const double mu = 2.0 / r0;
      return family == Family::spherical_well ? PotentialSpec::spherical_well(v, mu)
             : family == Family::modified_poschl_teller
                 ? PotentialSpec::modified_poschl_teller(v, mu)
                 : PotentialSpec::gaussian(v, mu);
    }
    case Family::lennard_jones:
      return PotentialSpec::lennard_jones(3.41e-4 * std::pow(r0, 10),
                                          (target.desired_nodes == 0 ? 1.0 : 2.0) *
                                              std::pow(r0, 4));
    case Family::tabulated:
      break;
  }
  throw InvalidArgumentError("default_cold_start: unsupported family");
}

VariedParam varied_param_from_name(const std::string& name) {
  if (name == "v") return VariedParam::v;
  if (name == "mu") return VariedParam::mu;
  if (name == "c12") return VariedParam::c12;
  if (name == "c6") return VariedParam::c6;
  throw InvalidArgumentError("unknown parameter name: " + name);
}

std::string varied_param_name(VariedParam p) {
  switch (p) {
    case VariedParam::v: return "v";
    case VariedParam::mu: return "mu";
    case VariedParam::c12: return "c12";
    case VariedParam::c6: return "c6";
  }
  return "?";
}

std::vector<ScanRow> scan(const PotentialSpec& base, VariedParam param,
                          const std::vector<double>& grid,
                          const observables::SolverConfig& config,
                          const potentials::RangeOptions& range_opts) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (const double p : grid) {
    ScanRow row;
    row.param = p;
    try {
      const auto spec = set_param(base, param, p);
      row.obs = eval_spec(spec, config, range_opts);
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  // Flag divergence crossings: the sign of a flips between neighbours while
  // |a| is large on both sides relative to the effective range (a zero
  // crossing of a flips with |a| small).
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) continue;
    if (rows[i].obs.a.unitary) rows[i].divergence_flag = true;
    if (i == 0 || !rows[i - 1].ok) continue;
    const double prev = rows[i - 1].obs.a.value;
    const double cur = rows[i].obs.a.value;
    const double scale =
        5.0 * std::max({rows[i - 1].obs.r0.value_or(1.0), rows[i].obs.r0.value_or(1.0), 1.0});
    if (std::signbit(prev) != std::signbit(cur) &&
        std::min(std::abs(prev), std::abs(cur)) > scale) {
      rows[i].divergence_flag = true;
      rows[i - 1].divergence_flag = true;
    }
  }
  return rows;
}

}  // namespace lowscat::tuner
