#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lowscat/observables.hpp"
#include "lowscat/potential.hpp"

namespace lowscat::tuner {

struct TuneTarget {
  observables::ScatteringLength a_target;  // unitary sentinel allowed
  double r0_target = 1.0;
  int desired_nodes = 0;
  double tol_a = 1e-3;   // relative, floored at |a| = 1
  double tol_r0 = 1e-3;  // relative
  int max_outer_iterations = 60;
};

struct TuneTraceEntry {
  int outer = 0;
  double v1 = 0.0;
  double v2 = 0.0;
  double a = 0.0;
  bool a_unitary = false;
  double r0 = 0.0;
  int nodes = 0;
};

struct TuneResult {
  potentials::PotentialSpec spec;
  observables::ScatteringObservables achieved;
  int outer_iterations = 0;
  bool converged = false;
  std::vector<TuneTraceEntry> trace;
};

/// Alternating two-parameter loop: solve the depth-like parameter for the
/// scattering length at fixed range, then the range-like parameter for the
/// effective range, until both match. Depth-like is v for the attractive
/// families and c6 for Lennard-Jones (c12 is the outer parameter).
TuneResult tune(potentials::Family family, const potentials::PotentialSpec& initial_guess,
                const TuneTarget& target, const observables::SolverConfig& config,
                const potentials::RangeOptions& range_opts = {},
                bool record_trace = false);

// Reasonable cold-start guess for a family and target, usable when the
// caller has no better prior.
potentials::PotentialSpec default_cold_start(potentials::Family family,
                                             const TuneTarget& target);

struct Eval1D {
  double value = 0.0;
  int nodes = 0;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Scalar solve of objective(p) = target on a bracket, bisection with secant
/// acceleration. The objective must be monotone within the node sector;
/// `increasing` states the direction. Candidates whose node count differs
/// from desired_nodes are rejected and the bracket is shrunk toward the valid
/// sector (nodes_increase_with_param gives the shrink direction).
double solve_1d(const std::function<Eval1D(double)>& objective, Bracket bracket,
                double target, double tol, bool increasing,
                std::optional<int> desired_nodes, bool nodes_increase_with_param,
                int max_iterations = 200);

enum class VariedParam { v, mu, c12, c6 };

VariedParam varied_param_from_name(const std::string& name);
std::string varied_param_name(VariedParam p);

struct ScanRow {
  double param = 0.0;
  bool ok = false;
  observables::ScatteringObservables obs;
  std::string error;
  bool divergence_flag = false;  // a flips sign vs previous row with |a| growing
};

std::vector<ScanRow> scan(const potentials::PotentialSpec& base, VariedParam param,
                          const std::vector<double>& grid,
                          const observables::SolverConfig& config,
                          const potentials::RangeOptions& range_opts = {});

}  // namespace lowscat::tuner
