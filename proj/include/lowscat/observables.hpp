#pragma once

#include <optional>
#include <string>

#include "lowscat/potential.hpp"
#include "lowscat/quadrature.hpp"
#include "lowscat/solver.hpp"
#include "lowscat/units.hpp"

namespace lowscat::observables {

/// Scattering length with a sentinel for the unitary regime. Once |a| exceeds
/// unitary_sentinel_factor * R the stored value keeps the raw magnitude and
/// sign for display, but the sign is numerical noise and must not be trusted.
struct ScatteringLength {
  double value = 0.0;
  bool unitary = false;

  // -1/a term of the effective-range expansion; 0 in the unitary regime.
  double inverse() const { return unitary ? 0.0 : 1.0 / value; }
  bool is_zero() const { return !unitary && value == 0.0; }
};

ScatteringLength classify_scattering_length(double a_raw, double R);

// a = R - 2 dr u(R) / [u(R+dr) - u(R-dr)] on a zero-energy l=0 solution.
double scattering_length(const solver::RadialSolution& sol);

// Multiplies u by C = (1 - R/a)/u(R) so the tail matches g = 1 - r/a
// (g = 1 at unitarity).
solver::RadialSolution normalize(const solver::RadialSolution& sol, ScatteringLength a);

// r0 = 2 int_0^R [g^2 - u^2] dr on the normalized solution. The stretch
// [0, r_seed] where u is pinned to zero contributes 2 int g^2 exactly.
double effective_range(const solver::RadialSolution& sol, ScatteringLength a,
                       quadrature::Rule rule);

struct PhaseShiftResult {
  int l = 0;
  double k = 0.0;
  double beta = 0.0;       // r u'/u at R
  double cot_delta = 0.0;  // +-inf when the j-combination vanishes (delta = 0)
  double delta = 0.0;      // principal arccot branch, (-pi/2, pi/2]
  double kcot = 0.0;
};

PhaseShiftResult phase_shift(const potentials::PotentialSpec& spec,
                             const potentials::RangeInfo& range, int l, double k,
                             double dr, solver::IntegrationMethod method);

// k cot delta0 = -1/a + r0 k^2 / 2
double kcot_expansion(ScatteringLength a, double r0, double k);

struct BoundStateEstimate {
  double kappa = 0.0;  // 1/length in the scale's physical unit
  double e_zr = 0.0;   // MeV (or dimensionless for the identity scale)
  double e_fr = 0.0;
};

// a and r0 in the physical length unit of the scale; energies via
// E = -hbar^2 kappa^2 / (2 m_r) with kappa from 1/a = kappa - r0 kappa^2 / 2.
BoundStateEstimate bound_state_energies(double a, double r0, const units::UnitScale& scale);

struct SolverConfig {
  double dr = policy::default_dr;
  solver::IntegrationMethod method = solver::IntegrationMethod::numerov;
  quadrature::Rule rule = quadrature::Rule::simpson;
};

struct ScatteringObservables {
  ScatteringLength a;
  std::optional<double> r0;  // absent when a = 0 (normalization singular)
  int nodes = 0;
  int grid_nodes = 0;
  double dr = 0.0;
  solver::IntegrationMethod method = solver::IntegrationMethod::numerov;
  quadrature::Rule rule = quadrature::Rule::simpson;
};

// Full zero-energy pipeline: integrate, extract a, normalize, integrate r0.
ScatteringObservables compute_observables(const potentials::PotentialSpec& spec,
                                          const potentials::RangeInfo& range,
                                          const SolverConfig& config);

// {"a": float|"unitary+"|"unitary-", "r0": float|null, "nodes": int,
//  "dr": float, "method": ..., "rule": ...}
std::string observables_to_json_text(const ScatteringObservables& obs);

}  // namespace lowscat::observables
