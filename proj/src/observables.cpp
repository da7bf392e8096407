#include "lowscat/observables.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "lowscat/analytic.hpp"
#include "lowscat/constants.hpp"
#include "lowscat/errors.hpp"

namespace lowscat::observables {

ScatteringLength classify_scattering_length(double a_raw, double R) {
  if (std::abs(a_raw) <= policy::zero_snap_relative * R) return {0.0, false};
  return {a_raw, std::abs(a_raw) > policy::unitary_sentinel_factor * R};
}

double scattering_length(const solver::RadialSolution& sol) {
  if (sol.k != 0.0 || sol.l != 0) {
    throw ContractViolationError("scattering_length: need a zero-energy l=0 solution");
  }
  const std::size_t n = sol.range_index();
  const double den = sol.u[n + 1] - sol.u[n - 1];
  if (den == 0.0) {
    throw DegenerateDerivativeError("scattering_length: u(R+dr) == u(R-dr)");
  }
  return sol.R - 2.0 * sol.dr * sol.u[n] / den;
}

solver::RadialSolution normalize(const solver::RadialSolution& sol, ScatteringLength a) {
  if (a.is_zero()) {
    throw EffectiveRangeUndefinedError("normalize: a = 0 has no g = 1 - r/a limit");
  }
  const double uR = sol.u_at_R();
  if (uR == 0.0) throw MatchingSingularError("normalize: u(R) = 0");
  const double g_R = a.unitary ? 1.0 : 1.0 - sol.R / a.value;
  solver::RadialSolution out = sol;
  const double c = g_R / uR;
  for (double& x : out.u) x *= c;
  out.normalized = true;
  return out;
}

double effective_range(const solver::RadialSolution& sol, ScatteringLength a,
                       quadrature::Rule rule) {
  if (!sol.normalized) {
    throw ContractViolationError("effective_range: solution must be normalized");
  }
  const std::size_t n = sol.range_index();
  const std::size_t i0 = sol.seed_index;
  std::vector<double> f(n - i0 + 1);
  for (std::size_t i = i0; i <= n; ++i) {
    const double g = a.unitary ? 1.0 : 1.0 - sol.r(i) / a.value;
    f[i - i0] = 2.0 * (g * g - sol.u[i] * sol.u[i]);
  }
  double head = 0.0;
  if (i0 > 0) {
    // u = 0 on [0, s]: 2 int_0^s g^2 dr in closed form
    const double s = sol.r(i0);
    head = a.unitary ? 2.0 * s
                     : 2.0 * (a.value / 3.0) *
                           (1.0 - std::pow(1.0 - s / a.value, 3));
  }
  return head + quadrature::integrate(rule, f, sol.dr);
}

PhaseShiftResult phase_shift(const potentials::PotentialSpec& spec,
                             const potentials::RangeInfo& range, int l, double k,
                             double dr, solver::IntegrationMethod method) {
  if (!(k > 0.0)) throw InvalidArgumentError("phase_shift: k must be > 0");
  const auto sol = solver::integrate(spec, range, l, k, dr, method);
  const std::size_t n = sol.range_index();

  double uR = sol.u[n];
  double du = (sol.u[n + 1] - sol.u[n - 1]) / (2.0 * sol.dr);
  double R = sol.R;
  if (uR == 0.0) {
    // u vanishes exactly at the matching node; retry one grid step inside,
    // where the potential is already below the tail threshold.
    R -= sol.dr;
    uR = sol.u[n - 1];
    du = (sol.u[n] - sol.u[n - 2]) / (2.0 * sol.dr);
    if (uR == 0.0) throw MatchingSingularError("phase_shift: u(R) = 0");
  }

  PhaseShiftResult res;
  res.l = l;
  res.k = k;
  res.beta = R * du / uR;

  const double x = k * R;
  const double j = analytic::sph_bessel_j(l, x);
  const double nn = analytic::sph_bessel_n(l, x);
  const double jp = analytic::sph_bessel_j_deriv(l, x);
  const double np = analytic::sph_bessel_n_deriv(l, x);
  const double num = x * np - (res.beta - 1.0) * nn;
  const double den = x * jp - (res.beta - 1.0) * j;
  if (den == 0.0) {
    res.cot_delta = num >= 0.0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
    res.delta = 0.0;
  } else {
    res.cot_delta = num / den;
    res.delta = (res.cot_delta == 0.0) ? std::numbers::pi / 2.0
                                       : std::atan(1.0 / res.cot_delta);
    if (res.cot_delta < 0.0 && res.delta == 0.0) res.delta = 0.0;
  }
  res.kcot = k * res.cot_delta;
  return res;
}

double kcot_expansion(ScatteringLength a, double r0, double k) {
  if (a.is_zero()) throw InvalidArgumentError("kcot_expansion: a = 0");
  return -a.inverse() + 0.5 * r0 * k * k;
}

BoundStateEstimate bound_state_energies(double a, double r0, const units::UnitScale& scale) {
  if (!(a > 0.0)) throw NoBoundStateError("bound_state_energies: need a > 0");
  if (!(r0 >= 0.0)) throw InvalidArgumentError("bound_state_energies: need r0 >= 0");
  if (2.0 * r0 >= a) {
    throw FiniteRangeFormulaError("bound_state_energies: 2 r0 >= a, sqrt(1 - 2 r0/a) invalid");
  }
  const double a_bar = units::to_dimensionless_length(a, scale);
  const double r0_bar = units::to_dimensionless_length(r0, scale);

  double kappa_bar;
  if (r0_bar / a_bar < 1e-8) {
    // two-term expansion of (1 - sqrt(1 - 2 r0/a))/r0; the closed form
    // cancels catastrophically as r0 -> 0
    kappa_bar = (1.0 + 0.5 * r0_bar / a_bar) / a_bar;
  } else {
    kappa_bar = (1.0 - std::sqrt(1.0 - 2.0 * r0_bar / a_bar)) / r0_bar;
  }

  BoundStateEstimate est;
  est.kappa = kappa_bar / scale.length;
  est.e_zr = units::to_physical_energy(-0.5 / (a_bar * a_bar), scale);
  est.e_fr = units::to_physical_energy(-0.5 * kappa_bar * kappa_bar, scale);
  return est;
}

ScatteringObservables compute_observables(const potentials::PotentialSpec& spec,
                                          const potentials::RangeInfo& range,
                                          const SolverConfig& config) {
  const auto sol =
      solver::integrate(spec, range, 0, 0.0, config.dr, config.method);
  ScatteringObservables obs;
  obs.dr = sol.dr;
  obs.method = config.method;
  obs.rule = config.rule;
  obs.nodes = sol.node_count;
  obs.grid_nodes = sol.grid_node_count;
  obs.a = classify_scattering_length(scattering_length(sol), range.R);
  if (!obs.a.is_zero()) {
    const auto normalized = normalize(sol, obs.a);
    obs.r0 = effective_range(normalized, obs.a, config.rule);
  }
  return obs;
}

std::string observables_to_json_text(const ScatteringObservables& obs) {
  nlohmann::json j;
  if (obs.a.unitary) {
    j["a"] = obs.a.value < 0.0 ? "unitary-" : "unitary+";
  } else {
    j["a"] = obs.a.value;
  }
  if (obs.r0.has_value()) {
    j["r0"] = *obs.r0;
  } else {
    j["r0"] = nullptr;
  }
  j["nodes"] = obs.nodes;
  j["dr"] = obs.dr;
  j["method"] = solver::method_name(obs.method);
  j["rule"] = quadrature::rule_name(obs.rule);
  return j.dump();
}

}  // namespace lowscat::observables
