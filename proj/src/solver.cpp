#include "lowscat/solver.hpp"

#include <algorithm>
#include <cmath>

#include "lowscat/constants.hpp"
#include "lowscat/errors.hpp"

namespace lowscat::solver {

std::string method_name(IntegrationMethod m) {
  return m == IntegrationMethod::central ? "central" : "numerov";
}

IntegrationMethod method_from_name(const std::string& name) {
  if (name == "central") return IntegrationMethod::central;
  if (name == "numerov") return IntegrationMethod::numerov;
  throw InvalidArgumentError("unknown integration method: " + name);
}

double step_central(double u_prev, double u_curr, double w_curr, double dr) {
  return 2.0 * u_curr - u_prev + dr * dr * w_curr * u_curr;
}

double step_numerov(double u_prev, double u_curr, double xi_prev, double xi_curr,
                    double xi_next, double dr) {
  const double h2 = dr * dr;
  const double den = 1.0 + h2 * xi_next / 12.0;
  if (den == 0.0) {
    throw StepFailureError("numerov step: vanishing denominator (xi too large for this dr)");
  }
  return (2.0 * u_curr * (1.0 - 5.0 * h2 * xi_curr / 12.0) -
          u_prev * (1.0 + h2 * xi_prev / 12.0)) /
         den;
}

namespace {

struct Coefficients {
  const potentials::PotentialSpec* spec;
  double k2;
  double ll1;  // l (l+1)
  bool well_closed;  // use the inside value at the boundary node
  double well_R;

  // xi = k^2 - 2V - l(l+1)/r^2. Index 0 multiplies u_0 = 0, so its value is
  // immaterial; returning 0 avoids the centrifugal singularity and the
  // Lennard-Jones domain error at the origin.
  double xi(std::size_t i, double dr) const {
    if (i == 0) return 0.0;
    const double r = static_cast<double>(i) * dr;
    double v;
    if (well_closed && r <= well_R * (1.0 + 1e-12)) {
      v = -spec->v * spec->mu * spec->mu;
    } else {
      v = potentials::evaluate(*spec, r);
    }
    double x = k2 - 2.0 * v;
    if (ll1 != 0.0) x -= ll1 / (r * r);
    return x;
  }
};

void rescale_prefix(std::vector<double>& u, std::size_t upto, double s) {
  for (std::size_t j = 0; j <= upto; ++j) u[j] *= s;
}

// Last step across the well edge. The potential jumps at the node r = R, so
// a plain three-point step there is only first-order accurate; inside the
// well xi is constant, which gives an exact two-point propagator for u'(R).
// u_{N+1} is chosen so that the central difference over [R-dr, R+dr]
// reproduces that derivative.
double well_edge_value(double u_nm1, double u_n, double xi_in, double h) {
  double du;
  if (xi_in > 0.0) {
    const double q = std::sqrt(xi_in);
    du = q * (u_n * std::cos(q * h) - u_nm1) / std::sin(q * h);
  } else if (xi_in < 0.0) {
    const double q = std::sqrt(-xi_in);
    du = q * (u_n * std::cosh(q * h) - u_nm1) / std::sinh(q * h);
  } else {
    du = (u_n - u_nm1) / h;
  }
  return u_nm1 + 2.0 * h * du;
}

int count_grid_nodes(const std::vector<double>& u, std::size_t first, std::size_t last) {
  // Strict sign changes on [first, last]; entries negligible relative to the
  // solution scale (start-up residue under a repulsive core) do not count.
  double umax = 0.0;
  for (std::size_t i = first; i <= last; ++i) umax = std::max(umax, std::abs(u[i]));
  const double floor = umax * policy::node_floor_relative;
  int nodes = 0;
  double last_signed = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    if (std::abs(u[i]) <= floor) continue;
    if (last_signed != 0.0 && std::signbit(u[i]) != std::signbit(last_signed)) ++nodes;
    last_signed = u[i];
  }
  return nodes;
}

}  // namespace

RadialSolution integrate(const potentials::PotentialSpec& spec,
                         const potentials::RangeInfo& range, int l, double k,
                         double dr, IntegrationMethod method, double seed_scale) {
  if (!(dr > 0.0)) throw InvalidArgumentError("integrate: dr must be > 0");
  if (!(dr < range.R / 100.0)) {
    throw InvalidArgumentError("integrate: dr must be < R/100");
  }
  if (l < 0) throw InvalidArgumentError("integrate: l must be >= 0");
  if (k < 0.0) throw InvalidArgumentError("integrate: k must be >= 0");

  const double R = range.R;
  const auto n_steps = static_cast<std::size_t>(std::ceil(R / dr - 1e-9));
  const double h = R / static_cast<double>(n_steps);

  RadialSolution sol;
  sol.dr = h;
  sol.R = R;
  sol.r_min = range.r_min;
  sol.l = l;
  sol.k = k;
  sol.method = method;
  sol.u.assign(n_steps + 2, 0.0);

  const std::size_t i0 =
      range.r_min > 0.0 ? static_cast<std::size_t>(std::ceil(range.r_min / h)) : 0;
  if (i0 + 2 >= n_steps) {
    throw InvalidArgumentError("integrate: hard core leaves too few grid points");
  }
  sol.seed_index = i0;
  sol.u[i0 + 1] = seed_scale * std::pow(h, l + 1);

  const bool well = spec.family == potentials::Family::spherical_well;
  Coefficients coef{&spec, k * k, static_cast<double>(l) * (l + 1), well, R};

  // For the well the final step would straddle the jump at R; stop the sweep
  // one node early and cross with the constant-xi propagator instead.
  const std::size_t i_last = well ? n_steps - 1 : n_steps;

  std::size_t count_from = i0;  // skip the zone the scheme cannot resolve
  double xi_prev = coef.xi(i0, h);
  double xi_curr = coef.xi(i0 + 1, h);
  for (std::size_t i = i0 + 1; i <= i_last; ++i) {
    const double xi_next = coef.xi(i + 1, h);
    double next;
    if (method == IntegrationMethod::numerov) {
      next = step_numerov(sol.u[i - 1], sol.u[i], xi_prev, xi_curr, xi_next, h);
    } else {
      next = step_central(sol.u[i - 1], sol.u[i], -xi_curr, h);
    }
    if (!std::isfinite(next) || std::abs(next) > policy::overflow_limit) {
      throw InstabilityError("integrate: |u| overflow; use a smaller dr");
    }
    sol.u[i + 1] = next;
    if (std::abs(next) > policy::rescale_threshold) {
      rescale_prefix(sol.u, i + 1, 1.0 / std::abs(next));
    }
    if (std::abs(h * h * xi_curr / 12.0) >= policy::resolvable_step_bound && i < i_last) {
      count_from = i + 1;
    }
    xi_prev = xi_curr;
    xi_curr = xi_next;
  }

  if (well) {
    const double xi_in = coef.xi(n_steps, h);  // inside value at the edge node
    sol.u[n_steps + 1] = well_edge_value(sol.u[n_steps - 1], sol.u[n_steps], xi_in, h);
  }

  sol.grid_node_count = count_grid_nodes(sol.u, count_from, n_steps);
  sol.node_count = sol.grid_node_count;
  if (k == 0.0 && l == 0) {
    // Tail intercept: beyond R the solution is the line through u(R) with
    // slope from the three-point derivative; a crossing at r* > R is a node
    // the grid cannot see. Near unitarity |r*| blows up and its sign is
    // noise, so the sentinel zone is excluded.
    const double den = sol.u[n_steps + 1] - sol.u[n_steps - 1];
    if (den != 0.0) {
      const double intercept = R - 2.0 * h * sol.u[n_steps] / den;
      if (std::isfinite(intercept) && intercept > R &&
          std::abs(intercept) <= policy::unitary_sentinel_factor * R) {
        ++sol.node_count;
      }
    }
  }
  return sol;
}

}  // namespace lowscat::solver
