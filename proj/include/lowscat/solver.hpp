#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lowscat/potential.hpp"

namespace lowscat::solver {

enum class IntegrationMethod { central, numerov };

std::string method_name(IntegrationMethod m);
IntegrationMethod method_from_name(const std::string& name);

/// Reduced radial solution u(r_i) on the uniform grid r_i = i dr,
/// i = 0..N+1 with r_N = R (grid-aligned) and r_{N+1} = R + dr.
/// Normalization is arbitrary until normalize() has been applied.
struct RadialSolution {
  double dr = 0.0;
  double R = 0.0;
  double r_min = 0.0;
  int l = 0;
  double k = 0.0;
  IntegrationMethod method = IntegrationMethod::numerov;
  std::vector<double> u;
  std::size_t seed_index = 0;   // u == 0 for i <= seed_index when r_min > 0
  int node_count = 0;           // sign changes on (r_min, R), plus the tail
                                // intercept when the zero-energy solution
                                // crosses the axis beyond R
  int grid_node_count = 0;      // sign changes visible on the grid only
  bool normalized = false;

  double r(std::size_t i) const { return static_cast<double>(i) * dr; }
  std::size_t range_index() const { return u.size() - 2; }  // node at R
  double u_at_R() const { return u[u.size() - 2]; }
};

// u_next = 2 u_curr - u_prev + dr^2 w u_curr with w = 2 V + l(l+1)/r^2 - k^2.
double step_central(double u_prev, double u_curr, double w_curr, double dr);

// Numerov update for u'' = -xi(r) u, xi = k^2 - 2V - l(l+1)/r^2 (s = 0).
// Throws StepFailureError when 1 + dr^2 xi_next / 12 vanishes.
double step_numerov(double u_prev, double u_curr, double xi_prev, double xi_curr,
                    double xi_next, double dr);

/// Integrates from the origin (or r_min for hard cores) to R + dr.
/// dr is adjusted downward so that R/dr is an integer and a grid node sits
/// exactly at R. Seeds: u_0 = 0, u_1 = seed_scale * dr^(l+1); for hard cores
/// u = 0 up to seed_index = ceil(r_min/dr) and the seed moves there.
RadialSolution integrate(const potentials::PotentialSpec& spec,
                         const potentials::RangeInfo& range, int l, double k,
                         double dr, IntegrationMethod method,
                         double seed_scale = 1.0);

}  // namespace lowscat::solver
