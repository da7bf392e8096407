#pragma once

#include <string>
#include <vector>

#include "lowscat/constants.hpp"

namespace lowscat::potentials {

enum class Family {
  spherical_well,
  modified_poschl_teller,
  gaussian,
  lennard_jones,
  tabulated,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A radial potential in dimensionless units (lengths in l, energies in eps).
///
/// Families and their V(r):
///   spherical well          -v mu^2             for r < 1/mu, 0 beyond
///   modified Poschl-Teller  -v mu^2 / cosh^2(mu r)
///   gaussian                -v mu^2 exp(-r^2 mu^2)
///   lennard-jones           (c12/r^12 - c6/r^6) / 2
///   tabulated               linear interpolation of (r_i, v_i) samples
///
/// The Lennard-Jones constants follow the convention of the reference
/// parameter sets reproduced by the test suite: c12 and c6 are the
/// coefficients of the zero-energy reduced radial equation
/// u'' = (c12/r^12 - c6/r^6) u, i.e. V(r) = hbar^2/(2 m_r) (c12/r^12 - c6/r^6).
struct PotentialSpec {
  Family family = Family::spherical_well;
  double v = 0.0;
  double mu = 1.0;
  double c12 = 0.0;
  double c6 = 0.0;
  std::vector<double> table_r;
  std::vector<double> table_v;

  static PotentialSpec spherical_well(double v, double mu);
  static PotentialSpec modified_poschl_teller(double v, double mu);
  static PotentialSpec modified_poschl_teller_lambda(double lambda, double mu);
  static PotentialSpec gaussian(double v, double mu);
  static PotentialSpec lennard_jones(double c12, double c6);
  static PotentialSpec tabulated(std::vector<double> r, std::vector<double> v);
};

// v = lambda (lambda - 1) / 2 and its inverse on the lambda > 1 branch.
double poschl_teller_depth_from_lambda(double lambda);
double poschl_teller_lambda_from_depth(double v);

double evaluate(const PotentialSpec& spec, double r);

struct RangeInfo {
  double R = 0.0;       // numerical range: |V(r)| <= epsilon_tail for r >= R
  double r_min = 0.0;   // inner cutoff where u is pinned to 0 (hard cores)
  double epsilon_tail = policy::default_epsilon_tail;
  double core_threshold = policy::default_core_threshold;
};

struct RangeOptions {
  double epsilon_tail = policy::default_epsilon_tail;
  double core_threshold = policy::default_core_threshold;
  double max_radius = policy::default_max_radius;
};

RangeInfo derive_range(const PotentialSpec& spec, const RangeOptions& opts = {});

// JSON schema: {"family":"gaussian","v":1.3420,"mu":1.4349},
// {"family":"lennard-jones","c12":...,"c6":...},
// {"family":"tabulated","r":[...],"v":[...]}.
PotentialSpec potential_from_json_text(const std::string& text);
std::string potential_to_json_text(const PotentialSpec& spec);

}  // namespace lowscat::potentials
