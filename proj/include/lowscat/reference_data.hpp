#pragma once

#include <array>

#include "lowscat/potential.hpp"

namespace lowscat::reference {

// Benchmark parameter sets for the three physical systems (neutron-neutron,
// unitarity, deuteron) used by the `table` command and the acceptance suite.
// Unitary rows have a_unitary set; there |1/a| < inv_a_bound/r0 must hold.

struct AttractiveRow {
  potentials::Family family;
  const char* system;
  double v;
  double mu;
  double a;        // fm; ignored when a_unitary
  bool a_unitary;
  double r0;       // fm
  int nodes;
};

inline constexpr std::array<AttractiveRow, 9> table3{{
    {potentials::Family::spherical_well, "nn", 1.1096, 0.3918, -18.52, false, 2.7, 0},
    {potentials::Family::modified_poschl_teller, "nn", 0.9071, 0.7991, -18.51, false, 2.7, 0},
    {potentials::Family::gaussian, "nn", 1.2121, 0.5672, -18.55, false, 2.7, 0},
    {potentials::Family::spherical_well, "unitarity", 1.2337, 1.0000, 0.0, true, 1.0, 0},
    {potentials::Family::modified_poschl_teller, "unitarity", 1.0000, 2.0000, 0.0, true, 1.0, 0},
    {potentials::Family::gaussian, "unitarity", 1.3420, 1.4349, 0.0, true, 1.0, 0},
    {potentials::Family::spherical_well, "deuteron", 1.7575, 0.5000, 5.4, false, 1.70, 1},
    {potentials::Family::modified_poschl_teller, "deuteron", 1.4388, 0.8631, 5.4, false, 1.73, 1},
    {potentials::Family::gaussian, "deuteron", 1.9102, 0.6754, 5.4, false, 1.70, 1},
}};

struct LennardJonesRow {
  const char* system;
  double c12;
  double c6;
  double a;
  bool a_unitary;
  double a_tol;
  double r0;
  int nodes;
};

inline constexpr std::array<LennardJonesRow, 3> table4{{
    {"nn", 3.08836698, 9.86668911, -18.5, false, 0.2, 2.71, 0},
    {"unitarity", 0.00034068, 0.26462461, 0.0, true, 0.0, 1.00, 0},
    {"deuteron", 0.90485319, 6.81472000, 5.4, false, 0.05, 1.70, 1},
}};

// Tolerances for the attractive rows: relative on a, absolute on r0;
// unitary rows instead require |1/a| < inv_a_bound / r0.
inline constexpr double table3_a_rel_tol = 0.005;
inline constexpr double table3_r0_abs_tol = 0.02;
inline constexpr double unitary_inv_a_bound = 1e-4;

struct BoundStateRow {
  const char* system;
  double a;        // in `unit`
  double r0;
  const char* unit;        // "fm" or "angstrom"
  const char* mass_preset; // reduced-mass preset name
  double e_zr;             // MeV or mK as indicated by unit
  double e_fr;
  double tol;              // same unit as e_zr/e_fr
};

// Low-energy bound-state benchmarks: deuteron in MeV, helium dimer in mK.
inline constexpr std::array<BoundStateRow, 2> table1{{
    {"deuteron", 5.4112, 1.7436, "fm", "np", -1.416, -2.223, 0.002},
    {"he4-dimer", 90.4, 8.0, "angstrom", "he4-dimer", -1.48, -1.63, 0.02},
}};

}  // namespace lowscat::reference
