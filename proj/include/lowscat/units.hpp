#pragma once

#include <string>

#include "lowscat/constants.hpp"

namespace lowscat::units {

enum class LengthUnit { fm, angstrom, dimensionless };

// Dimensionless working scheme: distances are measured in units of a length
// scale l, energies in units of eps = hbar^2/(m_r l^2). All solver work
// happens in these units; conversion to physical units only at the API edge.
struct UnitScale {
  double length = 1.0;             // physical length per dimensionless unit
  LengthUnit unit = LengthUnit::dimensionless;
  double reduced_mass_c2_mev = 1.0;
  double energy_scale_mev = 1.0;   // eps; MeV for fm/angstrom scales
};

UnitScale make_scale(double length, LengthUnit unit, double reduced_mass_c2_mev);

double to_physical_length(double x_dimensionless, const UnitScale& s);
double to_dimensionless_length(double x_physical, const UnitScale& s);
double to_physical_energy(double e_dimensionless, const UnitScale& s);
double to_dimensionless_energy(double e_physical, const UnitScale& s);

double mev_to_millikelvin(double e_mev);

// Mass presets accepted by the CLI: "nn", "np", "he4-dimer".
double reduced_mass_c2_preset(const std::string& name);

LengthUnit length_unit_from_name(const std::string& name);
std::string length_unit_name(LengthUnit unit);

}  // namespace lowscat::units
