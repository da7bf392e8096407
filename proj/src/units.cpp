#include "lowscat/units.hpp"

#include <cmath>

#include "lowscat/errors.hpp"

namespace lowscat::units {

UnitScale make_scale(double length, LengthUnit unit, double reduced_mass_c2_mev) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgumentError("make_scale: length scale must be positive");
  }
  if (!(reduced_mass_c2_mev > 0.0) || !std::isfinite(reduced_mass_c2_mev)) {
    throw InvalidArgumentError("make_scale: reduced mass must be positive");
  }
  UnitScale s;
  s.length = length;
  s.unit = unit;
  s.reduced_mass_c2_mev = reduced_mass_c2_mev;
  if (unit == LengthUnit::dimensionless) {
    // hbar = 1 in this mode.
    s.energy_scale_mev = 1.0 / (reduced_mass_c2_mev * length * length);
  } else {
    const double l_fm = (unit == LengthUnit::fm) ? length : length * 1e5;
    const double hc = codata2018.hbar_c_mev_fm;
    s.energy_scale_mev = hc * hc / (reduced_mass_c2_mev * l_fm * l_fm);
  }
  return s;
}

double to_physical_length(double x, const UnitScale& s) { return x * s.length; }
double to_dimensionless_length(double x, const UnitScale& s) { return x / s.length; }
double to_physical_energy(double e, const UnitScale& s) { return e * s.energy_scale_mev; }
double to_dimensionless_energy(double e, const UnitScale& s) { return e / s.energy_scale_mev; }

double mev_to_millikelvin(double e_mev) {
  return e_mev / codata2018.boltzmann_mev_per_k * 1e3;
}

double reduced_mass_c2_preset(const std::string& name) {
  const auto& c = codata2018;
  if (name == "nn") return c.neutron_mass_c2_mev / 2.0;
  if (name == "np") {
    return c.proton_mass_c2_mev * c.neutron_mass_c2_mev /
           (c.proton_mass_c2_mev + c.neutron_mass_c2_mev);
  }
  if (name == "he4-dimer") return c.helium4_mass_c2_mev / 2.0;
  throw InvalidArgumentError("unknown mass preset: " + name);
}

LengthUnit length_unit_from_name(const std::string& name) {
  if (name == "fm") return LengthUnit::fm;
  if (name == "angstrom") return LengthUnit::angstrom;
  if (name == "dimensionless") return LengthUnit::dimensionless;
  throw InvalidArgumentError("unknown length unit: " + name);
}

std::string length_unit_name(LengthUnit unit) {
  switch (unit) {
    case LengthUnit::fm: return "fm";
    case LengthUnit::angstrom: return "angstrom";
    case LengthUnit::dimensionless: return "dimensionless";
  }
  return "dimensionless";
}

}  // namespace lowscat::units
