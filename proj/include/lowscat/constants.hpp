#pragma once

namespace lowscat {

// CODATA 2018 recommended values.
struct PhysicalConstants {
  double hbar_c_mev_fm;       // MeV fm
  double proton_mass_c2_mev;  // MeV
  double neutron_mass_c2_mev; // MeV
  // Alpha-particle (bare 4He nucleus) rest energy. The atomic mass would add
  // two electrons minus ~79 eV binding (~1.022 MeV, a 2.7e-4 relative shift);
  // dimer energies quoted to three digits are insensitive to the choice.
  double helium4_mass_c2_mev; // MeV
  double boltzmann_mev_per_k; // MeV/K
};

inline constexpr PhysicalConstants codata2018{
    197.3269804,
    938.27208816,
    939.56542052,
    3727.3794066,
    8.617333262e-11,
};

inline constexpr double euler_gamma = 0.5772156649015329;

namespace policy {

// Tail threshold |V(R)| <= epsilon and hard-core threshold V(r_min) >= core.
inline constexpr double default_epsilon_tail = 1e-15;
inline constexpr double default_core_threshold = 1e10;
inline constexpr double default_max_radius = 1e3;
inline constexpr double default_dr = 1e-4;

// |a| beyond this multiple of R is reported as the unitary sentinel; the
// sign of a is numerically meaningless there.
inline constexpr double unitary_sentinel_factor = 1e4;

// |a| below this fraction of R snaps to exactly zero (rounding residue of
// the ratio formula); the g = 1 - r/a normalization is undefined there.
inline constexpr double zero_snap_relative = 1e-9;

// Solutions are rescaled once |u| passes this bound (the equation is linear),
// so deep repulsive cores cannot overflow; the hard error fires at 1e300.
inline constexpr double rescale_threshold = 1e250;
inline constexpr double overflow_limit = 1e300;

// Node counting ignores |u| below this fraction of max|u|: residue of the
// start-up region under a strongly repulsive core is not a sign change.
inline constexpr double node_floor_relative = 1e-12;

// A grid point with |dr^2 xi / 12| at or above this bound sits in a core
// region the three-point schemes cannot resolve; sign changes there are
// start-up noise, not nodes.
inline constexpr double resolvable_step_bound = 0.5;

// Closed forms refuse to evaluate closer than this to a pole.
inline constexpr double pole_proximity = 1e-9;

// derive_range reports R on this lattice (rounded up).
inline constexpr double range_lattice = 1e-6;

}  // namespace policy
}  // namespace lowscat
