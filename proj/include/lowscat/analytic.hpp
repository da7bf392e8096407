#pragma once

namespace lowscat::analytic {

inline constexpr int max_bessel_order = 25;

struct SpecialFunctionValue {
  double value = 0.0;
  double estimated_abs_error = 0.0;
};

/// Spherical Bessel functions of the first and second kind and their
/// derivatives with respect to the argument, for 0 <= l <= 25 and x > 0.
/// j_l uses upward recurrence for x >= l and a normalized downward (Miller)
/// recurrence otherwise; n_l is always stable upward.
double sph_bessel_j(int l, double x);
double sph_bessel_n(int l, double x);
double sph_bessel_j_deriv(int l, double x);
double sph_bessel_n_deriv(int l, double x);
SpecialFunctionValue sph_bessel_j_with_error(int l, double x);
SpecialFunctionValue sph_bessel_n_with_error(int l, double x);

/// Digamma via the recurrence Psi(x) = Psi(x+1) - 1/x until x > 6, then the
/// asymptotic series truncated at the 1/x^12 term; reflection for x < 1/2.
double digamma(double x);
SpecialFunctionValue digamma_with_error(double x);

// --- spherical well closed forms (depth v0, range R, k0^2 = 2 v0 / R^2) ---

// a = R (1 - tan(sqrt(2 v0)) / sqrt(2 v0))
double well_scattering_length(double v0, double R);

// r0 = R (1 - (k0R/(tan k0R - k0R))^2 / 3 + 1/(k0R tan k0R - (k0R)^2))
double well_effective_range(double v0, double R);

// delta0(k) = -kR + arctan(k tan(qR)/q), q = sqrt(k^2 + k0^2), on the branch
// that is continuous in k from the k -> 0+ limit -k a.
double well_phase_shift(double v0, double R, double k);

// Bound states appear at v0 = (pi/2 + n pi)^2 / 2.
int well_bound_state_count(double v0);
double well_threshold(int n);

// --- modified Poschl-Teller ---

// a mu = (pi/2) cot(pi lambda / 2) + gamma + Psi(lambda), lambda > 1.
double mpt_scattering_length(double lambda, double mu);

// Zero-energy solution at unitarity (v = 1): u = tanh(mu r)/tanh(mu R).
double mpt_unitarity_u(double mu, double R, double r);
double mpt_unitarity_r0(double mu);

}  // namespace lowscat::analytic
