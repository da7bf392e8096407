#include "lowscat/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lowscat/constants.hpp"
#include "lowscat/errors.hpp"

namespace lowscat::analytic {

namespace {

constexpr double pi = std::numbers::pi;

void check_bessel_args(int l, double x) {
  if (x <= 0.0) throw DomainError("spherical bessel: x must be > 0");
  if (l < 0 || l > max_bessel_order) {
    throw InvalidArgumentError("spherical bessel: order outside [0, " +
                               std::to_string(max_bessel_order) + "]");
  }
}

double j_upward(int l, double x) {
  double fm = std::cos(x) / x;  // j_{-1}
  double f0 = std::sin(x) / x;  // j_0
  for (int m = 0; m < l; ++m) {
    const double f1 = (2 * m + 1) / x * f0 - fm;
    fm = f0;
    f0 = f1;
  }
  return f0;
}

double j_downward(int l, double x) {
  // Miller: recur down from a padded start order with arbitrary tail values,
  // then normalize by j_0 = sin(x)/x.
  const int start = l + 40;
  double fp = 0.0;
  double f0 = 1e-30;
  double target = 0.0;
  for (int m = start; m >= 0; --m) {
    const double fm = (2 * m + 3) / x * f0 - fp;
    fp = f0;
    f0 = fm;
    if (m == l) target = f0;
    if (std::abs(f0) > 1e250) {
      f0 *= 1e-250;
      fp *= 1e-250;
      target *= 1e-250;
    }
  }
  return target * (std::sin(x) / x) / f0;
}

}  // namespace

double sph_bessel_j(int l, double x) {
  check_bessel_args(l, x);
  if (l == 0) return std::sin(x) / x;
  return x >= static_cast<double>(l) ? j_upward(l, x) : j_downward(l, x);
}

double sph_bessel_n(int l, double x) {
  check_bessel_args(l, x);
  double fm = std::sin(x) / x;   // n_{-1}
  double f0 = -std::cos(x) / x;  // n_0
  for (int m = 0; m < l; ++m) {
    const double f1 = (2 * m + 1) / x * f0 - fm;
    fm = f0;
    f0 = f1;
  }
  return f0;
}

// f_l' = f_{l-1} - (l+1) f_l / x, with j_{-1} = cos(x)/x, n_{-1} = sin(x)/x.
double sph_bessel_j_deriv(int l, double x) {
  check_bessel_args(l, x);
  const double below = (l == 0) ? std::cos(x) / x : sph_bessel_j(l - 1, x);
  return below - (l + 1) * sph_bessel_j(l, x) / x;
}

double sph_bessel_n_deriv(int l, double x) {
  check_bessel_args(l, x);
  const double below = (l == 0) ? std::sin(x) / x : sph_bessel_n(l - 1, x);
  return below - (l + 1) * sph_bessel_n(l, x) / x;
}

SpecialFunctionValue sph_bessel_j_with_error(int l, double x) {
  const double v = sph_bessel_j(l, x);
  // recurrence rounding grows roughly linearly in the order
  return {v, (std::abs(v) + 1.0 / x) * (l + 2) * 4e-16};
}

SpecialFunctionValue sph_bessel_n_with_error(int l, double x) {
  const double v = sph_bessel_n(l, x);
  return {v, (std::abs(v) + 1.0 / x) * (l + 2) * 4e-16};
}

namespace {

double digamma_asymptotic(double x) {
  // Psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^2n), truncated at 1/x^12.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  series += inv2 * (1.0 / 12.0);
  series -= inv2 * inv2 * (1.0 / 120.0);
  series += inv2 * inv2 * inv2 * (1.0 / 252.0);
  series -= inv2 * inv2 * inv2 * inv2 * (1.0 / 240.0);
  series += inv2 * inv2 * inv2 * inv2 * inv2 * (1.0 / 132.0);
  series -= inv2 * inv2 * inv2 * inv2 * inv2 * inv2 * (691.0 / 32760.0);
  return std::log(x) - 0.5 * inv - series;
}

bool near_nonpositive_integer(double x) {
  return x <= 0.5 && std::abs(x - std::round(x)) < policy::pole_proximity;
}

}  // namespace

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: non-finite argument");
  if (near_nonpositive_integer(x)) {
    throw DomainError("digamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    // reflection: Psi(x) = Psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x) - pi / std::tan(pi * x);
  }
  double acc = 0.0;
  while (x < 7.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

SpecialFunctionValue digamma_with_error(double x) {
  const double v = digamma(x);
  // truncation of the asymptotic series at the shifted argument >= 7
  return {v, 2e-13 + std::abs(v) * 4e-16};
}

namespace {

// Distance from x to the nearest pi/2 + n pi (tan pole).
double tan_pole_distance(double x, double* pole = nullptr) {
  const double n = std::round((x - pi / 2.0) / pi);
  const double p = pi / 2.0 + n * pi;
  if (pole != nullptr) *pole = p;
  return std::abs(x - p);
}

void check_well_args(double v0, double R) {
  if (!(v0 >= 0.0) || !(R > 0.0)) {
    throw InvalidArgumentError("well: need v0 >= 0 and R > 0");
  }
}

}  // namespace

double well_scattering_length(double v0, double R) {
  check_well_args(v0, R);
  if (v0 == 0.0) return 0.0;
  const double x = std::sqrt(2.0 * v0);
  double pole;
  if (tan_pole_distance(x, &pole) < policy::pole_proximity) {
    throw DivergenceError("well scattering length diverges (bound-state threshold)", pole);
  }
  return R * (1.0 - std::tan(x) / x);
}

double well_effective_range(double v0, double R) {
  check_well_args(v0, R);
  const double x = std::sqrt(2.0 * v0);  // k0 R
  double pole;
  if (tan_pole_distance(x, &pole) < policy::pole_proximity) {
    throw DivergenceError("well effective range: tan pole", pole);
  }
  const double t = std::tan(x);
  if (std::abs(t - x) < policy::pole_proximity) {
    throw DivergenceError("well effective range: tan(k0 R) = k0 R (a = 0)", x);
  }
  const double s = x / (t - x);
  return R * (1.0 - s * s / 3.0 + 1.0 / (x * t - x * x));
}

double well_phase_shift(double v0, double R, double k) {
  check_well_args(v0, R);
  if (!(k > 0.0)) throw InvalidArgumentError("well phase shift: k must be > 0");
  const double k0 = std::sqrt(2.0 * v0) / R;
  const double q = std::sqrt(k * k + k0 * k0);
  double pole;
  if (tan_pole_distance(q * R, &pole) < policy::pole_proximity) {
    throw DivergenceError("well phase shift: tan pole", pole);
  }
  double delta = -k * R + std::atan(k * std::tan(q * R) / q);
  // arctan jumps by -pi each time qR passes a tan pole as k grows from 0;
  // undo the jumps so delta is continuous with delta -> -k a.
  const auto branch = [](double x) { return std::floor((x - pi / 2.0) / pi); };
  delta += pi * (branch(q * R) - branch(k0 * R));
  return delta;
}

int well_bound_state_count(double v0) {
  if (!(v0 >= 0.0)) throw InvalidArgumentError("well_bound_state_count: v0 must be >= 0");
  int n = 0;
  while (well_threshold(n) < v0) ++n;
  return n;
}

double well_threshold(int n) {
  if (n < 0) throw InvalidArgumentError("well_threshold: n must be >= 0");
  const double x = pi / 2.0 + n * pi;
  return x * x / 2.0;
}

double mpt_scattering_length(double lambda, double mu) {
  if (!(mu > 0.0)) throw InvalidArgumentError("mpt: mu must be > 0");
  const double even_dist = std::abs(lambda / 2.0 - std::round(lambda / 2.0)) * 2.0;
  if (even_dist < policy::pole_proximity) {
    throw DivergenceError(
        "mpt scattering length diverges at even lambda (v = 1 is unitarity)",
        2.0 * std::round(lambda / 2.0));
  }
  if (near_nonpositive_integer(lambda)) {
    throw DivergenceError("mpt scattering length: digamma pole", std::round(lambda));
  }
  const double a_mu = pi / 2.0 / std::tan(pi * lambda / 2.0) + euler_gamma + digamma(lambda);
  return a_mu / mu;
}

double mpt_unitarity_u(double mu, double R, double r) {
  if (!(mu > 0.0) || !(R > 0.0) || r < 0.0 || r > R * (1.0 + 1e-12)) {
    throw InvalidArgumentError("mpt_unitarity_u: need mu, R > 0 and 0 <= r <= R");
  }
  return std::tanh(mu * r) / std::tanh(mu * R);
}

double mpt_unitarity_r0(double mu) {
  if (!(mu > 0.0)) throw InvalidArgumentError("mpt_unitarity_r0: mu must be > 0");
  return 2.0 / mu;
}

}  // namespace lowscat::analytic
