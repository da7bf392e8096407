#include "lowscat/quadrature.hpp"

#include "lowscat/errors.hpp"

namespace lowscat::quadrature {

std::string rule_name(Rule r) { return r == Rule::trapezoid ? "trapezoid" : "simpson"; }

Rule rule_from_name(const std::string& name) {
  if (name == "trapezoid") return Rule::trapezoid;
  if (name == "simpson") return Rule::simpson;
  throw InvalidArgumentError("unknown quadrature rule: " + name);
}

double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size() - 1;
  if (f.size() < 2) return 0.0;
  if (n < 2) return trapezoid(f, h);
  double acc = 0.0;
  const std::size_t m = (n % 2 == 0) ? n : n - 3;
  if (m >= 2) {
    double s = f[0] + f[m];
    for (std::size_t i = 1; i < m; i += 2) s += 4.0 * f[i];
    for (std::size_t i = 2; i < m; i += 2) s += 2.0 * f[i];
    acc += s * h / 3.0;
  }
  if (n % 2 == 1) {
    acc += 3.0 * h / 8.0 * (f[n - 3] + 3.0 * f[n - 2] + 3.0 * f[n - 1] + f[n]);
  }
  return acc;
}

double integrate(Rule rule, std::span<const double> f, double h) {
  return rule == Rule::trapezoid ? trapezoid(f, h) : simpson(f, h);
}

}  // namespace lowscat::quadrature
