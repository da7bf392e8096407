#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace lowscat::quadrature {

enum class Rule { trapezoid, simpson };

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

// Composite rules on equally spaced samples f_0..f_n (n intervals of width h).
double trapezoid(std::span<const double> f, double h);

// Composite Simpson; an odd interval count is finished with a 3/8 segment so
// the rule stays fourth order.
double simpson(std::span<const double> f, double h);

double integrate(Rule rule, std::span<const double> f, double h);

}  // namespace lowscat::quadrature
