#include "lowscat/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "lowscat/errors.hpp"

namespace lowscat::potentials {

std::string family_name(Family f) {
  switch (f) {
    case Family::spherical_well: return "well";
    case Family::modified_poschl_teller: return "mpt";
    case Family::gaussian: return "gaussian";
    case Family::lennard_jones: return "lennard-jones";
    case Family::tabulated: return "tabulated";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "well" || name == "spherical-well") return Family::spherical_well;
  if (name == "mpt" || name == "modified-poschl-teller") return Family::modified_poschl_teller;
  if (name == "gaussian") return Family::gaussian;
  if (name == "lennard-jones" || name == "lj") return Family::lennard_jones;
  if (name == "tabulated") return Family::tabulated;
  throw InvalidArgumentError("unknown potential family: " + name);
}

namespace {

void require_depth_range(double v, double mu, const char* who) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw InvalidArgumentError(std::string(who) + ": depth v must be >= 0");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidArgumentError(std::string(who) + ": inverse range mu must be > 0");
  }
}

}  // namespace

PotentialSpec PotentialSpec::spherical_well(double v, double mu) {
  require_depth_range(v, mu, "spherical_well");
  PotentialSpec s;
  s.family = Family::spherical_well;
  s.v = v;
  s.mu = mu;
  return s;
}

PotentialSpec PotentialSpec::modified_poschl_teller(double v, double mu) {
  require_depth_range(v, mu, "modified_poschl_teller");
  PotentialSpec s;
  s.family = Family::modified_poschl_teller;
  s.v = v;
  s.mu = mu;
  return s;
}

PotentialSpec PotentialSpec::modified_poschl_teller_lambda(double lambda, double mu) {
  return modified_poschl_teller(poschl_teller_depth_from_lambda(lambda), mu);
}

PotentialSpec PotentialSpec::gaussian(double v, double mu) {
  require_depth_range(v, mu, "gaussian");
  PotentialSpec s;
  s.family = Family::gaussian;
  s.v = v;
  s.mu = mu;
  return s;
}

PotentialSpec PotentialSpec::lennard_jones(double c12, double c6) {
  if (!(c12 > 0.0) || !std::isfinite(c12)) {
    throw InvalidArgumentError("lennard_jones: c12 must be > 0");
  }
  if (!(c6 >= 0.0) || !std::isfinite(c6)) {
    throw InvalidArgumentError("lennard_jones: c6 must be >= 0");
  }
  PotentialSpec s;
  s.family = Family::lennard_jones;
  s.c12 = c12;
  s.c6 = c6;
  return s;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> r, std::vector<double> v) {
  if (r.size() != v.size() || r.size() < 2) {
    throw InvalidArgumentError("tabulated: need matching r/v arrays with >= 2 samples");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(v[i])) {
      throw InvalidArgumentError("tabulated: samples must be finite");
    }
    if (i > 0 && !(r[i] > r[i - 1])) {
      throw InvalidArgumentError("tabulated: radii must be strictly increasing");
    }
  }
  if (r.front() < 0.0) throw InvalidArgumentError("tabulated: radii must be >= 0");
  PotentialSpec s;
  s.family = Family::tabulated;
  s.table_r = std::move(r);
  s.table_v = std::move(v);
  return s;
}

double poschl_teller_depth_from_lambda(double lambda) {
  return lambda * (lambda - 1.0) / 2.0;
}

double poschl_teller_lambda_from_depth(double v) {
  // lambda > 1 root of v = lambda (lambda - 1) / 2
  return (1.0 + std::sqrt(1.0 + 8.0 * v)) / 2.0;
}

double evaluate(const PotentialSpec& spec, double r) {
  if (r < 0.0) throw DomainError("evaluate: r must be >= 0");
  switch (spec.family) {
    case Family::spherical_well:
      return (r < 1.0 / spec.mu) ? -spec.v * spec.mu * spec.mu : 0.0;
    case Family::modified_poschl_teller: {
      const double c = std::cosh(spec.mu * r);
      return -spec.v * spec.mu * spec.mu / (c * c);
    }
    case Family::gaussian:
      return -spec.v * spec.mu * spec.mu * std::exp(-r * r * spec.mu * spec.mu);
    case Family::lennard_jones: {
      if (r == 0.0) throw DomainError("lennard-jones potential diverges at r = 0");
      const double r2 = r * r;
      const double r6 = r2 * r2 * r2;
      return (spec.c12 / (r6 * r6) - spec.c6 / r6) / 2.0;
    }
    case Family::tabulated: {
      const auto& xs = spec.table_r;
      const auto& ys = spec.table_v;
      if (r >= xs.back()) return 0.0;
      if (r <= xs.front()) return ys.front();
      const auto it = std::upper_bound(xs.begin(), xs.end(), r);
      const std::size_t i = static_cast<std::size_t>(it - xs.begin());
      const double t = (r - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return ys[i - 1] + t * (ys[i] - ys[i - 1]);
    }
  }
  throw InvalidArgumentError("evaluate: bad family");
}

namespace {

double align_up(double r) {
  return std::ceil(r / policy::range_lattice) * policy::range_lattice;
}

// All supported families decay monotonically beyond their attractive minimum,
// so checking a handful of points past R is enough.
void verify_tail(const PotentialSpec& spec, double R, double eps) {
  for (int j = 1; j <= 8; ++j) {
    const double r = R * (1.0 + j / 8.0);
    if (std::abs(evaluate(spec, r)) > eps) {
      throw RangeNotFoundError("derive_range: tail not negligible beyond R");
    }
  }
}

double find_tail_radius(const PotentialSpec& spec, double start, double eps,
                        double max_radius) {
  double lo = start;
  double hi = start;
  double step = std::max(start, 1.0) * 0.25;
  while (std::abs(evaluate(spec, hi)) > eps) {
    lo = hi;
    hi += step;
    step *= 1.5;
    if (hi > max_radius) {
      throw RangeNotFoundError("derive_range: no radius with |V| <= epsilon_tail below max_radius");
    }
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(evaluate(spec, mid)) > eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double lennard_jones_core(const PotentialSpec& spec, double threshold) {
  // Bisect the monotone repulsive branch for the largest r with V(r) >= threshold.
  double hi = (spec.c6 > 0.0) ? std::pow(spec.c12 / spec.c6, 1.0 / 6.0)
                              : std::pow(spec.c12 / (2.0 * threshold), 1.0 / 12.0) * 2.0;
  double lo = hi;
  while (evaluate(spec, lo) < threshold) lo *= 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (evaluate(spec, mid) >= threshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

RangeInfo derive_range(const PotentialSpec& spec, const RangeOptions& opts) {
  if (!(opts.epsilon_tail > 0.0) || !(opts.core_threshold > 0.0)) {
    throw InvalidArgumentError("derive_range: thresholds must be > 0");
  }
  RangeInfo info;
  info.epsilon_tail = opts.epsilon_tail;
  info.core_threshold = opts.core_threshold;
  switch (spec.family) {
    case Family::spherical_well:
      // Definitional: the discontinuity sits exactly at R = 1/mu.
      info.R = 1.0 / spec.mu;
      return info;
    case Family::modified_poschl_teller:
    case Family::gaussian: {
      info.R = align_up(find_tail_radius(spec, 0.5 / spec.mu, opts.epsilon_tail,
                                         opts.max_radius));
      verify_tail(spec, info.R, opts.epsilon_tail);
      return info;
    }
    case Family::lennard_jones: {
      // |V| is not monotone (it dips through zero between the core and the
      // attractive tail), so march-and-bisect can stop in the dip. Both
      // parts have closed-form epsilon radii; past their maximum the sum is
      // below threshold for good.
      const double eps = opts.epsilon_tail;
      const double r_rep = std::pow(spec.c12 / (2.0 * eps), 1.0 / 12.0);
      const double r_att = spec.c6 > 0.0 ? std::pow(spec.c6 / (2.0 * eps), 1.0 / 6.0) : 0.0;
      info.R = align_up(std::max(r_rep, r_att));
      if (info.R > opts.max_radius) {
        throw RangeNotFoundError("derive_range: Lennard-Jones tail exceeds max_radius");
      }
      verify_tail(spec, info.R, eps);
      info.r_min = lennard_jones_core(spec, opts.core_threshold);
      return info;
    }
    case Family::tabulated: {
      // Support ends at the last sample with |v| above the tail threshold.
      double support = 0.0;
      for (std::size_t i = 0; i < spec.table_r.size(); ++i) {
        if (std::abs(spec.table_v[i]) > opts.epsilon_tail) support = spec.table_r[i];
      }
      if (support == 0.0) {
        info.R = spec.table_r.back();
        return info;
      }
      info.R = align_up(find_tail_radius(spec, support, opts.epsilon_tail,
                                         std::max(opts.max_radius, spec.table_r.back())));
      verify_tail(spec, info.R, opts.epsilon_tail);
      return info;
    }
  }
  throw InvalidArgumentError("derive_range: bad family");
}

PotentialSpec potential_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("potential JSON parse error: ") + e.what());
  }
  try {
    const Family f = family_from_name(j.at("family").get<std::string>());
    switch (f) {
      case Family::spherical_well:
        return PotentialSpec::spherical_well(j.at("v").get<double>(), j.at("mu").get<double>());
      case Family::modified_poschl_teller:
        if (j.contains("lambda")) {
          return PotentialSpec::modified_poschl_teller_lambda(j.at("lambda").get<double>(),
                                                              j.at("mu").get<double>());
        }
        return PotentialSpec::modified_poschl_teller(j.at("v").get<double>(),
                                                     j.at("mu").get<double>());
      case Family::gaussian:
        return PotentialSpec::gaussian(j.at("v").get<double>(), j.at("mu").get<double>());
      case Family::lennard_jones:
        return PotentialSpec::lennard_jones(j.at("c12").get<double>(), j.at("c6").get<double>());
      case Family::tabulated:
        return PotentialSpec::tabulated(j.at("r").get<std::vector<double>>(),
                                        j.at("v").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("potential JSON missing field: ") + e.what());
  }
  throw InvalidArgumentError("potential JSON: bad family");
}

std::string potential_to_json_text(const PotentialSpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec.family);
  switch (spec.family) {
    case Family::spherical_well:
    case Family::modified_poschl_teller:
    case Family::gaussian:
      j["v"] = spec.v;
      j["mu"] = spec.mu;
      break;
    case Family::lennard_jones:
      j["c12"] = spec.c12;
      j["c6"] = spec.c6;
      break;
    case Family::tabulated:
      j["r"] = spec.table_r;
      j["v"] = spec.table_v;
      break;
  }
  return j.dump();
}

}  // namespace lowscat::potentials
