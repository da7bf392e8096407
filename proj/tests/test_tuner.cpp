#include <doctest.h>

#include <cmath>
#include <vector>

#include "lowscat/analytic.hpp"
#include "lowscat/errors.hpp"
#include "lowscat/tuner.hpp"

using namespace lowscat;
using namespace lowscat::tuner;
using lowscat::potentials::Family;
using lowscat::potentials::PotentialSpec;

namespace {

observables::SolverConfig coarse() {
  observables::SolverConfig c;
  c.dr = 5e-4;
  return c;
}

}  // namespace

TEST_CASE("solve_1d on the identity map") {
  const auto obj = [](double x) { return Eval1D{x, 0}; };
  CHECK(solve_1d(obj, {0.0, 1.0}, 0.5, 1e-12, true, 0, true) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(solve_1d(obj, {0.0, 1.0}, 0.5, 1e-12, true, std::nullopt, true) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(solve_1d(obj, {1.0, 0.5}, 0.5, 1e-12, true, std::nullopt, true),
                  InvalidArgumentError);
  // unreachable target
  CHECK_THROWS_AS(solve_1d(obj, {0.0, 1.0}, 2.0, 1e-12, true, std::nullopt, true),
                  NoBracketError);
}

TEST_CASE("solve_1d inverts the analytic well scattering length") {
  // a(v) at R = 1, target a = -3, oracle = dense scan of the closed form
  const auto obj = [](double v) {
    return Eval1D{analytic::well_scattering_length(v, 1.0),
                  analytic::well_bound_state_count(v)};
  };
  const double v = solve_1d(obj, {0.05, 1.2}, -3.0, 1e-10, false, 0, true);
  double v_scan = 0.0;
  double best = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double vv = 0.05 + (1.2 - 0.05) * i / 200000.0;
    const double diff = std::abs(analytic::well_scattering_length(vv, 1.0) + 3.0);
    if (diff < best) {
      best = diff;
      v_scan = vv;
    }
  }
  CHECK(v == doctest::Approx(v_scan).epsilon(1e-4));
}

TEST_CASE("solve_1d node guard rejects the wrong sector") {
  // pretend the upper half of the bracket crosses a node boundary
  const auto obj = [](double x) { return Eval1D{x, x > 0.6 ? 1 : 0}; };
  const double p = solve_1d(obj, {0.0, 1.0}, 0.55, 1e-9, true, 0, true);
  CHECK(p == doctest::Approx(0.55).epsilon(1e-6));
  // target beyond the sector boundary cannot be reached
  CHECK_THROWS_AS(solve_1d(obj, {0.0, 1.0}, 0.9, 1e-9, true, 0, true), NoBracketError);
}

TEST_CASE("well scattering length falls with depth inside a sector") {
  double prev = 0.0;
  bool first = true;
  for (double v = 0.2; v <= 1.1; v += 0.1) {
    const double a = analytic::well_scattering_length(v, 1.0);
    if (!first) CHECK(a < prev);
    prev = a;
    first = false;
  }
}

TEST_CASE("mu rescaling moves r0 inversely") {
  for (const auto& base : {PotentialSpec::modified_poschl_teller(1.4388, 0.8631),
                           PotentialSpec::gaussian(1.9102, 0.6754)}) {
    auto half = base;
    half.mu = base.mu / 2.0;
    const auto obs1 = observables::compute_observables(
        base, potentials::derive_range(base), coarse());
    const auto obs2 = observables::compute_observables(
        half, potentials::derive_range(half), coarse());
    CHECK(*obs2.r0 == doctest::Approx(2.0 * *obs1.r0).epsilon(0.01));
  }
}

TEST_CASE("tune hits the nn well benchmark") {
  TuneTarget target;
  target.a_target = {-18.5, false};
  target.r0_target = 2.7;
  target.desired_nodes = 0;
  const auto result = tune(Family::spherical_well,
                           default_cold_start(Family::spherical_well, target), target,
                           coarse());
  CHECK(result.converged);
  CHECK(result.outer_iterations <= 60);
  CHECK(result.spec.v == doctest::Approx(1.1096).epsilon(0.005));
  CHECK(result.spec.mu == doctest::Approx(0.3918).epsilon(0.005));
  CHECK(result.achieved.nodes == target.desired_nodes);
  CHECK(std::abs(result.achieved.a.value - (-18.5)) / 18.5 <= target.tol_a);
  CHECK(std::abs(*result.achieved.r0 - 2.7) / 2.7 <= target.tol_r0);
}

TEST_CASE("converged tunes are fixed points") {
  TuneTarget target;
  target.a_target = {5.4, false};
  target.r0_target = 1.7;
  target.desired_nodes = 1;
  const auto first = tune(Family::spherical_well,
                          default_cold_start(Family::spherical_well, target), target,
                          coarse());
  CHECK(first.converged);
  const auto again = tune(Family::spherical_well, first.spec, target, coarse());
  CHECK(again.converged);
  CHECK(again.outer_iterations <= 2);
}

TEST_CASE("tune solves the mPT depth the analytic formula predicts") {
  // inner a-solve example: a(v) at mu = 0.7991, target -18.51 -> v near 0.9071
  TuneTarget target;
  target.a_target = {-18.51, false};
  target.r0_target = 2.7;
  target.desired_nodes = 0;
  const auto result = tune(Family::modified_poschl_teller,
                           default_cold_start(Family::modified_poschl_teller, target),
                           target, coarse());
  CHECK(result.converged);
  CHECK(result.spec.v == doctest::Approx(0.9071).epsilon(0.005));
  CHECK(result.spec.mu == doctest::Approx(0.7991).epsilon(0.005));
}

TEST_CASE("tune rejects unusable inputs") {
  TuneTarget target;
  target.a_target = {5.4, false};
  target.r0_target = 1.7;
  CHECK_THROWS_AS(tune(Family::tabulated,
                       PotentialSpec::tabulated({0.0, 1.0}, {0.0, 0.0}), target, coarse()),
                  InvalidArgumentError);
  CHECK_THROWS_AS(tune(Family::gaussian, PotentialSpec::spherical_well(1.0, 1.0), target,
                       coarse()),
                  InvalidArgumentError);
  target.r0_target = -1.0;
  CHECK_THROWS_AS(tune(Family::gaussian, PotentialSpec::gaussian(1.0, 1.0), target,
                       coarse()),
                  InvalidArgumentError);
}

TEST_CASE("scan matches the analytic well curve and flags divergences") {
  std::vector<double> grid;
  for (double v = 0.2; v <= 5.0; v += 0.15) grid.push_back(v);
  const auto rows = scan(PotentialSpec::spherical_well(1.0, 1.0), VariedParam::v, grid,
                         coarse());
  REQUIRE(rows.size() == grid.size());
  bool saw_flag = false;
  for (const auto& row : rows) {
    REQUIRE(row.ok);
    if (row.divergence_flag || row.obs.a.unitary) {
      saw_flag = true;
      continue;  // pole neighbourhood: the closed form is not comparable
    }
    const double exact = analytic::well_scattering_length(row.param, 1.0);
    if (std::abs(exact) < 50.0) {
      CHECK(row.obs.a.value == doctest::Approx(exact).epsilon(1e-3));
    }
  }
  CHECK(saw_flag);  // the grid straddles pi^2/8 where a diverges
}

TEST_CASE("scan: pure repulsion end of the Lennard-Jones family") {
  // a > 0 at c6 ~ 0 comes from the repulsive core, not a bound state
  const auto rows = scan(PotentialSpec::lennard_jones(0.00034068, 0.26462461),
                         VariedParam::c6, {1e-6}, coarse());
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].ok);
  CHECK(rows[0].obs.a.value > 0.0);
  CHECK(rows[0].obs.nodes == 0);
}

TEST_CASE("scan: empty grid gives an empty table") {
  CHECK(scan(PotentialSpec::gaussian(1.0, 1.0), VariedParam::v, {}, coarse()).empty());
}

TEST_CASE("scan records per-row failures and continues") {
  const auto rows = scan(PotentialSpec::lennard_jones(1.0, 1.0), VariedParam::c6,
                         {1e9, 1.0}, coarse());
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].ok);   // tail beyond max radius
  CHECK(!rows[0].error.empty());
  CHECK(rows[1].ok);
}
