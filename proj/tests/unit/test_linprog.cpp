#include <doctest.h>

#include <cmath>

#include "saddlecalc/errors.hpp"
#include "saddlecalc/linprog.hpp"
#include "saddlecalc/sampling.hpp"
#include "test_helpers.hpp"

using namespace saddlecalc;
using saddlecalc::testing::vec;

TEST_CASE("single active constraint") {
  // minimize x subject to x >= 2, stated as -x <= -2.
  LPProblem lp;
  lp.objective = vec({1.0});
  lp.inequalities.emplace_back(vec({-1.0}), -2.0);
  const LPSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::kOptimal);
  CHECK(sol.point[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("empty feasible set") {
  LPProblem lp;
  lp.objective = vec({0.0});
  lp.inequalities.emplace_back(vec({1.0}), -1.0);   // x <= -1
  lp.inequalities.emplace_back(vec({-1.0}), -1.0);  // x >= 1
  const LPSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::kInfeasible);
  REQUIRE(sol.farkas.size() == 2);
  // The certificate aggregates the rows into an inconsistency:
  // y1*(x) + y2*(-x) <= y1*(-1) + y2*(-1) must fail for every x.
  CHECK(sol.farkas[0] * (-1.0) + sol.farkas[1] * (-1.0) > 0.0);
}

TEST_CASE("unbounded below") {
  LPProblem lp;
  lp.objective = vec({-1.0});
  lp.lower_bounds = {0.0};
  const LPSolution sol = lp_solve(lp);
  CHECK(sol.status == LPStatus::kUnbounded);
}

TEST_CASE("equality with free variables") {
  // minimize x + y subject to x + 2y = 4.
  LPProblem lp;
  lp.objective = vec({1.0, 1.0});
  lp.equalities.emplace_back(vec({1.0, 2.0}), 4.0);
  const LPSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::kUnbounded);  // free x drives it down
}

TEST_CASE("two-dimensional vertex optimum") {
  // minimize -x - y s.t. x + y <= 4, x <= 3, y <= 3, x,y >= 0.
  LPProblem lp;
  lp.objective = vec({-1.0, -1.0});
  lp.lower_bounds = {0.0, 0.0};
  lp.inequalities.emplace_back(vec({1.0, 1.0}), 4.0);
  lp.inequalities.emplace_back(vec({1.0, 0.0}), 3.0);
  lp.inequalities.emplace_back(vec({0.0, 1.0}), 3.0);
  const LPSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::kOptimal);
  CHECK(sol.value == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("degenerate instance terminates under the anti-cycling guard") {
  // Beale's classic degenerate tableau.
  LPProblem lp;
  lp.objective = vec({-0.75, 150.0, -0.02, 6.0});
  lp.lower_bounds = {0.0, 0.0, 0.0, 0.0};
  lp.inequalities.emplace_back(vec({0.25, -60.0, -0.04, 9.0}), 0.0);
  lp.inequalities.emplace_back(vec({0.5, -90.0, -0.02, 3.0}), 0.0);
  lp.inequalities.emplace_back(vec({0.0, 0.0, 1.0, 0.0}), 1.0);
  const LPSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::kOptimal);
  CHECK(sol.value == doctest::Approx(-0.05).epsilon(1e-9));
}

TEST_CASE("optimal points satisfy all constraints") {
  // Random bounded instances: box plus a few extra inequality rows that
  // keep the box corner region feasible.
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 4);
    LPProblem lp;
    lp.objective = saddlecalc::testing::random_point(rng, n, 2.0);
    lp.lower_bounds.assign(static_cast<size_t>(n), -1.0);
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(static_cast<size_t>(n), 0.0);
      row[static_cast<size_t>(j)] = 1.0;
      lp.inequalities.emplace_back(Vector(row), 1.0);
    }
    const int extra = static_cast<int>(rng.next() % 3);
    for (int e = 0; e < extra; ++e) {
      const Vector a = saddlecalc::testing::random_point(rng, n, 1.0);
      double bound = 0.0;
      for (int j = 0; j < n; ++j) bound += std::abs(a[j]);
      lp.inequalities.emplace_back(a, bound + rng.next_unit());
    }
    const LPSolution sol = lp_solve(lp);
    REQUIRE(sol.status == LPStatus::kOptimal);
    for (const auto& [a, b] : lp.inequalities) {
      CHECK(dot(a, sol.point) <= b + 1e-9);
    }
    for (int j = 0; j < n; ++j) CHECK(sol.point[j] >= -1.0 - 1e-9);
  }
}

TEST_CASE("deterministic for fixed input") {
  LPProblem lp;
  lp.objective = vec({-1.0, 2.0, 0.5});
  lp.lower_bounds = {0.0, 0.0, 0.0};
  lp.inequalities.emplace_back(vec({1.0, 1.0, 1.0}), 5.0);
  lp.inequalities.emplace_back(vec({2.0, -1.0, 0.0}), 3.0);
  const LPSolution a = lp_solve(lp);
  const LPSolution b = lp_solve(lp);
  REQUIRE(a.status == LPStatus::kOptimal);
  CHECK(a.point == b.point);
  CHECK(a.value == b.value);
}

TEST_CASE("malformed input is rejected") {
  LPProblem lp;
  lp.objective = vec({1.0, 2.0});
  lp.equalities.emplace_back(vec({1.0}), 0.0);
  CHECK_THROWS_AS(lp_solve(lp), DimensionMismatch);

  LPProblem lp2;
  lp2.objective = vec({1.0});
  lp2.lower_bounds = {0.0, 0.0};
  CHECK_THROWS_AS(lp_solve(lp2), DimensionMismatch);
}
