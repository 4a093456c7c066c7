#include "saddlecalc/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {
namespace {

constexpr double kPivotTol = 1e-11;   // entries below this never pivot
constexpr double kReducedTol = 1e-10; // reduced costs above -this are "done"

// Dense tableau over the standard form  A u = b, u >= 0, b >= 0.
// One artificial column per row sits at the end and never re-enters the
// basis once phase 1 is over; slacks and split/shifted variables come
// before them.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + slack + artificial columns
  std::vector<double> body;  // rows x (cols + 1), last column is the rhs
  std::vector<double> cost;  // cols + 1, last entry is -objective value
  std::vector<int> basis;    // basic column per row

  double& at(int i, int j) { return body[static_cast<size_t>(i) * (cols + 1) + j]; }
  double at(int i, int j) const { return body[static_cast<size_t>(i) * (cols + 1) + j]; }
  double& rhs(int i) { return at(i, cols); }

  void pivot(int r, int e) {
    const double piv = at(r, e);
    const double inv = 1.0 / piv;
    for (int j = 0; j <= cols; ++j) at(r, j) *= inv;
    at(r, e) = 1.0;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const double f = at(i, e);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) at(i, j) -= f * at(r, j);
      at(i, e) = 0.0;
    }
    const double fc = cost[static_cast<size_t>(e)];
    if (fc != 0.0) {
      for (int j = 0; j <= cols; ++j) {
        cost[static_cast<size_t>(j)] -= fc * at(r, j);
      }
      cost[static_cast<size_t>(e)] = 0.0;
    }
    basis[static_cast<size_t>(r)] = e;
  }
};

enum class LoopOutcome { kOptimal, kUnbounded };

// Runs simplex iterations on `t` restricted to entering columns
// [0, limit). Most-negative entering rule for the first `budget`
// iterations, Bland's rule afterwards; leaving row by minimum ratio with
// ties broken by the smallest basic column index.
LoopOutcome run_simplex(Tableau& t, int limit, long budget, long hard_cap,
                        long* iterations) {
  while (true) {
    if (*iterations > hard_cap) {
      throw NumericalFailure("simplex cycling guard exceeded after " +
                             std::to_string(hard_cap) + " pivots");
    }
    const bool bland = *iterations >= budget;
    int entering = -1;
    double best = -kReducedTol;
    for (int j = 0; j < limit; ++j) {
      const double rc = t.cost[static_cast<size_t>(j)];
      if (rc < best) {
        entering = j;
        if (bland) break;
        best = rc;
      }
    }
    if (entering < 0) return LoopOutcome::kOptimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.rows; ++i) {
      const double a = t.at(i, entering);
      if (a <= kPivotTol) continue;
      const double ratio = t.rhs(i) / a;
      if (ratio < best_ratio - 1e-13 ||
          (ratio <= best_ratio + 1e-13 && leaving >= 0 &&
           t.basis[static_cast<size_t>(i)] <
               t.basis[static_cast<size_t>(leaving)])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) return LoopOutcome::kUnbounded;
    t.pivot(leaving, entering);
    ++(*iterations);
  }
}

}  // namespace

LPSolution lp_solve(const LPProblem& problem, const Tolerances& tol) {
  const int nv = problem.objective.dim();
  if (nv == 0) throw DimensionMismatch("LP objective must be nonempty");
  for (const auto& [a, b] : problem.equalities) {
    (void)b;
    if (a.dim() != nv) throw DimensionMismatch("LP equality row dimension");
  }
  for (const auto& [a, b] : problem.inequalities) {
    (void)b;
    if (a.dim() != nv) throw DimensionMismatch("LP inequality row dimension");
  }
  if (!problem.lower_bounds.empty() &&
      static_cast<int>(problem.lower_bounds.size()) != nv) {
    throw DimensionMismatch("LP lower-bound list length");
  }

  const int ne = static_cast<int>(problem.equalities.size());
  const int ni = static_cast<int>(problem.inequalities.size());
  const int m = ne + ni;
  if (m == 0) {
    // No rows: the problem is x free (or bounded below); any nonzero
    // objective component on a free variable is unbounded.
    LPSolution out;
    std::vector<double> x(static_cast<size_t>(nv), 0.0);
    for (int j = 0; j < nv; ++j) {
      const bool bounded = !problem.lower_bounds.empty() &&
                           problem.lower_bounds[static_cast<size_t>(j)];
      const double c = problem.objective[j];
      if (bounded) {
        x[static_cast<size_t>(j)] = *problem.lower_bounds[static_cast<size_t>(j)];
        if (c < 0.0) {
          out.status = LPStatus::kUnbounded;
          return out;
        }
      } else if (c != 0.0) {
        out.status = LPStatus::kUnbounded;
        return out;
      }
    }
    out.status = LPStatus::kOptimal;
    out.point = Vector(x);
    out.value = dot(out.point, problem.objective);
    return out;
  }

  // Column layout: one column per bounded variable (shifted by its
  // bound), a +/- pair per free variable, then one slack per inequality,
  // then one artificial per row.
  struct Col {
    int var;
    double sign;
  };
  std::vector<Col> col_map;
  std::vector<double> shift(static_cast<size_t>(nv), 0.0);
  for (int j = 0; j < nv; ++j) {
    const bool bounded = !problem.lower_bounds.empty() &&
                         problem.lower_bounds[static_cast<size_t>(j)].has_value();
    if (bounded) {
      shift[static_cast<size_t>(j)] = *problem.lower_bounds[static_cast<size_t>(j)];
      col_map.push_back({j, 1.0});
    } else {
      col_map.push_back({j, 1.0});
      col_map.push_back({j, -1.0});
    }
  }
  const int n_struct = static_cast<int>(col_map.size());
  const int slack_start = n_struct;
  const int art_start = n_struct + ni;
  const int total_cols = art_start + m;

  Tableau t;
  t.rows = m;
  t.cols = total_cols;
  t.body.assign(static_cast<size_t>(m) * (total_cols + 1), 0.0);
  t.cost.assign(static_cast<size_t>(total_cols) + 1, 0.0);
  t.basis.assign(static_cast<size_t>(m), 0);

  std::vector<double> row_sign(static_cast<size_t>(m), 1.0);
  for (int i = 0; i < m; ++i) {
    const bool is_eq = i < ne;
    const auto& [a, b] =
        is_eq ? problem.equalities[static_cast<size_t>(i)]
              : problem.inequalities[static_cast<size_t>(i - ne)];
    double rhs = b;
    for (int j = 0; j < nv; ++j) rhs -= a[j] * shift[static_cast<size_t>(j)];
    const double sign = rhs < 0.0 ? -1.0 : 1.0;
    row_sign[static_cast<size_t>(i)] = sign;
    for (int k = 0; k < n_struct; ++k) {
      t.at(i, k) = sign * col_map[static_cast<size_t>(k)].sign *
                   a[col_map[static_cast<size_t>(k)].var];
    }
    if (!is_eq) t.at(i, slack_start + (i - ne)) = sign;
    t.at(i, art_start + i) = 1.0;
    t.rhs(i) = sign * rhs;
    t.basis[static_cast<size_t>(i)] = art_start + i;
  }

  // Phase 1: minimize the artificial sum. Reduced costs of the starting
  // basis are folded in by subtracting each row from the cost row.
  for (int j = 0; j <= total_cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += t.at(i, j);
    t.cost[static_cast<size_t>(j)] =
        (j >= art_start && j < total_cols ? 1.0 : 0.0) - s;
  }

  const long budget = 200 + 10L * (m + total_cols);
  const long hard_cap = 20 * budget + 20000;
  long iterations = 0;
  LoopOutcome outcome =
      run_simplex(t, art_start, budget, hard_cap, &iterations);
  if (outcome == LoopOutcome::kUnbounded) {
    throw NumericalFailure("phase-1 subproblem reported unbounded");
  }

  const double infeasibility = -t.cost[static_cast<size_t>(total_cols)];
  LPSolution out;
  if (infeasibility > tol.lp) {
    // Phase-1 duals: the artificial column for row i started as e_i with
    // cost 1, so its final reduced cost is 1 - y_i.
    out.status = LPStatus::kInfeasible;
    out.farkas.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      const double y = 1.0 - t.cost[static_cast<size_t>(art_start + i)];
      out.farkas[static_cast<size_t>(i)] = row_sign[static_cast<size_t>(i)] * y;
    }
    return out;
  }

  // Drive any artificial still basic (at value ~0) out of the basis when
  // a structural pivot exists; otherwise the row is redundant and the
  // artificial stays parked at zero.
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<size_t>(i)] < art_start) continue;
    for (int j = 0; j < art_start; ++j) {
      if (std::abs(t.at(i, j)) > 1e-9) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 cost row from the real objective.
  std::vector<double> obj(static_cast<size_t>(total_cols), 0.0);
  for (int k = 0; k < n_struct; ++k) {
    obj[static_cast<size_t>(k)] = col_map[static_cast<size_t>(k)].sign *
                                  problem.objective[col_map[static_cast<size_t>(k)].var];
  }
  for (int j = 0; j <= total_cols; ++j) {
    double s = j < total_cols ? obj[static_cast<size_t>(j)] : 0.0;
    for (int i = 0; i < m; ++i) {
      const int bi = t.basis[static_cast<size_t>(i)];
      if (bi < total_cols) s -= obj[static_cast<size_t>(bi)] * t.at(i, j);
    }
    t.cost[static_cast<size_t>(j)] = s;
  }
  for (int i = 0; i < m; ++i) {
    const int bi = t.basis[static_cast<size_t>(i)];
    t.cost[static_cast<size_t>(bi)] = 0.0;
  }

  outcome = run_simplex(t, art_start, budget, hard_cap, &iterations);
  if (outcome == LoopOutcome::kUnbounded) {
    out.status = LPStatus::kUnbounded;
    return out;
  }

  std::vector<double> u(static_cast<size_t>(total_cols), 0.0);
  for (int i = 0; i < m; ++i) {
    u[static_cast<size_t>(t.basis[static_cast<size_t>(i)])] = t.rhs(i);
  }
  std::vector<double> x(shift);
  for (int k = 0; k < n_struct; ++k) {
    x[static_cast<size_t>(col_map[static_cast<size_t>(k)].var)] +=
        col_map[static_cast<size_t>(k)].sign * u[static_cast<size_t>(k)];
  }
  out.status = LPStatus::kOptimal;
  out.point = Vector(x);
  out.value = dot(out.point, problem.objective);

  // Post-check: the reported optimum satisfies every row.
  for (int i = 0; i < m; ++i) {
    const bool is_eq = i < ne;
    const auto& [a, b] =
        is_eq ? problem.equalities[static_cast<size_t>(i)]
              : problem.inequalities[static_cast<size_t>(i - ne)];
    const double lhs = dot(a, out.point);
    const double slackv = is_eq ? std::abs(lhs - b) : lhs - b;
    if (slackv > tol.lp * std::max(1.0, std::abs(b))) {
      throw NumericalFailure("simplex optimum violates a constraint by " +
                             std::to_string(slackv));
    }
  }
  return out;
}

}  // namespace saddlecalc
