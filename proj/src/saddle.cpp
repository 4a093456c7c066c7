#include "saddlecalc/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {

SandwichFailure::SandwichFailure(int row, int col, Certificate certificate)
    : std::runtime_error("approximant pair (" + std::to_string(row) + ", " +
                         std::to_string(col) +
                         ") has disjoint generator hulls"),
      row_(row),
      col_(col),
      certificate_(std::move(certificate)) {}

SaddleFamily from_dc(const DCPair& p, const Tolerances& tol) {
  const PointSet plus = minimal_generators(p.plus().generators(), tol);
  const PointSet minus = minimal_generators(p.minus().generators(), tol);
  std::vector<Vector> entries;
  entries.reserve(static_cast<size_t>(minus.size()) * plus.size());
  for (int i = 0; i < minus.size(); ++i) {
    for (int s = 0; s < plus.size(); ++s) {
      entries.push_back(plus[s] - minus[i]);
    }
  }
  return SaddleFamily(p.dim(), minus.size(), plus.size(), std::move(entries));
}

SaddleFamily build_from_approximations(const ApproximationFamilies& fams,
                                       const Tolerances& tol) {
  const int rows = static_cast<int>(fams.upper().size());
  const int cols = static_cast<int>(fams.lower().size());
  std::vector<Vector> entries;
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    for (int s = 0; s < cols; ++s) {
      const IntersectionPoint ip = polytope_intersection_point(
          fams.upper()[static_cast<size_t>(i)].generators(),
          fams.lower()[static_cast<size_t>(s)].generators(), tol);
      if (!ip.nonempty) throw SandwichFailure(i, s, ip.certificate);
      entries.push_back(ip.point);
    }
  }
  return SaddleFamily(fams.dim(), rows, cols, std::move(entries));
}

DCPair saddle_to_dc(const SaddleFamily& F, const Tolerances& tol) {
  const int rows = F.rows();
  const Vector origin = Vector::zero(F.dim());
  const PointSet zero(std::vector<Vector>{origin});

  auto reduced_sum = [&](const PointSet& a, const PointSet& b) {
    return minimal_generators(minkowski_sum(a, b), tol);
  };

  // prefix[i] = rows 0..i-1 summed, suffix[i] = rows i..end; everything
  // reduced so translate-heavy grids stay small.
  std::vector<PointSet> prefix{zero};
  for (int i = 0; i < rows; ++i) {
    prefix.push_back(reduced_sum(prefix.back(), F.row_points(i)));
  }
  std::vector<PointSet> suffix(static_cast<size_t>(rows) + 1, zero);
  for (int i = rows - 1; i >= 0; --i) {
    suffix[static_cast<size_t>(i)] =
        reduced_sum(F.row_points(i), suffix[static_cast<size_t>(i) + 1]);
  }

  PointSet leave_out_union = reduced_sum(prefix[0], suffix[1]);
  for (int j = 1; j < rows; ++j) {
    leave_out_union = merged(
        leave_out_union,
        reduced_sum(prefix[static_cast<size_t>(j)], suffix[static_cast<size_t>(j) + 1]));
  }

  return DCPair(MaxOfLinear(prefix[static_cast<size_t>(rows)]),
                MaxOfLinear(minimal_generators(leave_out_union, tol)));
}

SaddleReport verify_saddle(const SaddleFamily& F, const SphereSampler& sampler,
                           bool exact_low_dim, const Tolerances& tol) {
  std::vector<Vector> candidates = sample_sphere(sampler);
  bool exact = false;
  if (exact_low_dim && F.dim() == 1) {
    candidates.push_back(Vector({1.0}));
    candidates.push_back(Vector({-1.0}));
    exact = true;
  } else if (exact_low_dim && F.dim() == 2) {
    // Both envelope readings are piecewise sinusoidal along the circle
    // with breakpoints where two entries tie; the gap maximum therefore
    // sits at a tie angle or where the circle direction is parallel to
    // an active entry difference. Enumerate both per entry pair.
    const auto& entries = F.entries();
    for (size_t a = 0; a < entries.size(); ++a) {
      for (size_t b = a + 1; b < entries.size(); ++b) {
        const Vector d = entries[a] - entries[b];
        const double len = norm(d);
        if (len < 1e-14) continue;
        const Vector u = (1.0 / len) * d;
        const Vector perp = Vector({-u[1], u[0]});
        candidates.push_back(u);
        candidates.push_back(-u);
        candidates.push_back(perp);
        candidates.push_back(-perp);
      }
    }
    candidates.push_back(Vector({1.0, 0.0}));
    candidates.push_back(Vector({0.0, 1.0}));
    candidates.push_back(Vector({-1.0, 0.0}));
    candidates.push_back(Vector({0.0, -1.0}));
    exact = true;
  }

  SaddleReport report;
  report.exact = exact;
  report.witness = candidates.front();
  report.max_gap = -std::numeric_limits<double>::infinity();
  for (const Vector& x : candidates) {
    const double gap = eval_infsup(F, x) - eval_supinf(F, x);
    if (gap > report.max_gap) {
      report.max_gap = gap;
      report.witness = x;
    }
  }
  report.is_saddle = report.max_gap <= tol.verify;
  return report;
}

bool validate_sandwich(const SaddleFamily& F, const ApproximationFamilies& fams,
                       const Tolerances& tol) {
  if (F.rows() != static_cast<int>(fams.upper().size()) ||
      F.cols() != static_cast<int>(fams.lower().size()) ||
      F.dim() != fams.dim()) {
    throw DimensionMismatch("family grid is not index-aligned with the approximation families");
  }
  for (int i = 0; i < F.rows(); ++i) {
    for (int s = 0; s < F.cols(); ++s) {
      const Vector& a = F.entry(i, s);
      if (!in_convex_hull(a, fams.upper()[static_cast<size_t>(i)].generators(), tol).inside) {
        return false;
      }
      if (!in_convex_hull(a, fams.lower()[static_cast<size_t>(s)].generators(), tol).inside) {
        return false;
      }
    }
  }
  return true;
}

SaddleFamily reduce(const SaddleFamily& F, const SphereSampler& sampler,
                    const Tolerances& tol) {
  const std::vector<Vector> samples = sample_sphere(sampler);
  const int ns = static_cast<int>(samples.size());
  const int rows = F.rows();
  const int cols = F.cols();

  // <a_is, x_t> for every entry and sample.
  std::vector<double> dots(static_cast<size_t>(rows) * cols * ns);
  auto dot_at = [&](int i, int s, int t) -> double& {
    return dots[(static_cast<size_t>(i) * cols + s) * ns + t];
  };
  for (int i = 0; i < rows; ++i) {
    for (int s = 0; s < cols; ++s) {
      for (int t = 0; t < ns; ++t) {
        dot_at(i, s, t) = dot(F.entry(i, s), samples[static_cast<size_t>(t)]);
      }
    }
  }

  std::vector<bool> row_kept(static_cast<size_t>(rows), true);
  std::vector<bool> col_kept(static_cast<size_t>(cols), true);

  auto infsup_at = [&](int t) {
    double outer = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      if (!row_kept[static_cast<size_t>(i)]) continue;
      double inner = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < cols; ++s) {
        if (col_kept[static_cast<size_t>(s)]) inner = std::max(inner, dot_at(i, s, t));
      }
      outer = std::min(outer, inner);
    }
    return outer;
  };
  auto supinf_at = [&](int t) {
    double outer = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < cols; ++s) {
      if (!col_kept[static_cast<size_t>(s)]) continue;
      double inner = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows; ++i) {
        if (row_kept[static_cast<size_t>(i)]) inner = std::min(inner, dot_at(i, s, t));
      }
      outer = std::max(outer, inner);
    }
    return outer;
  };

  std::vector<double> ref_inf(static_cast<size_t>(ns));
  std::vector<double> ref_sup(static_cast<size_t>(ns));
  for (int t = 0; t < ns; ++t) {
    ref_inf[static_cast<size_t>(t)] = infsup_at(t);
    ref_sup[static_cast<size_t>(t)] = supinf_at(t);
  }

  // Accept a tentative removal only when both readings stay within
  // tol.verify of the original at every sample; for saddle families
  // dominance-based removals always do, for arbitrary grids this guard
  // keeps the operation safe.
  auto evaluations_preserved = [&] {
    for (int t = 0; t < ns; ++t) {
      if (std::abs(infsup_at(t) - ref_inf[static_cast<size_t>(t)]) > tol.verify) return false;
      if (std::abs(supinf_at(t) - ref_sup[static_cast<size_t>(t)]) > tol.verify) return false;
    }
    return true;
  };

  auto row_dup = [&](int a, int b) {
    for (int s = 0; s < cols; ++s) {
      if (norm(F.entry(a, s) - F.entry(b, s)) > tol.duplicate) return false;
    }
    return true;
  };
  auto col_dup = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) {
      if (norm(F.entry(i, a) - F.entry(i, b)) > tol.duplicate) return false;
    }
    return true;
  };
  // Row i is a dominated upper approximant: everywhere above a kept row
  // by more than the margin, so it never attains the lower envelope.
  auto row_dominated = [&](int i) {
    for (int j = 0; j < rows; ++j) {
      if (j == i || !row_kept[static_cast<size_t>(j)]) continue;
      bool above = true;
      for (int t = 0; t < ns && above; ++t) {
        double gi = -std::numeric_limits<double>::infinity();
        double gj = -std::numeric_limits<double>::infinity();
        for (int s = 0; s < cols; ++s) {
          if (!col_kept[static_cast<size_t>(s)]) continue;
          gi = std::max(gi, dot_at(i, s, t));
          gj = std::max(gj, dot_at(j, s, t));
        }
        above = gi >= gj + tol.verify;
      }
      if (above) return true;
    }
    return false;
  };
  auto col_dominated = [&](int s) {
    for (int r = 0; r < cols; ++r) {
      if (r == s || !col_kept[static_cast<size_t>(r)]) continue;
      bool below = true;
      for (int t = 0; t < ns && below; ++t) {
        double hs = std::numeric_limits<double>::infinity();
        double hr = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows; ++i) {
          if (!row_kept[static_cast<size_t>(i)]) continue;
          hs = std::min(hs, dot_at(i, s, t));
          hr = std::min(hr, dot_at(i, r, t));
        }
        below = hs <= hr - tol.verify;
      }
      if (below) return true;
    }
    return false;
  };

  auto try_remove = [&](std::vector<bool>& kept, int index, bool candidate) {
    if (!candidate) return;
    kept[static_cast<size_t>(index)] = false;
    if (!evaluations_preserved()) kept[static_cast<size_t>(index)] = true;
  };

  for (int i = 0; i < rows; ++i) {
    if (!row_kept[static_cast<size_t>(i)]) continue;
    bool dup = false;
    for (int j = 0; j < i && !dup; ++j) {
      dup = row_kept[static_cast<size_t>(j)] && row_dup(i, j);
    }
    try_remove(row_kept, i, dup || row_dominated(i));
  }
  for (int s = 0; s < cols; ++s) {
    if (!col_kept[static_cast<size_t>(s)]) continue;
    bool dup = false;
    for (int r = 0; r < s && !dup; ++r) {
      dup = col_kept[static_cast<size_t>(r)] && col_dup(s, r);
    }
    try_remove(col_kept, s, dup || col_dominated(s));
  }

  std::vector<Vector> entries;
  int kept_rows = 0;
  int kept_cols = 0;
  for (int i = 0; i < rows; ++i) kept_rows += row_kept[static_cast<size_t>(i)] ? 1 : 0;
  for (int s = 0; s < cols; ++s) kept_cols += col_kept[static_cast<size_t>(s)] ? 1 : 0;
  entries.reserve(static_cast<size_t>(kept_rows) * kept_cols);
  for (int i = 0; i < rows; ++i) {
    if (!row_kept[static_cast<size_t>(i)]) continue;
    for (int s = 0; s < cols; ++s) {
      if (col_kept[static_cast<size_t>(s)]) entries.push_back(F.entry(i, s));
    }
  }
  return SaddleFamily(F.dim(), kept_rows, kept_cols, std::move(entries));
}

SaddleFamily reduce(const SaddleFamily& F, const Tolerances& tol) {
  return reduce(F, default_sphere_cover(F.dim()), tol);
}

}  // namespace saddlecalc
