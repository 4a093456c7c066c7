#ifndef SADDLECALC_TOLERANCES_HPP
#define SADDLECALC_TOLERANCES_HPP

namespace saddlecalc {

// Central tolerance configuration. Every module reads from one of these
// records; library entry points take it as a defaulted trailing argument
// so a CLI invocation can override the values for a whole pipeline.
struct Tolerances {
  // LP feasibility and optimality slack.
  double lp = 1e-9;
  // Slack in the optimality criterion of the nearest-point computation:
  // <v, p - v> >= -nearest for all generators p.
  double nearest = 1e-9;
  // Distance below which two generators are merged as duplicates.
  double duplicate = 1e-12;
  // Gap threshold for accepting a family as a saddle representation.
  // Looser than `lp` because a gap stacks two envelope evaluations.
  double verify = 1e-7;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace saddlecalc

#endif  // SADDLECALC_TOLERANCES_HPP
