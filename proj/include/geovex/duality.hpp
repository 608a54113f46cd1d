#pragma once

#include <string>
#include <vector>

#include "geovex/certify.hpp"
#include "geovex/vfp.hpp"

namespace geovex {

/// Candidate for the ratio program's dual: a base point `lambda`, ratio
/// levels `zeta` (one per objective), and weights `alpha` (> 0, per
/// objective) and `beta` (>= 0, per constraint).
struct DualPoint {
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  Scalar lambda = Scalar(0);
  std::vector<Scalar> zeta;
};

/// Verifies the dual feasibility conditions over the probe points, first
/// failure wins, in the order: region, fixed-point, signs, numerator-level
/// (f_i(lambda) - zeta_i g_i(lambda) >= 0), constraint-level
/// (beta_j h_j(lambda) >= 0), stationarity (the alpha/beta-weighted
/// directional derivative sum is nonnegative toward every probe).
/// Certified means dual-feasible. Divergent derivative rows downgrade a
/// would-be Certified to Inconclusive.
CertVerdict dual_feasible(const VfpInstance& inst, const EGeodesicSpace& space,
                          const DualPoint& dual, const ProbeSet& probes);

/// A feasible primal point whose ratio vector strictly undercuts a feasible
/// dual's levels, together with the hypothesis checks that explain it: when
/// the scan finds such a pair, at least one of the aggregate hypotheses
/// (margin class of sum alpha_i (f_i - zeta_i g_i), quasi class of
/// sum beta_j h_j) must fail, and `failed_hypotheses` names which.
struct DualityViolation {
  Scalar primal = Scalar(0);
  std::size_t dual_index = 0;
  std::vector<Scalar> ratios;
  std::vector<HypothesisRow> hypothesis_rows;
  std::vector<std::string> failed_hypotheses;
};

struct WeakDualityReport {
  int pairs_checked = 0;
  std::vector<DualityViolation> violations;
  std::vector<std::string> skipped;  // duals not scanned (infeasible) or caveats

  bool consistent() const { return violations.empty(); }
};

/// Scans every (feasible grid point, feasible dual) pair for a strict
/// componentwise violation of the ratio bound.
WeakDualityReport weak_duality_scan(const VfpInstance& inst,
                                    const EGeodesicSpace& space,
                                    const std::vector<DualPoint>& duals,
                                    const std::vector<Scalar>& grid,
                                    const ProbePolicy& policy = ProbePolicy{});

enum class ConverseOutcome { Consistent, Violation, PremiseViolated, Inconclusive };

std::string converse_outcome_name(ConverseOutcome outcome);

struct ConverseReport {
  ConverseOutcome outcome = ConverseOutcome::Inconclusive;
  std::vector<HypothesisRow> hypotheses;
  std::vector<std::string> notes;
};

/// Converse direction: when the dual's levels equal the exact ratio vector
/// both at the dual base and at `kbar` (a strict premise -- any mismatch is
/// reported as PremiseViolated, not an error), the dual is feasible, and the
/// shifted objectives and constraints pass their chord-class hypotheses,
/// then `kbar` must be grid-weakly-efficient. A certified setup whose base
/// the oracle rejects is a Violation.
ConverseReport converse_duality_check(const VfpInstance& inst,
                                      const EGeodesicSpace& space,
                                      const DualPoint& dual, const Scalar& kbar,
                                      const std::vector<Scalar>& grid,
                                      const ProbePolicy& policy = ProbePolicy{});

}  // namespace geovex
