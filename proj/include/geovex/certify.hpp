#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geovex/funclass.hpp"
#include "geovex/semidiff.hpp"
#include "geovex/vfp.hpp"

namespace geovex {

/// Which sufficiency route a certificate claims. They share the base point
/// and multipliers and differ in the verified inequality set and in the
/// hypothesis battery:
///  - Basic: stationarity over all constraints, denominator descent,
///    complementary slackness, signs; hypotheses f_i/h_j chord classes and
///    concave-side denominators.
///  - Parametric: stationarity of f_i - lambda_i g_i plus active-constraint
///    terms, complementary slackness, signs; quasi/pseudo hypotheses.
///  - ScalarizedChord: Basic conditions, hypothesis on the single combined
///    function sum zeta_i f_i + sum xi_j h_j.
///  - ScalarizedMargin: Parametric conditions, hypothesis on the combined
///    parametric function restricted to active constraints.
///  - Corollary: Parametric conditions with chord-class hypotheses.
enum class CertKind { Basic, Parametric, ScalarizedChord, ScalarizedMargin, Corollary };

std::optional<CertKind> cert_kind_from_name(const std::string& name);
std::string cert_kind_name(CertKind kind);

struct Certificate {
  Scalar kbar;
  std::vector<Scalar> zeta;  // one per objective, >= 0
  std::vector<Scalar> xi;    // one per constraint, >= 0
  CertKind kind = CertKind::Basic;
};

enum class CertOutcome { Certified, Refuted, Inconclusive };

std::string cert_outcome_name(CertOutcome outcome);

/// One verified condition row. Condition ids: "fixed-point", "signs",
/// "stationarity", "denominator-descent", "complementary-slackness".
struct ConditionRow {
  std::string condition;
  bool pass = true;
  std::string detail;
};

struct CertVerdict {
  CertOutcome outcome = CertOutcome::Inconclusive;
  std::string failed_condition;        // Refuted only
  std::optional<Witness> witness;      // Refuted only; k1 = base, k2 = probe
  std::vector<ConditionRow> log;
  std::vector<std::string> inconclusive_rows;  // divergent derivative rows
  std::vector<std::string> warnings;           // e.g. all-zero zeta
};

/// Verifies the certificate's inequality conditions over the probe points.
/// Conditions are checked in a fixed order (fixed-point, signs,
/// stationarity, denominator-descent, complementary-slackness) and the
/// first failure wins. Throws ConfigError on dimension mismatch and
/// PremiseError("infeasible-base") when the base point is infeasible.
CertVerdict check_certificate(const VfpInstance& inst, const EGeodesicSpace& space,
                              const Certificate& cert, const ProbeSet& probes);

struct HypothesisRow {
  std::string name;
  CheckVerdict verdict;
};

struct HypothesisReport {
  std::vector<HypothesisRow> rows;
  bool all_pass() const;
};

/// Runs the class checks the certificate's route relies on.
HypothesisReport verify_hypotheses(const VfpInstance& inst,
                                   const EGeodesicSpace& space,
                                   const Certificate& cert, const ProbeSet& probes);

/// When the certificate verifies and its hypotheses pass, the base point
/// must be grid-weakly-efficient; any miss is a soundness counterexample.
ConsistencyReport soundness_probe(const VfpInstance& inst, const EGeodesicSpace& space,
                                  const Certificate& cert,
                                  const std::vector<Scalar>& grid);

}  // namespace geovex
