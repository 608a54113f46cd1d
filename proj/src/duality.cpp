#include "geovex/duality.hpp"

#include <algorithm>

#include "geovex/errors.hpp"
#include "geovex/funclass.hpp"
#include "geovex/semidiff.hpp"
#include "geovex/space.hpp"

namespace geovex {

std::string converse_outcome_name(ConverseOutcome outcome) {
  switch (outcome) {
    case ConverseOutcome::Consistent: return "Consistent";
    case ConverseOutcome::Violation: return "Violation";
    case ConverseOutcome::PremiseViolated: return "PremiseViolated";
    case ConverseOutcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

void require_dual_dimensions(const VfpInstance& inst, const DualPoint& dual) {
  if (dual.alpha.size() != inst.f.size() || dual.zeta.size() != inst.f.size()) {
    throw ConfigError("dual", "needs one alpha and one zeta per objective (" +
                                  std::to_string(inst.f.size()) + ")");
  }
  if (dual.beta.size() != inst.h.size()) {
    throw ConfigError("dual", "needs one beta per constraint (" +
                                  std::to_string(inst.h.size()) + ")");
  }
}

struct TermValue {
  bool usable = false;
  Scalar value = Scalar(0);
  std::string note;
};

TermValue directional_term(const FnCombo& fn, const EGeodesicSpace& space,
                           const Scalar& base, const Scalar& target,
                           const std::string& label) {
  TermValue out;
  SemiDerivative d = semiderivative(fn, space, base, target);
  if (d.kind != SdKind::Finite) {
    out.note = label + " toward " + to_string(target) + " is " + sd_kind_name(d.kind);
    return out;
  }
  if (!d.exact || !d.value.has_value()) {
    out.note = label + " toward " + to_string(target) + " is numeric-only";
    return out;
  }
  out.usable = true;
  out.value = *d.value;
  return out;
}

Witness dual_witness(const Scalar& lambda, const Scalar& k, const Scalar& lhs,
                     const std::string& condition) {
  Witness w;
  w.k1 = lambda;
  w.k2 = k;
  w.point = k;
  w.lhs = lhs;
  w.rhs = Scalar(0);
  w.condition = condition;
  return w;
}

FnCombo margin_aggregate(const VfpInstance& inst, const DualPoint& dual) {
  FnCombo combo = FnCombo::affine_shift(Scalar(0));
  for (std::size_t i = 0; i < inst.f.size(); ++i) {
    combo.add(dual.alpha[i], inst.f[i]);
    combo.add(Scalar(-dual.alpha[i] * dual.zeta[i]), inst.g[i]);
  }
  return combo;
}

FnCombo constraint_aggregate(const VfpInstance& inst, const DualPoint& dual) {
  FnCombo combo = FnCombo::affine_shift(Scalar(0));
  for (std::size_t j = 0; j < inst.h.size(); ++j) {
    combo.add(dual.beta[j], inst.h[j]);
  }
  return combo;
}

ProbeSet hypothesis_probes(const VfpInstance& inst, const EGeodesicSpace& space,
                           const ProbePolicy& policy) {
  std::vector<const ScalarFn*> fns;
  for (const auto& fn : inst.f) fns.push_back(&fn);
  for (const auto& fn : inst.g) fns.push_back(&fn);
  for (const auto& fn : inst.h) fns.push_back(&fn);
  return build_probes(inst.k0, space, policy, fns);
}

}  // namespace

CertVerdict dual_feasible(const VfpInstance& inst, const EGeodesicSpace& space,
                          const DualPoint& dual, const ProbeSet& probes) {
  require_dual_dimensions(inst, dual);

  CertVerdict out;
  auto refute = [&](const std::string& condition, Witness w, std::string detail) {
    out.outcome = CertOutcome::Refuted;
    out.failed_condition = condition;
    out.witness = std::move(w);
    out.log.push_back({condition, false, std::move(detail)});
  };

  if (!inst.k0.contains(dual.lambda)) {
    refute("region", dual_witness(dual.lambda, dual.lambda, dual.lambda, "region"),
           "base " + to_string(dual.lambda) + " lies outside the region");
    return out;
  }
  out.log.push_back({"region", true, "base lies in the region"});

  Scalar image = eval_E(space, dual.lambda);
  if (image != dual.lambda) {
    Witness w = dual_witness(dual.lambda, dual.lambda, image, "fixed-point");
    w.rhs = dual.lambda;
    refute("fixed-point", std::move(w), "point map moves the base");
    return out;
  }
  out.log.push_back({"fixed-point", true, "point map fixes " + to_string(dual.lambda)});

  for (std::size_t i = 0; i < dual.alpha.size(); ++i) {
    if (dual.alpha[i] <= 0) {
      refute("signs", dual_witness(dual.lambda, dual.lambda, dual.alpha[i], "signs"),
             "objective weight " + std::to_string(i + 1) + " is not positive");
      return out;
    }
    if (dual.zeta[i] < 0) {
      refute("signs", dual_witness(dual.lambda, dual.lambda, dual.zeta[i], "signs"),
             "ratio level " + std::to_string(i + 1) + " is negative");
      return out;
    }
  }
  for (std::size_t j = 0; j < dual.beta.size(); ++j) {
    if (dual.beta[j] < 0) {
      refute("signs", dual_witness(dual.lambda, dual.lambda, dual.beta[j], "signs"),
             "constraint weight " + std::to_string(j + 1) + " is negative");
      return out;
    }
  }
  out.log.push_back({"signs", true, "weights admissible"});

  for (std::size_t i = 0; i < inst.f.size(); ++i) {
    Scalar level = inst.f[i].eval(dual.lambda) - dual.zeta[i] * inst.g[i].eval(dual.lambda);
    if (level < 0) {
      refute("numerator-level",
             dual_witness(dual.lambda, dual.lambda, level, "numerator-level"),
             "objective " + std::to_string(i + 1) + " undercuts its level at the base");
      return out;
    }
  }
  out.log.push_back({"numerator-level", true, "levels nonnegative at the base"});

  for (std::size_t j = 0; j < inst.h.size(); ++j) {
    Scalar level = dual.beta[j] * inst.h[j].eval(dual.lambda);
    if (level < 0) {
      refute("constraint-level",
             dual_witness(dual.lambda, dual.lambda, level, "constraint-level"),
             "weighted constraint " + std::to_string(j + 1) + " is negative at the base");
      return out;
    }
  }
  out.log.push_back({"constraint-level", true, "weighted constraints nonnegative"});

  std::vector<Scalar> points;
  for (const auto& k : probes.points) {
    if (k != dual.lambda) points.push_back(k);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (const auto& k : points) {
    Scalar sum = 0;
    bool row_ok = true;
    for (std::size_t i = 0; i < inst.f.size(); ++i) {
      FnCombo term = FnCombo::of(inst.f[i]);
      term.add(-dual.zeta[i], inst.g[i]);
      TermValue tv = directional_term(term, space, dual.lambda, k,
                                      "stationarity: objective " + std::to_string(i + 1) +
                                          " (level-shifted)");
      if (!tv.usable) {
        out.inconclusive_rows.push_back(tv.note);
        row_ok = false;
        continue;
      }
      sum += dual.alpha[i] * tv.value;
    }
    for (std::size_t j = 0; j < inst.h.size(); ++j) {
      if (dual.beta[j] == 0) continue;
      TermValue tv = directional_term(FnCombo::of(inst.h[j]), space, dual.lambda, k,
                                      "stationarity: constraint " + std::to_string(j + 1));
      if (!tv.usable) {
        out.inconclusive_rows.push_back(tv.note);
        row_ok = false;
        continue;
      }
      sum += dual.beta[j] * tv.value;
    }
    if (!row_ok) continue;
    if (sum < 0) {
      refute("stationarity", dual_witness(dual.lambda, k, sum, "stationarity"),
             "failed at k=" + to_string(k));
      return out;
    }
  }
  out.log.push_back(
      {"stationarity", true, "checked " + std::to_string(points.size()) + " probes"});

  out.outcome = out.inconclusive_rows.empty() ? CertOutcome::Certified
                                              : CertOutcome::Inconclusive;
  return out;
}

WeakDualityReport weak_duality_scan(const VfpInstance& inst,
                                    const EGeodesicSpace& space,
                                    const std::vector<DualPoint>& duals,
                                    const std::vector<Scalar>& grid,
                                    const ProbePolicy& policy) {
  WeakDualityReport report;

  std::vector<Scalar> primal;
  for (const auto& k : grid) {
    if (feasible(inst, k).feasible) primal.push_back(k);
  }
  std::sort(primal.begin(), primal.end());
  primal.erase(std::unique(primal.begin(), primal.end()), primal.end());

  ProbeSet probes = hypothesis_probes(inst, space, policy);

  for (std::size_t di = 0; di < duals.size(); ++di) {
    const DualPoint& dual = duals[di];
    CertVerdict feas = dual_feasible(inst, space, dual, probes);
    if (feas.outcome == CertOutcome::Refuted) {
      report.skipped.push_back("dual " + std::to_string(di + 1) + " infeasible (" +
                               feas.failed_condition + "); not scanned");
      continue;
    }
    if (feas.outcome == CertOutcome::Inconclusive) {
      report.skipped.push_back("dual " + std::to_string(di + 1) +
                               " feasibility inconclusive; scanned anyway");
    }
    for (const auto& k : primal) {
      ++report.pairs_checked;
      std::vector<Scalar> ratios = objective_ratio(inst, k);
      bool undercuts = true;
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!(ratios[i] < dual.zeta[i])) {
          undercuts = false;
          break;
        }
      }
      if (!undercuts) continue;

      DualityViolation violation;
      violation.primal = k;
      violation.dual_index = di;
      violation.ratios = ratios;
      violation.hypothesis_rows.push_back(
          {"aggregate-objective-margin",
           check_class(space, inst.k0, margin_aggregate(inst, dual), FnClass::GPSLEP,
                       probes)});
      violation.hypothesis_rows.push_back(
          {"aggregate-constraint-quasi",
           check_class(space, inst.k0, constraint_aggregate(inst, dual),
                       FnClass::GQSLEP, probes)});
      for (const auto& row : violation.hypothesis_rows) {
        if (row.verdict.verdict != Verdict::Holds) {
          violation.failed_hypotheses.push_back(row.name);
        }
      }
      report.violations.push_back(std::move(violation));
    }
  }
  return report;
}

ConverseReport converse_duality_check(const VfpInstance& inst,
                                      const EGeodesicSpace& space,
                                      const DualPoint& dual, const Scalar& kbar,
                                      const std::vector<Scalar>& grid,
                                      const ProbePolicy& policy) {
  require_dual_dimensions(inst, dual);
  ConverseReport report;

  if (!inst.k0.contains(dual.lambda)) {
    report.outcome = ConverseOutcome::PremiseViolated;
    report.notes.push_back("dual base " + to_string(dual.lambda) +
                           " lies outside the region");
    return report;
  }
  Feasibility base_state = feasible(inst, kbar);
  if (!base_state.feasible) {
    report.outcome = ConverseOutcome::PremiseViolated;
    report.notes.push_back("claimed efficient point " + to_string(kbar) +
                           " is infeasible");
    return report;
  }

  std::vector<Scalar> at_dual = lambda_star(inst, dual.lambda);
  std::vector<Scalar> at_base = lambda_star(inst, kbar);
  for (std::size_t i = 0; i < dual.zeta.size(); ++i) {
    if (dual.zeta[i] != at_dual[i] || dual.zeta[i] != at_base[i]) {
      report.outcome = ConverseOutcome::PremiseViolated;
      report.notes.push_back("ratio levels disagree at objective " +
                             std::to_string(i + 1) + ": level " +
                             to_string(dual.zeta[i]) + ", dual base ratio " +
                             to_string(at_dual[i]) + ", point ratio " +
                             to_string(at_base[i]));
      return report;
    }
  }

  ProbeSet probes = hypothesis_probes(inst, space, policy);
  CertVerdict feas = dual_feasible(inst, space, dual, probes);
  if (feas.outcome == CertOutcome::Refuted) {
    report.outcome = ConverseOutcome::PremiseViolated;
    report.notes.push_back("dual point is not feasible (failed " +
                           feas.failed_condition + ")");
    return report;
  }
  if (feas.outcome == CertOutcome::Inconclusive) {
    report.outcome = ConverseOutcome::Inconclusive;
    report.notes.push_back("dual feasibility is inconclusive");
    return report;
  }

  for (std::size_t i = 0; i < inst.f.size(); ++i) {
    FnCombo combo = FnCombo::of(inst.f[i]);
    combo.add(-dual.zeta[i], inst.g[i]);
    report.hypotheses.push_back(
        {"converse-objective-" + std::to_string(i + 1),
         check_class(space, inst.k0, combo, FnClass::GSLEP, probes)});
  }
  for (std::size_t j = 0; j < inst.h.size(); ++j) {
    report.hypotheses.push_back(
        {"converse-constraint-" + std::to_string(j + 1),
         check_class(space, inst.k0, FnCombo::of(inst.h[j]), FnClass::GSLEP, probes)});
  }
  for (const auto& row : report.hypotheses) {
    if (row.verdict.verdict != Verdict::Holds) {
      report.outcome = ConverseOutcome::Inconclusive;
      report.notes.push_back("hypothesis " + row.name + " is " +
                             verdict_name(row.verdict.verdict) +
                             "; the conclusion is not asserted");
      return report;
    }
  }

  OracleResult oracle = weak_efficient_oracle(inst, grid, OracleMode::Fractional);
  const OracleEntry* entry = nullptr;
  for (const auto& row : oracle.entries) {
    if (row.point == kbar) {
      entry = &row;
      break;
    }
  }
  if (entry == nullptr) {
    report.outcome = ConverseOutcome::Inconclusive;
    report.notes.push_back("point " + to_string(kbar) +
                           " is not a grid point; oracle cannot audit it");
    return report;
  }
  if (!entry->efficient) {
    report.outcome = ConverseOutcome::Violation;
    std::string dominator =
        entry->dominated_by.has_value() ? to_string(*entry->dominated_by) : "?";
    report.notes.push_back("grid point " + dominator + " strictly dominates " +
                           to_string(kbar) + " despite verified premises");
    return report;
  }
  report.outcome = ConverseOutcome::Consistent;
  report.notes.push_back("oracle confirms " + to_string(kbar) +
                         " is grid-weakly-efficient");
  return report;
}

}  // namespace geovex
