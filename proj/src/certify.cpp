#include "geovex/certify.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/errors.hpp"
#include "geovex/space.hpp"

namespace geovex {

std::optional<CertKind> cert_kind_from_name(const std::string& name) {
  if (name == "basic") return CertKind::Basic;
  if (name == "parametric") return CertKind::Parametric;
  if (name == "scalarized-chord") return CertKind::ScalarizedChord;
  if (name == "scalarized-margin") return CertKind::ScalarizedMargin;
  if (name == "corollary") return CertKind::Corollary;
  return std::nullopt;
}

std::string cert_kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::Basic: return "basic";
    case CertKind::Parametric: return "parametric";
    case CertKind::ScalarizedChord: return "scalarized-chord";
    case CertKind::ScalarizedMargin: return "scalarized-margin";
    case CertKind::Corollary: return "corollary";
  }
  return "basic";
}

std::string cert_outcome_name(CertOutcome outcome) {
  switch (outcome) {
    case CertOutcome::Certified: return "Certified";
    case CertOutcome::Refuted: return "Refuted";
    case CertOutcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

bool HypothesisReport::all_pass() const {
  for (const auto& row : rows) {
    if (row.verdict.verdict != Verdict::Holds) return false;
  }
  return true;
}

namespace {

bool uses_parametric_conditions(CertKind kind) {
  return kind == CertKind::Parametric || kind == CertKind::ScalarizedMargin ||
         kind == CertKind::Corollary;
}

void require_dimensions(const VfpInstance& inst, const Certificate& cert) {
  if (inst.g.size() != inst.f.size()) {
    throw ConfigError("certificate", "instance has " + std::to_string(inst.f.size()) +
                                         " numerators but " +
                                         std::to_string(inst.g.size()) +
                                         " denominators");
  }
  if (cert.zeta.size() != inst.f.size()) {
    throw ConfigError("certificate",
                      "carries " + std::to_string(cert.zeta.size()) +
                          " objective multipliers for " +
                          std::to_string(inst.f.size()) + " objectives");
  }
  if (cert.xi.size() != inst.h.size()) {
    throw ConfigError("certificate",
                      "carries " + std::to_string(cert.xi.size()) +
                          " constraint multipliers for " +
                          std::to_string(inst.h.size()) + " constraints");
  }
}

/// Exact finite directional derivative, or a note explaining why the row
/// cannot enter an exact sum.
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

Witness probe_witness(const Scalar& kbar, const Scalar& k, const Scalar& lhs,
                      const std::string& condition) {
  Witness w;
  w.k1 = kbar;
  w.k2 = k;
  w.point = k;
  w.lhs = lhs;
  w.rhs = Scalar(0);
  w.condition = condition;
  return w;
}

std::vector<Scalar> scan_points(const ProbeSet& probes, const Scalar& kbar) {
  std::vector<Scalar> out;
  for (const auto& k : probes.points) {
    if (k != kbar) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CertVerdict check_certificate(const VfpInstance& inst, const EGeodesicSpace& space,
                              const Certificate& cert, const ProbeSet& probes) {
  require_dimensions(inst, cert);

  Feasibility base_state = feasible(inst, cert.kbar);
  if (!base_state.feasible) {
    std::string why = base_state.in_region ? "violates constraint" : "lies outside the region";
    throw PremiseError("infeasible-base",
                       "base point " + to_string(cert.kbar) + " " + why);
  }

  CertVerdict out;
  const bool parametric = uses_parametric_conditions(cert.kind);

  auto refute = [&](const std::string& condition, Witness w) {
    out.outcome = CertOutcome::Refuted;
    out.failed_condition = condition;
    out.witness = std::move(w);
    out.log.push_back({condition, false, "failed at k=" + to_string(out.witness->k2)});
  };

  // fixed-point: the base must be held still by the point map, otherwise
  // none of the directional conditions talk about the right curves.
  Scalar image = eval_E(space, cert.kbar);
  if (image != cert.kbar) {
    Witness w;
    w.k1 = cert.kbar;
    w.k2 = cert.kbar;
    w.point = image;
    w.lhs = image;
    w.rhs = cert.kbar;
    w.condition = "fixed-point";
    refute("fixed-point", std::move(w));
    return out;
  }
  out.log.push_back({"fixed-point", true, "point map fixes " + to_string(cert.kbar)});

  // signs
  bool zeta_all_zero = true;
  for (std::size_t i = 0; i < cert.zeta.size(); ++i) {
    if (cert.zeta[i] != 0) zeta_all_zero = false;
    if (cert.zeta[i] < 0) {
      Witness w = probe_witness(cert.kbar, cert.kbar, cert.zeta[i], "signs");
      w.point.reset();
      refute("signs", std::move(w));
      out.log.back().detail =
          "objective multiplier " + std::to_string(i + 1) + " is negative";
      return out;
    }
  }
  for (std::size_t j = 0; j < cert.xi.size(); ++j) {
    if (cert.xi[j] < 0) {
      Witness w = probe_witness(cert.kbar, cert.kbar, cert.xi[j], "signs");
      w.point.reset();
      refute("signs", std::move(w));
      out.log.back().detail =
          "constraint multiplier " + std::to_string(j + 1) + " is negative";
      return out;
    }
  }
  if (zeta_all_zero && !cert.zeta.empty()) {
    out.warnings.push_back(
        "all objective multipliers are zero; the conditions no longer bind the objectives");
  }
  out.log.push_back({"signs", true, "multipliers nonnegative"});

  std::vector<Scalar> lambda;
  std::vector<int> active;
  if (parametric) {
    lambda = lambda_star(inst, cert.kbar);
    active = active_set(inst, cert.kbar);
  }

  const std::vector<Scalar> points = scan_points(probes, cert.kbar);

  // stationarity: the multiplier-weighted directional derivative out of the
  // base point must be nonnegative toward every probe.
  {
    bool failed = false;
    for (const auto& k : points) {
      Scalar sum = 0;
      bool row_ok = true;
      for (std::size_t i = 0; i < inst.f.size(); ++i) {
        if (cert.zeta[i] == 0) continue;
        FnCombo term = FnCombo::of(inst.f[i]);
        if (parametric) term.add(-lambda[i], inst.g[i]);
        std::string label = parametric
                                ? "stationarity: objective " + std::to_string(i + 1) +
                                      " (ratio-shifted)"
                                : "stationarity: objective " + std::to_string(i + 1);
        TermValue tv = directional_term(term, space, cert.kbar, k, label);
        if (!tv.usable) {
          out.inconclusive_rows.push_back(tv.note);
          row_ok = false;
          continue;
        }
        sum += cert.zeta[i] * tv.value;
      }
      if (parametric) {
        for (int j : active) {
          if (cert.xi[j - 1] == 0) continue;
          TermValue tv = directional_term(
              FnCombo::of(inst.h[j - 1]), space, cert.kbar, k,
              "stationarity: active constraint " + std::to_string(j));
          if (!tv.usable) {
            out.inconclusive_rows.push_back(tv.note);
            row_ok = false;
            continue;
          }
          sum += cert.xi[j - 1] * tv.value;
        }
      } else {
        for (std::size_t j = 0; j < inst.h.size(); ++j) {
          if (cert.xi[j] == 0) continue;
          TermValue tv = directional_term(
              FnCombo::of(inst.h[j]), space, cert.kbar, k,
              "stationarity: constraint " + std::to_string(j + 1));
          if (!tv.usable) {
            out.inconclusive_rows.push_back(tv.note);
            row_ok = false;
            continue;
          }
          sum += cert.xi[j] * tv.value;
        }
      }
      if (!row_ok) continue;
      if (sum < 0) {
        refute("stationarity", probe_witness(cert.kbar, k, sum, "stationarity"));
        failed = true;
        break;
      }
    }
    if (failed) return out;
    out.log.push_back(
        {"stationarity", true, "checked " + std::to_string(points.size()) + " probes"});
  }

  // denominator-descent (whole-constraint route only): every denominator
  // must be non-increasing out of the base point.
  if (!parametric) {
    bool failed = false;
    for (const auto& k : points) {
      for (std::size_t i = 0; i < inst.g.size(); ++i) {
        TermValue tv = directional_term(
            FnCombo::of(inst.g[i]), space, cert.kbar, k,
            "denominator-descent: denominator " + std::to_string(i + 1));
        if (!tv.usable) {
          out.inconclusive_rows.push_back(tv.note);
          continue;
        }
        if (tv.value > 0) {
          refute("denominator-descent",
                 probe_witness(cert.kbar, k, tv.value, "denominator-descent"));
          failed = true;
          break;
        }
      }
      if (failed) break;
    }
    if (failed) return out;
    out.log.push_back({"denominator-descent", true,
                       "checked " + std::to_string(points.size()) + " probes"});
  }

  // complementary-slackness: multiplier-weighted constraint values vanish
  // at the base point.
  {
    Scalar sum = 0;
    for (std::size_t j = 0; j < inst.h.size(); ++j) {
      sum += cert.xi[j] * inst.h[j].eval(cert.kbar);
    }
    if (sum != 0) {
      refute("complementary-slackness",
             probe_witness(cert.kbar, cert.kbar, sum, "complementary-slackness"));
      return out;
    }
    out.log.push_back({"complementary-slackness", true,
                       "weighted constraint value vanishes at the base"});
  }

  out.outcome = out.inconclusive_rows.empty() ? CertOutcome::Certified
                                              : CertOutcome::Inconclusive;
  return out;
}

HypothesisReport verify_hypotheses(const VfpInstance& inst,
                                   const EGeodesicSpace& space,
                                   const Certificate& cert, const ProbeSet& probes) {
  require_dimensions(inst, cert);
  HypothesisReport report;
  auto run = [&](std::string name, const FnCombo& fn, FnClass cls) {
    report.rows.push_back({std::move(name), check_class(space, inst.k0, fn, cls, probes)});
  };

  switch (cert.kind) {
    case CertKind::Basic: {
      for (std::size_t i = 0; i < inst.f.size(); ++i) {
        run("objective-" + std::to_string(i + 1) + "-chord", FnCombo::of(inst.f[i]),
            FnClass::GSLEP);
      }
      for (std::size_t j = 0; j < inst.h.size(); ++j) {
        run("constraint-" + std::to_string(j + 1) + "-chord", FnCombo::of(inst.h[j]),
            FnClass::GSLEP);
      }
      for (std::size_t i = 0; i < inst.g.size(); ++i) {
        run("denominator-" + std::to_string(i + 1) + "-concave",
            FnCombo::of(inst.g[i]), FnClass::PREINCAVE);
      }
      break;
    }
    case CertKind::Parametric: {
      std::vector<Scalar> lambda = lambda_star(inst, cert.kbar);
      for (std::size_t i = 0; i < inst.f.size(); ++i) {
        FnCombo combo = FnCombo::of(inst.f[i]);
        combo.add(-lambda[i], inst.g[i]);
        run("parametric-objective-" + std::to_string(i + 1), combo, FnClass::GPSLEP);
      }
      for (int j : active_set(inst, cert.kbar)) {
        run("active-constraint-" + std::to_string(j), FnCombo::of(inst.h[j - 1]),
            FnClass::GQSLEP);
      }
      break;
    }
    case CertKind::ScalarizedChord: {
      FnCombo combo = FnCombo::affine_shift(Scalar(0));
      for (std::size_t i = 0; i < inst.f.size(); ++i) combo.add(cert.zeta[i], inst.f[i]);
      for (std::size_t j = 0; j < inst.h.size(); ++j) combo.add(cert.xi[j], inst.h[j]);
      run("scalarized-chord", combo, FnClass::GSLEP);
      break;
    }
    case CertKind::ScalarizedMargin: {
      std::vector<Scalar> lambda = lambda_star(inst, cert.kbar);
      FnCombo combo = FnCombo::affine_shift(Scalar(0));
      for (std::size_t i = 0; i < inst.f.size(); ++i) {
        combo.add(cert.zeta[i], inst.f[i]);
        combo.add(Scalar(-cert.zeta[i] * lambda[i]), inst.g[i]);
      }
      for (int j : active_set(inst, cert.kbar)) {
        combo.add(cert.xi[j - 1], inst.h[j - 1]);
      }
      run("scalarized-margin", combo, FnClass::GPSLEP);
      break;
    }
    case CertKind::Corollary: {
      for (std::size_t i = 0; i < inst.f.size(); ++i) {
        run("objective-" + std::to_string(i + 1) + "-chord", FnCombo::of(inst.f[i]),
            FnClass::GSLEP);
      }
      for (int j : active_set(inst, cert.kbar)) {
        run("active-constraint-" + std::to_string(j) + "-chord",
            FnCombo::of(inst.h[j - 1]), FnClass::GSLEP);
      }
      for (std::size_t i = 0; i < inst.g.size(); ++i) {
        run("denominator-" + std::to_string(i + 1) + "-concave",
            FnCombo::of(inst.g[i]), FnClass::PREINCAVE);
      }
      break;
    }
  }
  return report;
}

ConsistencyReport soundness_probe(const VfpInstance& inst, const EGeodesicSpace& space,
                                  const Certificate& cert,
                                  const std::vector<Scalar>& grid) {
  ConsistencyReport report;
  report.name = "certificate-soundness";

  CertVerdict verdict;
  try {
    verdict = check_certificate(inst, space, cert, ProbeSet{grid, {}, ProbePolicy{}});
  } catch (const PremiseError& err) {
    report.inconclusive.push_back(std::string("base rejected: ") + err.what());
    return report;
  }
  if (verdict.outcome != CertOutcome::Certified) {
    report.inconclusive.push_back("certificate not verified (" +
                                  cert_outcome_name(verdict.outcome) +
                                  "); soundness says nothing");
    return report;
  }

  HypothesisReport hypotheses = verify_hypotheses(inst, space, cert,
                                                  ProbeSet{grid, {}, ProbePolicy{}});
  for (const auto& row : hypotheses.rows) {
    if (row.verdict.verdict != Verdict::Holds) {
      report.inconclusive.push_back("hypothesis " + row.name + " is " +
                                    verdict_name(row.verdict.verdict) +
                                    "; soundness says nothing");
      return report;
    }
  }

  OracleResult oracle = weak_efficient_oracle(inst, grid, OracleMode::Fractional);
  const OracleEntry* base_entry = nullptr;
  for (const auto& entry : oracle.entries) {
    if (entry.point == cert.kbar) {
      base_entry = &entry;
      break;
    }
  }
  if (base_entry == nullptr) {
    report.inconclusive.push_back("base point " + to_string(cert.kbar) +
                                  " is not a grid point; oracle cannot audit it");
    return report;
  }
  if (!base_entry->efficient) {
    std::string dominator = base_entry->dominated_by.has_value()
                                ? to_string(*base_entry->dominated_by)
                                : std::string("?");
    report.findings.push_back(
        {"soundness", "certified base " + to_string(cert.kbar) +
                          " is strictly dominated on the grid by " + dominator});
  }
  return report;
}

}  // namespace geovex
