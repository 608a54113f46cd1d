#include "geovex/vfp.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/errors.hpp"

namespace geovex {

std::optional<VfpInstance> builtin_instance(const std::string& name) {
  if (name == "I1") {
    VfpInstance inst;
    inst.label = "I1";
    inst.f.push_back(ScalarFn::affine(Scalar(0), Scalar(1), "k"));
    inst.g.push_back(ScalarFn::affine(Scalar(2), Scalar(-1), "2-k"));
    inst.h.push_back(ScalarFn::affine(Scalar(-1), Scalar(1), "k-1"));
    inst.k0 = Region::interval(Interval::closed(Scalar(0), Scalar(1)));
    return inst;
  }
  if (name == "I2") {
    VfpInstance inst;
    inst.label = "I2";
    inst.f.push_back(ScalarFn::affine(Scalar(0), Scalar(1), "k"));
    inst.f.push_back(ScalarFn::affine(Scalar(1), Scalar(-1), "1-k"));
    inst.g.push_back(ScalarFn::affine(Scalar(1), Scalar(0), "1"));
    inst.g.push_back(ScalarFn::affine(Scalar(1), Scalar(0), "1"));
    inst.h.push_back(ScalarFn::affine(Scalar(-1), Scalar(1), "k-1"));
    inst.k0 = Region::interval(Interval::closed(Scalar(0), Scalar(1)));
    return inst;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_instance_names() { return {"I1", "I2"}; }

Feasibility feasible(const VfpInstance& inst, const Scalar& k) {
  Feasibility out;
  out.in_region = inst.k0.contains(k);
  for (int j = 0; j < inst.constraints(); ++j) {
    if (sign(inst.h[static_cast<size_t>(j)].eval(k)) > 0) out.violated.push_back(j + 1);
  }
  out.feasible = out.in_region && out.violated.empty();
  return out;
}

std::vector<Scalar> objective_ratio(const VfpInstance& inst, const Scalar& k) {
  std::vector<Scalar> out;
  out.reserve(inst.f.size());
  for (size_t i = 0; i < inst.f.size(); ++i) {
    Scalar den = inst.g[i].eval(k);
    if (sign(den) <= 0) {
      throw EvalError(EvalError::Kind::NonpositiveDenominator,
                      "denominator " + std::to_string(i + 1) + " is " +
                          to_string(den) + " at k = " + to_string(k));
    }
    out.push_back(inst.f[i].eval(k) / den);
  }
  return out;
}

std::vector<Scalar> lambda_star(const VfpInstance& inst, const Scalar& k) {
  return objective_ratio(inst, k);
}

std::vector<int> active_set(const VfpInstance& inst, const Scalar& k) {
  std::vector<int> out;
  for (int j = 0; j < inst.constraints(); ++j) {
    if (sign(inst.h[static_cast<size_t>(j)].eval(k)) == 0) out.push_back(j + 1);
  }
  return out;
}

std::vector<int> inactive_set(const VfpInstance& inst, const Scalar& k) {
  std::vector<int> active = active_set(inst, k);
  std::vector<int> out;
  for (int j = 1; j <= inst.constraints(); ++j) {
    if (!std::binary_search(active.begin(), active.end(), j)) out.push_back(j);
  }
  return out;
}

std::vector<Scalar> instance_grid(const VfpInstance& inst, const Scalar& step) {
  std::vector<Scalar> out;
  if (inst.k0.empty() || sign(step) <= 0) return out;
  const Scalar lo = inst.k0.lower_bound();
  const Scalar hi = inst.k0.upper_bound();
  // First multiple of `step` at or above lo: floor division on exact rationals.
  mpz_class quot;
  mpq_class ratio = lo / step;
  mpz_fdiv_q(quot.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  for (Scalar g = Scalar(quot) * step; g <= hi; g += step) {
    if (inst.k0.contains(g)) out.push_back(g);
  }
  for (const Scalar& e : inst.k0.endpoints()) {
    if (inst.k0.contains(e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<InstanceIssue> validate_denominators(const VfpInstance& inst,
                                                 const std::vector<Scalar>& grid) {
  std::vector<InstanceIssue> out;
  for (const Scalar& k : grid) {
    if (!inst.k0.contains(k)) continue;
    for (size_t i = 0; i < inst.g.size(); ++i) {
      Scalar v = inst.g[i].eval(k);
      if (sign(v) <= 0) out.push_back({static_cast<int>(i) + 1, k, v});
    }
  }
  return out;
}

std::vector<Scalar> OracleResult::efficient_points() const {
  std::vector<Scalar> out;
  for (const OracleEntry& e : entries) {
    if (e.efficient) out.push_back(e.point);
  }
  return out;
}

bool OracleResult::contains(const Scalar& k) const {
  for (const OracleEntry& e : entries) {
    if (e.efficient && e.point == k) return true;
  }
  return false;
}

namespace {

std::vector<Scalar> component_values(const VfpInstance& inst, const Scalar& k,
                                     OracleMode mode,
                                     const std::vector<Scalar>& lambda) {
  if (mode == OracleMode::Fractional) return objective_ratio(inst, k);
  std::vector<Scalar> out;
  out.reserve(inst.f.size());
  for (size_t i = 0; i < inst.f.size(); ++i) {
    out.push_back(inst.f[i].eval(k) - lambda[i] * inst.g[i].eval(k));
  }
  return out;
}

bool strictly_dominates(const std::vector<Scalar>& challenger,
                        const std::vector<Scalar>& incumbent) {
  for (size_t i = 0; i < challenger.size(); ++i) {
    if (!(challenger[i] < incumbent[i])) return false;
  }
  return true;
}

}  // namespace

OracleResult weak_efficient_oracle(const VfpInstance& inst,
                                   const std::vector<Scalar>& grid, OracleMode mode,
                                   const std::vector<Scalar>& lambda) {
  if (mode == OracleMode::Parametric &&
      lambda.size() != static_cast<size_t>(inst.objectives())) {
    throw ConfigError("weak_efficient_oracle",
                      "parametric mode needs one parameter per objective");
  }
  std::vector<Scalar> pts;
  for (const Scalar& k : grid) {
    if (feasible(inst, k).feasible) pts.push_back(k);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<std::vector<Scalar>> values;
  values.reserve(pts.size());
  for (const Scalar& k : pts) values.push_back(component_values(inst, k, mode, lambda));

  OracleResult out;
  out.mode = mode;
  out.lambda = lambda;
  for (size_t a = 0; a < pts.size(); ++a) {
    OracleEntry entry;
    entry.point = pts[a];
    entry.efficient = true;
    for (size_t b = 0; b < pts.size(); ++b) {
      if (strictly_dominates(values[b], values[a])) {
        entry.efficient = false;
        entry.dominated_by = pts[b];
        break;  // pts is ascending, so the first hit is the smallest
      }
    }
    out.entries.push_back(entry);
  }
  return out;
}

ConsistencyReport crosscheck_oracle_equivalence(const VfpInstance& inst,
                                                const std::vector<Scalar>& grid) {
  ConsistencyReport report;
  report.name = "ratio-vs-parametric-oracle";
  OracleResult fractional = weak_efficient_oracle(inst, grid, OracleMode::Fractional);
  for (const OracleEntry& entry : fractional.entries) {
    std::vector<Scalar> lambda = lambda_star(inst, entry.point);
    OracleResult parametric =
        weak_efficient_oracle(inst, grid, OracleMode::Parametric, lambda);
    bool param_efficient = false;
    for (const OracleEntry& pe : parametric.entries) {
      if (pe.point == entry.point) {
        param_efficient = pe.efficient;
        break;
      }
    }
    if (param_efficient != entry.efficient) {
      std::ostringstream detail;
      detail << "k* = " << to_string(entry.point) << ": ratio oracle says "
             << (entry.efficient ? "efficient" : "dominated")
             << " but the transformed oracle says "
             << (param_efficient ? "efficient" : "dominated");
      report.findings.push_back({"oracle-mismatch", detail.str()});
    }
  }
  return report;
}

}  // namespace geovex
