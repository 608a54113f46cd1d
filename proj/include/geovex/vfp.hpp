#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geovex/probes.hpp"
#include "geovex/scalar_fn.hpp"
#include "geovex/verdict.hpp"

namespace geovex {

/// Multiobjective ratio program: minimize (f_i / g_i) over
/// {k in K0 : h_j(k) <= 0 for all j}, with every g_i positive on K0.
struct VfpInstance {
  std::string label;
  std::vector<ScalarFn> f;  // numerators (p entries)
  std::vector<ScalarFn> g;  // denominators (p entries, positive on K0)
  std::vector<ScalarFn> h;  // constraints (q entries)
  Region k0;

  int objectives() const { return static_cast<int>(f.size()); }
  int constraints() const { return static_cast<int>(h.size()); }
};

/// Built-in instances used throughout the test corpus. Returns nullopt for
/// unknown names.
std::optional<VfpInstance> builtin_instance(const std::string& name);
std::vector<std::string> builtin_instance_names();

struct Feasibility {
  bool feasible = false;
  bool in_region = false;
  std::vector<int> violated;  // 1-based constraint indices with h_j > 0
};

Feasibility feasible(const VfpInstance& inst, const Scalar& k);

/// Componentwise exact ratios f_i(k)/g_i(k).
/// Throws EvalError{NonpositiveDenominator} when some g_i(k) <= 0.
std::vector<Scalar> objective_ratio(const VfpInstance& inst, const Scalar& k);

/// Ratio vector at a reference point (the parametric transform's parameter).
std::vector<Scalar> lambda_star(const VfpInstance& inst, const Scalar& k);

/// 1-based indices j with h_j(k) = 0 exactly, ascending.
std::vector<int> active_set(const VfpInstance& inst, const Scalar& k);
/// Complement of active_set within 1..q.
std::vector<int> inactive_set(const VfpInstance& inst, const Scalar& k);

/// Grid-step multiples spanning K0 plus the region's endpoints, restricted
/// to K0. The oracle quantifies over exactly these points.
std::vector<Scalar> instance_grid(const VfpInstance& inst, const Scalar& step);

/// Positivity audit for the denominators over a grid (exact).
struct InstanceIssue {
  int index;  // 1-based denominator index
  Scalar at;
  Scalar value;
};
std::vector<InstanceIssue> validate_denominators(const VfpInstance& inst,
                                                 const std::vector<Scalar>& grid);

enum class OracleMode { Fractional, Parametric };

struct OracleEntry {
  Scalar point;
  bool efficient = false;
  std::optional<Scalar> dominated_by;  // smallest strictly-dominating grid point
};

/// Brute-force weak efficiency on the feasible grid points: a point is
/// grid-weakly-efficient iff no feasible grid point strictly improves every
/// component. Components are the exact ratios (Fractional) or f_i - lambda_i
/// * g_i (Parametric).
struct OracleResult {
  OracleMode mode = OracleMode::Fractional;
  std::vector<Scalar> lambda;          // Parametric mode parameter
  std::vector<OracleEntry> entries;    // ascending by point; feasible grid only
  std::vector<Scalar> efficient_points() const;
  bool contains(const Scalar& k) const;
};

OracleResult weak_efficient_oracle(const VfpInstance& inst,
                                   const std::vector<Scalar>& grid, OracleMode mode,
                                   const std::vector<Scalar>& lambda = {});

/// For every feasible grid point k*, the fractional oracle and the
/// parametric oracle at lambda_star(k*) must agree on whether k* is
/// grid-weakly-efficient; mismatches are findings.
ConsistencyReport crosscheck_oracle_equivalence(const VfpInstance& inst,
                                                const std::vector<Scalar>& grid);

}  // namespace geovex
