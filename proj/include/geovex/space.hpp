#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geovex/piecewise.hpp"
#include "geovex/region.hpp"

namespace geovex {

/// One-dimensional carrier equipped with a point map E, a direction map
/// eta(x, y), and a family of curves gamma(x, y, t) parameterized over
/// t in [0, 1]. Conventions: gamma starts at the base y (gamma(x,y,0) = y)
/// and its t-derivative equals eta(x, y); the far endpoint is free.
/// Argument slots: 0 = x (target), 1 = y (base), 2 = t.
struct EGeodesicSpace {
  std::string label;
  PiecewiseMap point_map;  // E, arity 1
  PiecewiseMap direction;  // eta, arity 2
  PiecewiseMap curve;      // gamma, arity 3
};

Scalar eval_E(const EGeodesicSpace& space, const Scalar& kappa);
Scalar eval_eta(const EGeodesicSpace& space, const Scalar& x, const Scalar& y);
/// Exact curve point. Throws EvalError{ParameterOutOfRange} unless
/// 0 <= t <= 1, and EvalError{NoPieceMatches} where the map is undefined.
Scalar eval_gamma(const EGeodesicSpace& space, const Scalar& x, const Scalar& y,
                  const Scalar& t);

/// Built-in spaces: "euclid" (identity E, straight chords),
/// "paper-example-1" and "paper-example-2" (piecewise E/eta/gamma with
/// order-sensitive overlapping guards). Returns nullopt for unknown names.
std::optional<EGeodesicSpace> builtin_space(const std::string& name);

/// Names accepted by builtin_space, for diagnostics.
std::vector<std::string> builtin_space_names();

struct ValidationIssue {
  std::string check;  // "starts-at-base" | "direction" | "total"
  Scalar x;
  Scalar y;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

/// Verifies the space conventions on every ordered pair of probe points:
/// gamma(x,y,0) == y, the initial t-derivative of the matched curve piece
/// equals eta(x,y), and all three maps are defined. x,y range over E-images
/// of the probes as well as the probes themselves.
ValidationReport validate_space(const EGeodesicSpace& space,
                                const std::vector<Scalar>& probes);

}  // namespace geovex
