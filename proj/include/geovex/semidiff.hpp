#pragma once

#include <optional>

#include "geovex/curve.hpp"
#include "geovex/probes.hpp"
#include "geovex/verdict.hpp"

namespace geovex {

/// One-sided derivative along the space curve anchored at a base point the
/// point map fixes. Divergent quotients are first-class results (the
/// downstream checks treat them as inconclusive), not errors.
enum class SdKind { Finite, PlusInfinity, MinusInfinity, Divergent };

std::string sd_kind_name(SdKind kind);

/// Which way the derivative curve runs. `BaseToImage` (the default) starts
/// the curve at the base point and aims it at the image of the target, so
/// the difference quotient is anchored where the function value is
/// subtracted. `ImageToBase` starts at the image of the target and aims at
/// the base; the quotient then typically diverges unless the two values
/// agree, and is provided to reproduce derivations written that way.
enum class SdOrientation { BaseToImage, ImageToBase };

struct SemiDerivative {
  SdKind kind = SdKind::Divergent;
  std::optional<Scalar> value;    // exact finite value
  std::optional<double> approx;   // numeric finite value
  bool exact = true;              // false: numeric difference-quotient schedule
  double error_estimate = 0.0;    // numeric mode: |last - previous| quotient gap
  int samples_used = 0;           // numeric mode: quotients evaluated

  bool finite() const { return kind == SdKind::Finite; }
  double as_double() const;  // finite only
};

/// Right derivative of fn along the curve from `base` toward the image of
/// `target`, at parameter 0. Requires the point map to fix `base`; throws
/// PremiseError("base-not-fixed") otherwise. Exact when the composite has a
/// closed form near 0+, numeric (difference-quotient schedule) otherwise.
SemiDerivative semiderivative(const FnCombo& fn, const EGeodesicSpace& space,
                              const Scalar& base, const Scalar& target,
                              SdOrientation orientation = SdOrientation::BaseToImage);
SemiDerivative semiderivative(const ScalarFn& fn, const EGeodesicSpace& space,
                              const Scalar& base, const Scalar& target,
                              SdOrientation orientation = SdOrientation::BaseToImage);

/// Forced numeric evaluation: quotients at t_k = 2^-4 * 2^-k, k = 0..48,
/// declared convergent when successive quotients differ by less than 1e-9.
/// Used to cross-check the exact mode.
SemiDerivative semiderivative_numeric(const FnCombo& fn, const EGeodesicSpace& space,
                                      const Scalar& base, const Scalar& target,
                                      SdOrientation orientation = SdOrientation::BaseToImage);

/// Inequality links between a class verdict and the derivative at a fixed
/// base: PREINVEX asserts fn(k) - fn(base) >= derivative for every probe,
/// PREINCAVE the reverse, QUASI that fn(k) <= fn(base) forces a nonpositive
/// derivative, PSEUDO that fn(k) < fn(base) forces a negative one.
/// Violations are evidence against the corresponding class hypothesis.
enum class DerivativeLink { PREINVEX, PREINCAVE, QUASI, PSEUDO };

std::optional<DerivativeLink> derivative_link_from_name(const std::string& name);
std::string derivative_link_name(DerivativeLink link);

ConsistencyReport check_derivative_links(const FnCombo& fn,
                                         const EGeodesicSpace& space,
                                         const Scalar& base, const ProbeSet& probes,
                                         DerivativeLink link);

}  // namespace geovex
