#pragma once

#include <optional>
#include <vector>

#include "geovex/scalar_fn.hpp"
#include "geovex/solve.hpp"
#include "geovex/space.hpp"

namespace geovex {

/// One polynomial stretch of a piecewise path or composite. `value` is
/// univariate in slot 0 (the curve parameter t).
struct CurveSegment {
  Interval range;
  Poly value;
};

/// Piecewise-polynomial function of the curve parameter over [0, 1].
/// Segments are sorted and pairwise disjoint. Gaps are legal (a composite
/// with a partial outer function) and read as "undefined there".
struct PiecewiseCurve {
  std::vector<CurveSegment> segments;

  Region covered() const;
  const CurveSegment* segment_containing(const Scalar& t) const;
  std::optional<Scalar> eval(const Scalar& t) const;
  /// The segment that covers an interval (0, eps); null when t=0+ is not
  /// covered by any segment.
  const CurveSegment* segment_after_zero() const;
};

/// The space curve gamma(x, y, .) restricted to fixed endpoints, resolved
/// into explicit t-segments honoring first-match piece order. Throws
/// InexactAnalysis when a guard does not reduce to rational breakpoints.
PiecewiseCurve restrict_curve(const EGeodesicSpace& space, const Scalar& x,
                              const Scalar& y);

/// Composite f(c(t)) with first-match piece resolution of f along the curve.
PiecewiseCurve compose(const ScalarFn& f, const PiecewiseCurve& c);
PiecewiseCurve compose(const FnCombo& combo, const PiecewiseCurve& c);

/// Pointwise affine combination: poly_in_t + sum coeff_i * curve_i, defined
/// where every operand is.
PiecewiseCurve combine(const std::vector<std::pair<Scalar, const PiecewiseCurve*>>& terms,
                       const Poly& poly_in_t);

/// Exact set {t in covered : d(t) op 0}.
Region relation_region(const PiecewiseCurve& d, RelOp op);
/// Exact set {t in covered : c(t) in target}.
Region membership_region(const PiecewiseCurve& c, const Region& target);

/// How far from t = 0 a valid set extends.
struct PrefixAnalysis {
  bool holds_at_zero = false;
  Scalar sup = Scalar(0);  // sup { v : [0, v] subset of valid }
  bool attained = false;   // the sup itself still satisfies ([0,sup] valid)
  std::optional<Scalar> first_violation;  // exact point of [0,hi] \ valid
};

/// Analyzes `valid` against the window [0, hi]. The violation point prefers
/// small multiples of 1/16 for readability but is always an exact member of
/// the complement.
PrefixAnalysis prefix_within(const Region& valid, const Scalar& hi);

}  // namespace geovex
