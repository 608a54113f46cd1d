#pragma once

#include <vector>

#include "geovex/errors.hpp"
#include "geovex/guard.hpp"
#include "geovex/region.hpp"

namespace geovex {

/// Real roots of a univariate polynomial given by dense coefficients
/// (constant term first), ascending, exact. Supports degree <= 2 with
/// rational roots; throws InexactAnalysis for higher degree or irrational
/// roots, and for the zero polynomial (which has no isolated roots).
std::vector<Scalar> poly_roots(const std::vector<Scalar>& coeffs);

/// Exact solution region of `p(v) op 0` for v in `within`, where `p` must be
/// univariate in `slot`. Throws InexactAnalysis when the sign pattern cannot
/// be determined in closed form.
Region solve_relation(const Poly& p, int slot, RelOp op, const Interval& within);

/// Exact region where a guard over a single variable holds.
Region guard_region(const Guard& guard, int slot, const Interval& within);

}  // namespace geovex
