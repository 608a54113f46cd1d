#pragma once

#include "geovex/report.hpp"

namespace geovex {

struct ReproduceResult {
  Report report;
  int exit_code = 0;
};

/// Walkthrough of the first bundled example: the designated pair (3, 0) on
/// the set [-4,-1) U [1,4] escapes the set at t=1 (the curve between the
/// mapped endpoints reaches -1), refuting the full-interval membership
/// property, while the documented computation also trips two definitional
/// discrepancies that are reported as fidelity flags (the endpoint 0 and
/// the mapped base E(3) = -1 both lie outside the set).
ReproduceResult reproduce_example1();

/// Walkthrough of the second bundled example: the step function on the
/// window [-1,4]. Designated pairs: (2,3) refutes the attained-prefix chord
/// class, (1,4) refutes the full-interval chord class, and (3,2) refutes
/// the prefix chord class that the bundle's notes claim — the latter is a
/// fidelity flag, not just a verdict.
ReproduceResult reproduce_example2();

}  // namespace geovex
