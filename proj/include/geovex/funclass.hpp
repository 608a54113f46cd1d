#pragma once

#include <optional>

#include "geovex/curve.hpp"
#include "geovex/probes.hpp"
#include "geovex/setcheck.hpp"
#include "geovex/verdict.hpp"

namespace geovex {

/// Generalized-convexity classes for scalar functions along space curves.
/// All compare f along gamma against a chord of reference values; they
/// differ in the reference points (E-images or raw), the quantifier window
/// (all of [0,1] vs. some positive prefix), the required property of the
/// underlying set, and premises (for the quasi/pseudo variants).
enum class FnClass {
  GEP,        // chord of E-values, all t in [0,1], set must be GEI
  GSEP,       // chord of raw values, all t in [0,1], set must be GEI
  GLEP,       // chord of E-values, some prefix, set must be GLEI
  GSLEC,      // chord of raw values, some prefix, set prefix must be attained
  GSLEP,      // chord of raw values, some prefix, set must be GLEI
  PREINCAVE,  // reversed inequality of GSLEP
  GQSLEP,     // premise f(k1) <= f(k2): f along gamma <= f(k2) on a prefix
  GPSLEP      // premise f(k1) < f(k2): f along gamma <= f(k2) - t*w on a prefix
};

std::optional<FnClass> fn_class_from_name(const std::string& name);
std::string fn_class_name(FnClass cls);

/// Decides `cls` for `fn` over all ordered probe pairs. Fails verdicts carry
/// the lexicographically smallest witness; Holds verdicts carry per-pair
/// locality certificates (u: set scale, v: inequality scale, w: margin for
/// GPSLEP). Sampled mode applies only to pairs whose curve analysis has no
/// rational closed form; refutations remain exact.
CheckVerdict check_class(const EGeodesicSpace& space, const Region& region,
                         const FnCombo& fn, FnClass cls, const ProbeSet& probes);

/// Same engine as check_class, quantified over a single ordered pair.
/// Used by the worked-example reproductions and by hypothesis probes that
/// care about designated pairs.
CheckVerdict check_class_pair(const EGeodesicSpace& space, const Region& region,
                              const FnCombo& fn, FnClass cls, const Scalar& k1,
                              const Scalar& k2, int t_sample_count = 20);

/// {k in region : f(k) <= alpha} as an exact region. Throws InexactAnalysis
/// when a piece boundary is not rational.
Region level_set(const ScalarFn& f, const Region& region, const Scalar& alpha);

/// Executable forms of the structural theorems tying GSLEP to epigraphs,
/// level sets, the E-decrease characterization, and the strict-chord
/// characterization.
enum class TheoremCheck { EPIGRAPH, LEVELSET, GLEP_CHAR, ALPHA_BETA };

std::optional<TheoremCheck> theorem_check_from_name(const std::string& name);
std::string theorem_check_name(TheoremCheck check);

ConsistencyReport crosscheck_theorem(TheoremCheck check, const EGeodesicSpace& space,
                                     const Region& region, const ScalarFn& f,
                                     const ProbeSet& probes);

}  // namespace geovex
