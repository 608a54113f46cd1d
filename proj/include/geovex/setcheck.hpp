#pragma once

#include <optional>

#include "geovex/curve.hpp"
#include "geovex/probes.hpp"
#include "geovex/verdict.hpp"

namespace geovex {

/// Set-level invexity notions. GEI demands full-interval membership of every
/// pair curve; GLEI a positive per-pair scale u; STARSHAPED additionally a
/// maximal (attained) such scale; GLEI_PRODUCT is the GLEI condition for
/// epigraph-style product points (see check_product_glei).
enum class SetProperty { GEI, GLEI, STARSHAPED, GLEI_PRODUCT };

std::optional<SetProperty> set_property_from_name(const std::string& name);
std::string set_property_name(SetProperty property);

/// Per-pair locality scale of the region: how long the curve between the
/// E-images of (k1, k2) stays inside `region`.
struct LocalityResult {
  Scalar sup = Scalar(0);
  bool attained = false;
  bool holds_at_zero = false;
  std::optional<Scalar> first_exit;  // earliest excluded t, when any
  AnalysisMode mode = AnalysisMode::Exact;
};

LocalityResult locality_u(const EGeodesicSpace& space, const Region& region,
                          const Scalar& k1, const Scalar& k2, int t_sample_count = 20);

/// Pair-quantified set check over the probe points (boundary probes are
/// never used as pair endpoints). Ordered pairs; the reported witness is the
/// lexicographically smallest violating tuple. GLEI_PRODUCT is rejected here
/// (it needs a function and cap; see check_product_glei).
CheckVerdict check_set_property(const EGeodesicSpace& space, const Region& region,
                                SetProperty property, const ProbeSet& probes);

/// The product-set GLEI condition on epigraph points ((k, a)): the paired
/// curve (gamma(t), t*a1 + (1-t)*a2) must stay in {(k, a): k in region,
/// f(k) <= a <= cap} for t in [0, u], u > 0 per pair. Alpha probes per point:
/// f(k), midway to cap, and cap itself.
CheckVerdict check_product_glei(const EGeodesicSpace& space, const Region& region,
                                const ScalarFn& f, const Scalar& cap,
                                const ProbeSet& probes);

/// Named regions bundled with the built-in spaces: "example1-A"
/// ([-4,-1) U [1,4], the companion set of "paper-example-1"), and
/// "example2-window" ([-1,4], a bounded stand-in for the whole line that
/// covers every documented evaluation of "paper-example-2"). Returns
/// nullopt for unknown names.
std::optional<Region> builtin_set(const std::string& name);
std::vector<std::string> builtin_set_names();

}  // namespace geovex
