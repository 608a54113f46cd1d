#pragma once

#include <vector>

#include "geovex/region.hpp"
#include "geovex/scalar_fn.hpp"
#include "geovex/space.hpp"

namespace geovex {

/// Probe construction knobs. The defaults match the documented reporting
/// conventions (grid 1/16, boundary offsets 1/64, curve samples 2^-1..2^-20),
/// and every verdict echoes the policy it ran under.
struct ProbePolicy {
  Scalar grid_step = Scalar(1) / 16;
  Scalar offset = Scalar(1) / 64;
  int t_sample_count = 20;
};

/// Finite quantifier instances for one region. `points` are the in-region
/// probes used as pair endpoints; `boundary` records candidates that fell
/// outside the region (kept for reporting, never quantified over).
struct ProbeSet {
  std::vector<Scalar> points;
  std::vector<Scalar> boundary;
  ProbePolicy policy;
};

/// Collects probes for `region`: the grid of `grid_step` multiples spanning
/// the region hull, region endpoints, switch points of the space maps and of
/// any supplied functions, offset points around all of those, and one round
/// of E-images of the in-region candidates.
ProbeSet build_probes(const Region& region, const EGeodesicSpace& space,
                      const ProbePolicy& policy,
                      const std::vector<const ScalarFn*>& fns = {});

/// Descending curve-parameter samples 2^-1, ..., 2^-count.
std::vector<Scalar> t_samples(int count);

}  // namespace geovex
