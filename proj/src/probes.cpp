#include "geovex/probes.hpp"

#include <algorithm>

namespace geovex {

ProbeSet build_probes(const Region& region, const EGeodesicSpace& space,
                      const ProbePolicy& policy,
                      const std::vector<const ScalarFn*>& fns) {
  ProbeSet result;
  result.policy = policy;
  if (region.empty()) return result;

  std::vector<Scalar> candidates;
  const Scalar lo = region.lower_bound();
  const Scalar hi = region.upper_bound();

  // Grid multiples of the step across the region hull.
  if (sign(policy.grid_step) > 0) {
    Scalar k = lo / policy.grid_step;
    mpz_class floor_k;
    mpz_fdiv_q(floor_k.get_mpz_t(), k.get_num().get_mpz_t(), k.get_den().get_mpz_t());
    for (Scalar g = Scalar(floor_k) * policy.grid_step; g <= hi; g += policy.grid_step) {
      candidates.push_back(g);
    }
  }

  std::vector<Scalar> anchors = region.endpoints();
  for (const Scalar& b : space.point_map.breakpoints_in(0)) anchors.push_back(b);
  for (const ScalarFn* fn : fns) {
    if (!fn) continue;
    for (const Scalar& b : fn->breakpoints()) anchors.push_back(b);
  }
  for (const Scalar& a : anchors) {
    candidates.push_back(a);
    candidates.push_back(a - policy.offset);
    candidates.push_back(a + policy.offset);
  }

  // One round of E-images of the in-region candidates.
  std::vector<Scalar> images;
  for (const Scalar& c : candidates) {
    if (!region.contains(c)) continue;
    try {
      images.push_back(eval_E(space, c));
    } catch (const EvalError&) {
      // A partial point map simply contributes no image probe.
    }
  }
  candidates.insert(candidates.end(), images.begin(), images.end());

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Scalar& c : candidates) {
    (region.contains(c) ? result.points : result.boundary).push_back(c);
  }
  return result;
}

std::vector<Scalar> t_samples(int count) {
  std::vector<Scalar> samples;
  Scalar t(1);
  for (int i = 0; i < count; ++i) {
    t /= 2;
    samples.push_back(t);
  }
  return samples;
}

}  // namespace geovex
