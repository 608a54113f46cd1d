#include "geovex/setcheck.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/errors.hpp"

namespace geovex {
namespace {

std::vector<Scalar> sorted_points(const ProbeSet& probes) {
  std::vector<Scalar> pts = probes.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Curve membership at one parameter, by direct evaluation (no closed-form
/// solving involved, so it works even when the analysis had to sample).
bool member_at(const EGeodesicSpace& space, const Region& region, const Scalar& x,
               const Scalar& y, const Scalar& t) {
  return region.contains(eval_gamma(space, x, y, t));
}

LocalityResult sampled_locality(const EGeodesicSpace& space, const Region& region,
                                const Scalar& x, const Scalar& y, int count) {
  LocalityResult out;
  out.mode = AnalysisMode::Sampled;
  out.holds_at_zero = member_at(space, region, x, y, Scalar(0));
  if (!out.holds_at_zero) {
    out.first_exit = Scalar(0);
    return out;
  }
  std::vector<Scalar> ts = t_samples(count);  // descending
  std::sort(ts.begin(), ts.end());            // ascending, then append 1
  ts.push_back(Scalar(1));
  for (const Scalar& t : ts) {
    if (!member_at(space, region, x, y, t)) {
      out.first_exit = t;
      return out;
    }
    out.sup = t;
    out.attained = true;
  }
  return out;
}

struct PairIssue {
  Witness witness;
  bool sound = true;  // false: sampling could not certify the failure
};

}  // namespace

std::optional<SetProperty> set_property_from_name(const std::string& name) {
  if (name == "gei") return SetProperty::GEI;
  if (name == "glei") return SetProperty::GLEI;
  if (name == "starshaped") return SetProperty::STARSHAPED;
  if (name == "glei-product") return SetProperty::GLEI_PRODUCT;
  return std::nullopt;
}

std::string set_property_name(SetProperty property) {
  switch (property) {
    case SetProperty::GEI: return "gei";
    case SetProperty::GLEI: return "glei";
    case SetProperty::STARSHAPED: return "starshaped";
    case SetProperty::GLEI_PRODUCT: return "glei-product";
  }
  return "?";
}

LocalityResult locality_u(const EGeodesicSpace& space, const Region& region,
                          const Scalar& k1, const Scalar& k2, int t_sample_count) {
  const Scalar x = eval_E(space, k1);
  const Scalar y = eval_E(space, k2);
  try {
    PiecewiseCurve curve = restrict_curve(space, x, y);
    Region valid = membership_region(curve, region);
    PrefixAnalysis prefix = prefix_within(valid, Scalar(1));
    LocalityResult out;
    out.sup = prefix.sup;
    out.attained = prefix.attained;
    out.holds_at_zero = prefix.holds_at_zero;
    out.first_exit = prefix.first_violation;
    out.mode = AnalysisMode::Exact;
    return out;
  } catch (const InexactAnalysis&) {
    return sampled_locality(space, region, x, y, t_sample_count);
  }
}

CheckVerdict check_set_property(const EGeodesicSpace& space, const Region& region,
                                SetProperty property, const ProbeSet& probes) {
  if (property == SetProperty::GLEI_PRODUCT) {
    throw ConfigError("check_set_property",
                      "glei-product needs a function and cap; use check_product_glei");
  }
  CheckVerdict out;
  out.verdict = Verdict::Holds;
  const std::vector<Scalar> pts = sorted_points(probes);
  std::optional<Witness> unsound_failure;
  long pair_count = 0;
  for (const Scalar& k1 : pts) {
    for (const Scalar& k2 : pts) {
      ++pair_count;
      LocalityResult loc =
          locality_u(space, region, k1, k2, probes.policy.t_sample_count);
      if (loc.mode == AnalysisMode::Sampled) out.mode = AnalysisMode::Sampled;

      bool ok = false;
      switch (property) {
        case SetProperty::GEI:
          ok = loc.holds_at_zero && loc.sup == 1 && loc.attained;
          break;
        case SetProperty::GLEI:
          ok = loc.holds_at_zero && sign(loc.sup) > 0;
          break;
        case SetProperty::STARSHAPED:
          ok = loc.holds_at_zero && sign(loc.sup) > 0 && loc.attained;
          break;
        case SetProperty::GLEI_PRODUCT:
          break;
      }
      if (ok) {
        LocalityEntry entry;
        entry.k1 = k1;
        entry.k2 = k2;
        entry.u = loc.attained ? loc.sup : loc.sup / 2;
        if (property == SetProperty::GEI) entry.u = Scalar(1);
        entry.v = entry.u;
        out.locality.entries.push_back(entry);
        continue;
      }

      Witness w;
      w.k1 = k1;
      w.k2 = k2;
      w.condition = property == SetProperty::GEI        ? "membership"
                    : property == SetProperty::GLEI     ? "positive-scale"
                                                        : "max-scale-attained";
      if (!loc.holds_at_zero) {
        w.t = Scalar(0);
      } else if (loc.first_exit) {
        w.t = *loc.first_exit;
      }
      if (w.t) {
        try {
          w.point = eval_gamma(space, eval_E(space, k1), eval_E(space, k2), *w.t);
          w.lhs = w.point;
        } catch (const EvalError&) {
          // the curve is undefined there; the witness stands without a point
        }
      }

      // Sampling can certify a failure only when it pins a concrete excluded
      // parameter; "no positive prefix among the samples" does not refute the
      // existential scale, so park it as inconclusive instead.
      const bool exact_refutation =
          loc.mode == AnalysisMode::Exact || !loc.holds_at_zero ||
          (property == SetProperty::GEI && loc.first_exit.has_value());
      if (!exact_refutation) {
        if (!unsound_failure) unsound_failure = w;
        continue;
      }
      out.verdict = Verdict::Fails;
      out.witness = w;
      std::ostringstream detail;
      detail << set_property_name(property) << " fails at pair (" << to_string(k1)
             << ", " << to_string(k2) << ")";
      if (w.t) detail << " at t = " << to_string(*w.t);
      out.detail = detail.str();
      out.locality.entries.clear();
      return out;
    }
  }
  if (unsound_failure) {
    out.verdict = Verdict::Inconclusive;
    out.witness = unsound_failure;
    out.detail =
        "sampled analysis found no positive scale at pair (" +
        to_string(unsound_failure->k1) + ", " + to_string(unsound_failure->k2) +
        "); refutation of the existential scale needs exact analysis";
    out.locality.entries.clear();
    return out;
  }
  std::ostringstream detail;
  detail << set_property_name(property) << " holds over " << pair_count
         << " ordered pairs (" << pts.size() << " probes)";
  out.detail = detail.str();
  return out;
}

CheckVerdict check_product_glei(const EGeodesicSpace& space, const Region& region,
                                const ScalarFn& f, const Scalar& cap,
                                const ProbeSet& probes) {
  CheckVerdict out;
  out.verdict = Verdict::Holds;
  const std::vector<Scalar> pts = sorted_points(probes);

  // Product probes: each base point paired with its lowest admissible height,
  // the midway height, and the cap itself.
  struct ProductPoint {
    Scalar k;
    Scalar a;
  };
  std::vector<ProductPoint> product;
  for (const Scalar& k : pts) {
    Scalar fk = f.eval(k);
    if (fk > cap) continue;  // no admissible height over this base point
    product.push_back({k, fk});
    if (fk < cap) {
      Scalar mid = (fk + cap) / 2;
      product.push_back({k, mid});
      product.push_back({k, cap});
    }
  }

  std::optional<Witness> unsound_failure;
  long pair_count = 0;

  auto alpha_detail = [](const ProductPoint& p1, const ProductPoint& p2) {
    return "product points ((" + to_string(p1.k) + ", " + to_string(p1.a) +
           "), (" + to_string(p2.k) + ", " + to_string(p2.a) + "))";
  };

  for (const ProductPoint& p1 : product) {
    for (const ProductPoint& p2 : product) {
      ++pair_count;
      const Scalar x = eval_E(space, p1.k);
      const Scalar y = eval_E(space, p2.k);
      // Height along the paired curve: t*a1 + (1-t)*a2.
      const Poly alpha_poly = Poly::constant(p2.a) +
                              Poly::variable(0).scaled(p1.a - p2.a);

      auto classify_failure = [&](const Scalar& t) {
        Witness w;
        w.k1 = p1.k;
        w.k2 = p2.k;
        w.t = t;
        Scalar alpha_t = alpha_poly.eval1(t);
        try {
          Scalar pt = eval_gamma(space, x, y, t);
          w.point = pt;
          if (!region.contains(pt)) {
            w.condition = "component-membership";
            w.lhs = pt;
          } else {
            Scalar f_at = f.eval(pt);
            if (f_at > alpha_t) {
              w.condition = "epigraph-inequality";
              w.lhs = f_at;
              w.rhs = alpha_t;
            } else {
              w.condition = "height-cap";
              w.lhs = alpha_t;
              w.rhs = cap;
            }
          }
        } catch (const EvalError&) {
          w.condition = "component-membership";
        }
        return w;
      };

      bool holds_at_zero = false;
      Scalar sup(0);
      bool attained = false;
      std::optional<Scalar> first_exit;
      AnalysisMode mode = AnalysisMode::Exact;
      try {
        PiecewiseCurve curve = restrict_curve(space, x, y);
        PiecewiseCurve f_along = compose(f, curve);
        // alpha(t) - f(gamma(t)) >= 0
        PiecewiseCurve slack =
            combine({{Scalar(-1), &f_along}}, alpha_poly);
        Region valid = membership_region(curve, region);
        valid = valid.intersect(relation_region(slack, RelOp::Ge));
        // cap - alpha(t) >= 0
        PiecewiseCurve headroom{{CurveSegment{
            Interval{Scalar(0), Scalar(1), true, true},
            Poly::constant(cap) - alpha_poly}}};
        valid = valid.intersect(relation_region(headroom, RelOp::Ge));
        PrefixAnalysis prefix = prefix_within(valid, Scalar(1));
        holds_at_zero = prefix.holds_at_zero;
        sup = prefix.sup;
        attained = prefix.attained;
        first_exit = prefix.first_violation;
      } catch (const InexactAnalysis&) {
        mode = AnalysisMode::Sampled;
        out.mode = AnalysisMode::Sampled;
        auto member = [&](const Scalar& t) {
          try {
            Scalar pt = eval_gamma(space, x, y, t);
            if (!region.contains(pt)) return false;
            Scalar alpha_t = alpha_poly.eval1(t);
            return f.eval(pt) <= alpha_t && alpha_t <= cap;
          } catch (const EvalError&) {
            return false;
          }
        };
        holds_at_zero = member(Scalar(0));
        if (holds_at_zero) {
          std::vector<Scalar> ts = t_samples(probes.policy.t_sample_count);
          std::sort(ts.begin(), ts.end());
          ts.push_back(Scalar(1));
          for (const Scalar& t : ts) {
            if (!member(t)) {
              first_exit = t;
              break;
            }
            sup = t;
            attained = true;
          }
        } else {
          first_exit = Scalar(0);
        }
      }

      if (holds_at_zero && sign(sup) > 0) {
        LocalityEntry entry;
        entry.k1 = p1.k;
        entry.k2 = p2.k;
        entry.u = attained ? sup : sup / 2;
        entry.v = entry.u;
        out.locality.entries.push_back(entry);
        continue;
      }

      Witness w = classify_failure(holds_at_zero && first_exit ? *first_exit
                                                                : Scalar(0));
      const bool exact_refutation = mode == AnalysisMode::Exact || !holds_at_zero;
      if (!exact_refutation) {
        if (!unsound_failure) unsound_failure = w;
        continue;
      }
      out.verdict = Verdict::Fails;
      out.witness = w;
      out.detail = "glei-product fails for " + alpha_detail(p1, p2) +
                   " (condition: " + w.condition + ")";
      out.locality.entries.clear();
      return out;
    }
  }

  if (unsound_failure) {
    out.verdict = Verdict::Inconclusive;
    out.witness = unsound_failure;
    out.detail =
        "sampled analysis found no positive scale for a product pair; "
        "refutation of the existential scale needs exact analysis";
    out.locality.entries.clear();
    return out;
  }
  std::ostringstream detail;
  detail << "glei-product holds over " << pair_count << " ordered product pairs ("
         << product.size() << " product probes)";
  out.detail = detail.str();
  return out;
}

std::optional<Region> builtin_set(const std::string& name) {
  if (name == "example1-A") {
    Interval left{Scalar(-4), Scalar(-1), true, false};
    Interval right{Scalar(1), Scalar(4), true, true};
    return Region({left, right});
  }
  if (name == "example2-window") {
    return Region::interval(Interval::closed(Scalar(-1), Scalar(4)));
  }
  return std::nullopt;
}

std::vector<std::string> builtin_set_names() { return {"example1-A", "example2-window"}; }

}  // namespace geovex
