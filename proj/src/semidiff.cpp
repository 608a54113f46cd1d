#include "geovex/semidiff.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "geovex/errors.hpp"

namespace geovex {
namespace {

void require_fixed_base(const EGeodesicSpace& space, const Scalar& base) {
  Scalar image = eval_E(space, base);
  if (image != base) {
    throw PremiseError("base-not-fixed",
                       "derivative base " + to_string(base) +
                           " is not fixed by the point map (image " +
                           to_string(image) + ")");
  }
}

/// Curve endpoints for the requested orientation: {x (aim), y (start)}.
std::pair<Scalar, Scalar> curve_endpoints(const EGeodesicSpace& space,
                                          const Scalar& base, const Scalar& target,
                                          SdOrientation orientation) {
  Scalar image = eval_E(space, target);
  if (orientation == SdOrientation::BaseToImage) return {image, base};
  return {base, image};
}

SemiDerivative finite_exact(const Scalar& value) {
  SemiDerivative out;
  out.kind = SdKind::Finite;
  out.value = value;
  out.exact = true;
  return out;
}

SemiDerivative infinite(bool positive) {
  SemiDerivative out;
  out.kind = positive ? SdKind::PlusInfinity : SdKind::MinusInfinity;
  return out;
}

}  // namespace

std::string sd_kind_name(SdKind kind) {
  switch (kind) {
    case SdKind::Finite: return "finite";
    case SdKind::PlusInfinity: return "+inf";
    case SdKind::MinusInfinity: return "-inf";
    case SdKind::Divergent: return "divergent";
  }
  return "?";
}

double SemiDerivative::as_double() const {
  if (value) return to_double(*value);
  if (approx) return *approx;
  return std::numeric_limits<double>::quiet_NaN();
}

SemiDerivative semiderivative_numeric(const FnCombo& fn, const EGeodesicSpace& space,
                                      const Scalar& base, const Scalar& target,
                                      SdOrientation orientation) {
  require_fixed_base(space, base);
  auto [x, y] = curve_endpoints(space, base, target, orientation);
  const double anchor = fn.eval_numeric(to_double(base));
  const double tol = 1e-9;
  const double blowup = 1e12;

  SemiDerivative out;
  out.exact = false;
  Scalar t = Scalar(1) / 16;
  std::optional<double> previous;
  for (int k = 0; k <= 48; ++k, t /= 2) {
    double quotient;
    try {
      Scalar point = eval_gamma(space, x, y, t);
      quotient = (fn.eval_numeric(to_double(point)) - anchor) / to_double(t);
    } catch (const EvalError&) {
      out.kind = SdKind::Divergent;
      out.samples_used = k;
      return out;
    }
    out.samples_used = k + 1;
    if (previous) {
      double gap = std::fabs(quotient - *previous);
      out.error_estimate = gap;
      if (gap < tol) {
        out.kind = SdKind::Finite;
        out.approx = quotient;
        return out;
      }
      if (std::fabs(quotient) > blowup && std::fabs(quotient) > std::fabs(*previous)) {
        out.kind = quotient > 0 ? SdKind::PlusInfinity : SdKind::MinusInfinity;
        return out;
      }
    }
    previous = quotient;
  }
  out.kind = SdKind::Divergent;
  return out;
}

SemiDerivative semiderivative(const FnCombo& fn, const EGeodesicSpace& space,
                              const Scalar& base, const Scalar& target,
                              SdOrientation orientation) {
  require_fixed_base(space, base);
  auto [x, y] = curve_endpoints(space, base, target, orientation);
  try {
    PiecewiseCurve curve = restrict_curve(space, x, y);
    PiecewiseCurve phi = compose(fn, curve);
    const CurveSegment* seg = phi.segment_after_zero();
    if (seg == nullptr) {
      SemiDerivative out;
      out.kind = SdKind::Divergent;
      return out;
    }
    auto coeffs = seg->value.dense_coeffs(0);
    if (!coeffs) throw InexactAnalysis("composite is not univariate in t");
    const Scalar anchor = fn.eval(base);
    const Scalar c0 = coeffs->empty() ? Scalar(0) : (*coeffs)[0];
    const Scalar jump = c0 - anchor;
    if (sign(jump) != 0) return infinite(sign(jump) > 0);
    const Scalar c1 = coeffs->size() > 1 ? (*coeffs)[1] : Scalar(0);
    return finite_exact(c1);
  } catch (const InexactAnalysis&) {
    return semiderivative_numeric(fn, space, base, target, orientation);
  }
}

SemiDerivative semiderivative(const ScalarFn& fn, const EGeodesicSpace& space,
                              const Scalar& base, const Scalar& target,
                              SdOrientation orientation) {
  return semiderivative(FnCombo::of(fn), space, base, target, orientation);
}

std::optional<DerivativeLink> derivative_link_from_name(const std::string& name) {
  if (name == "preinvex") return DerivativeLink::PREINVEX;
  if (name == "preincave") return DerivativeLink::PREINCAVE;
  if (name == "quasi") return DerivativeLink::QUASI;
  if (name == "pseudo") return DerivativeLink::PSEUDO;
  return std::nullopt;
}

std::string derivative_link_name(DerivativeLink link) {
  switch (link) {
    case DerivativeLink::PREINVEX: return "preinvex";
    case DerivativeLink::PREINCAVE: return "preincave";
    case DerivativeLink::QUASI: return "quasi";
    case DerivativeLink::PSEUDO: return "pseudo";
  }
  return "?";
}

ConsistencyReport check_derivative_links(const FnCombo& fn,
                                         const EGeodesicSpace& space,
                                         const Scalar& base, const ProbeSet& probes,
                                         DerivativeLink link) {
  require_fixed_base(space, base);
  ConsistencyReport report;
  report.name = "derivative-link-" + derivative_link_name(link);
  const Scalar at_base = fn.eval(base);

  std::vector<Scalar> pts = probes.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  for (const Scalar& k : pts) {
    const Scalar gap = fn.eval(k) - at_base;

    const bool premise_holds = link == DerivativeLink::QUASI  ? sign(gap) <= 0
                               : link == DerivativeLink::PSEUDO ? sign(gap) < 0
                                                                : true;
    if (!premise_holds) continue;

    SemiDerivative sd = semiderivative(fn, space, base, k);
    if (sd.kind == SdKind::Divergent) {
      report.inconclusive.push_back("derivative at target " + to_string(k) +
                                    " is divergent; row skipped");
      continue;
    }

    bool ok = true;
    std::ostringstream why;
    switch (link) {
      case DerivativeLink::PREINVEX:
        // gap >= derivative; -inf always passes, +inf always fails.
        if (sd.kind == SdKind::PlusInfinity) ok = false;
        else if (sd.kind == SdKind::Finite) {
          if (sd.value) ok = gap >= *sd.value;
          else ok = to_double(gap) >= *sd.approx - 1e-9;
        }
        why << "value gap " << to_string(gap) << " must dominate the derivative";
        break;
      case DerivativeLink::PREINCAVE:
        if (sd.kind == SdKind::MinusInfinity) ok = false;
        else if (sd.kind == SdKind::Finite) {
          if (sd.value) ok = gap <= *sd.value;
          else ok = to_double(gap) <= *sd.approx + 1e-9;
        }
        why << "value gap " << to_string(gap) << " must stay below the derivative";
        break;
      case DerivativeLink::QUASI:
        if (sd.kind == SdKind::PlusInfinity) ok = false;
        else if (sd.kind == SdKind::Finite) {
          if (sd.value) ok = sign(*sd.value) <= 0;
          else ok = *sd.approx <= 1e-9;
        }
        why << "nonincreasing value needs a nonpositive derivative";
        break;
      case DerivativeLink::PSEUDO:
        if (sd.kind == SdKind::PlusInfinity) ok = false;
        else if (sd.kind == SdKind::Finite) {
          if (sd.value) ok = sign(*sd.value) < 0;
          else ok = *sd.approx < -1e-9;
        }
        why << "decreasing value needs a negative derivative";
        break;
    }
    if (!ok) {
      std::ostringstream detail;
      detail << "target " << to_string(k) << ": " << why.str() << " (derivative ";
      if (sd.kind == SdKind::Finite && sd.value) detail << to_string(*sd.value);
      else if (sd.kind == SdKind::Finite) detail << *sd.approx;
      else detail << sd_kind_name(sd.kind);
      detail << ", gap " << to_string(gap) << ")";
      report.findings.push_back({"derivative-link", detail.str()});
    }
    if (!sd.exact && ok) {
      report.inconclusive.push_back("target " + to_string(k) +
                                    " verified numerically only");
    }
  }
  return report;
}

}  // namespace geovex
