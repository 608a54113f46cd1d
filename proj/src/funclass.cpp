#include "geovex/funclass.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/errors.hpp"

namespace geovex {
namespace {

Poly poly_t() { return Poly::variable(0); }

/// t*c1 + (1-t)*c2 as a polynomial in t.
Poly chord(const Scalar& c1, const Scalar& c2) {
  return Poly::constant(c2) + poly_t().scaled(c1 - c2);
}

Scalar prefix_certificate(const PrefixAnalysis& p) {
  return p.attained ? p.sup : p.sup / 2;
}

bool uses_full_window(FnClass cls) {
  return cls == FnClass::GEP || cls == FnClass::GSEP;
}

std::vector<Scalar> sorted_points(const ProbeSet& probes) {
  std::vector<Scalar> pts = probes.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct PairReport {
  bool ok = false;
  bool sound = true;  // when !ok: whether the failure is a proof
  AnalysisMode mode = AnalysisMode::Exact;
  Witness witness;
  LocalityEntry entry;
};

/// Shared state for one (k1, k2) probe pair.
struct PairContext {
  const EGeodesicSpace& space;
  const Region& region;
  const FnCombo& fn;
  FnClass cls;
  Scalar k1, k2, e1, e2;
  Scalar raw1, raw2;

  Scalar gamma_at(const Scalar& t) const { return eval_gamma(space, e1, e2, t); }

  bool member_at(const Scalar& t) const {
    try {
      return region.contains(gamma_at(t));
    } catch (const EvalError&) {
      return false;
    }
  }

  std::optional<Scalar> value_at(const Scalar& t) const {
    try {
      return fn.eval(gamma_at(t));
    } catch (const EvalError&) {
      return std::nullopt;
    }
  }
};

Poly reference_chord(const PairContext& ctx) {
  switch (ctx.cls) {
    case FnClass::GEP:
    case FnClass::GLEP:
      return chord(ctx.fn.eval(ctx.e1), ctx.fn.eval(ctx.e2));
    case FnClass::GSEP:
    case FnClass::GSLEC:
    case FnClass::GSLEP:
    case FnClass::PREINCAVE:
      return chord(ctx.raw1, ctx.raw2);
    case FnClass::GQSLEP:
    case FnClass::GPSLEP:
      return Poly::constant(ctx.raw2);
  }
  return Poly();
}

/// Pointwise class inequality at one parameter (sampled paths and witness
/// classification): value-vs-chord with the class's relation.
bool inequality_at(const PairContext& ctx, const Poly& rhs, const Scalar& t) {
  std::optional<Scalar> phi = ctx.value_at(t);
  if (!phi) return false;
  Scalar bound = rhs.eval1(t);
  if (ctx.cls == FnClass::PREINCAVE) return *phi >= bound;
  return *phi <= bound;
}

Witness make_witness(const PairContext& ctx, const Poly& rhs, const Scalar& t,
                     bool set_failure) {
  Witness w;
  w.k1 = ctx.k1;
  w.k2 = ctx.k2;
  w.t = t;
  try {
    Scalar pt = ctx.gamma_at(t);
    w.point = pt;
    if (set_failure || !ctx.region.contains(pt)) {
      w.condition = "set-precondition";
      w.lhs = pt;
    } else {
      w.condition = "inequality";
      w.lhs = ctx.fn.eval(pt);
      w.rhs = rhs.eval1(t);
    }
  } catch (const EvalError&) {
    w.condition = "set-precondition";
  }
  return w;
}

/// Exact decision for one pair. Throws InexactAnalysis to request sampling.
PairReport exact_pair(const PairContext& ctx) {
  PairReport out;
  out.mode = AnalysisMode::Exact;
  out.entry.k1 = ctx.k1;
  out.entry.k2 = ctx.k2;

  PiecewiseCurve curve = restrict_curve(ctx.space, ctx.e1, ctx.e2);
  Region vmem = membership_region(curve, ctx.region);
  PrefixAnalysis mem = prefix_within(vmem, Scalar(1));

  const bool full = uses_full_window(ctx.cls);
  bool set_ok = mem.holds_at_zero && sign(mem.sup) > 0;
  if (full) set_ok = mem.holds_at_zero && mem.sup == 1 && mem.attained;
  if (ctx.cls == FnClass::GSLEC) set_ok = set_ok && mem.attained;
  if (!set_ok) {
    Scalar bad_t = !mem.holds_at_zero ? Scalar(0)
                   : mem.first_violation ? *mem.first_violation
                                         : Scalar(1);
    out.ok = false;
    out.witness = make_witness(ctx, reference_chord(ctx), bad_t, true);
    if (ctx.cls == FnClass::GSLEC && mem.holds_at_zero && sign(mem.sup) > 0 &&
        !mem.attained) {
      out.witness.condition = "max-scale-attained";
    }
    return out;
  }
  out.entry.u = full ? Scalar(1) : prefix_certificate(mem);

  // Quasi/pseudo premises: pairs outside the premise hold vacuously.
  if (ctx.cls == FnClass::GQSLEP && !(ctx.raw1 <= ctx.raw2)) {
    out.ok = true;
    out.entry.v = out.entry.u;
    return out;
  }
  if (ctx.cls == FnClass::GPSLEP && !(ctx.raw1 < ctx.raw2)) {
    out.ok = true;
    out.entry.v = out.entry.u;
    return out;
  }

  PiecewiseCurve phi = compose(ctx.fn, curve);

  if (ctx.cls == FnClass::GPSLEP) {
    // Margin form: slack D(t) = f(k2) - phi(t) must dominate t*w near zero.
    PiecewiseCurve slack = combine({{Scalar(-1), &phi}}, Poly::constant(ctx.raw2));
    std::optional<Scalar> phi0 = slack.eval(Scalar(0));
    if (!phi0) throw InexactAnalysis("slack undefined at t = 0");
    const Scalar slack0 = *phi0;
    const CurveSegment* seg = slack.segment_after_zero();
    if (seg == nullptr) throw InexactAnalysis("slack undefined just after t = 0");
    auto coeffs = seg->value.dense_coeffs(0);
    if (!coeffs) throw InexactAnalysis("slack is not univariate in t");
    Scalar c0 = coeffs->size() > 0 ? (*coeffs)[0] : Scalar(0);
    Scalar c1 = coeffs->size() > 1 ? (*coeffs)[1] : Scalar(0);

    const bool margin_ok =
        sign(slack0) >= 0 && (sign(c0) > 0 || (sign(c0) == 0 && sign(c1) > 0));
    if (!margin_ok) {
      out.ok = false;
      if (sign(slack0) < 0 || sign(c0) < 0 || (sign(c0) == 0 && sign(c1) < 0)) {
        // The slack itself goes negative: a pointwise refutation exists.
        Region nonneg = relation_region(slack, RelOp::Ge).intersect(vmem);
        PrefixAnalysis p = prefix_within(nonneg, Scalar(1));
        Scalar bad_t = !p.holds_at_zero ? Scalar(0)
                       : p.first_violation ? *p.first_violation
                                           : Scalar(1);
        out.witness = make_witness(ctx, Poly::constant(ctx.raw2), bad_t, false);
      } else {
        // Slack stays nonnegative but its quotient by t vanishes at 0+, so
        // no uniform positive margin exists; no single t certifies this.
        out.witness.k1 = ctx.k1;
        out.witness.k2 = ctx.k2;
        Scalar s = t_samples(1).front();  // 1/2
        out.witness.t = s;
        std::optional<Scalar> ds = slack.eval(s);
        if (ds) {
          out.witness.lhs = *ds / s;
          out.witness.rhs = Scalar(0);
        }
        out.witness.condition = "margin-vanishes";
      }
      return out;
    }

    const Scalar w0 = sign(c0) > 0 ? c0 : c1 / 2;
    PiecewiseCurve margin = combine({{Scalar(1), &slack}}, poly_t().scaled(-w0));
    Region good = relation_region(margin, RelOp::Ge).intersect(vmem);
    PrefixAnalysis p = prefix_within(good, Scalar(1));
    Scalar v = prefix_certificate(p);
    if (v > out.entry.u) v = out.entry.u;
    out.ok = true;
    out.entry.v = v;
    // Reported margin: worst slack quotient over the standard samples that
    // fall inside the certified prefix.
    std::optional<Scalar> wmin;
    for (const Scalar& t : t_samples(20)) {
      if (t > v) continue;
      std::optional<Scalar> d = slack.eval(t);
      if (!d) continue;
      Scalar q = *d / t;
      if (!wmin || q < *wmin) wmin = q;
    }
    out.entry.w = wmin ? *wmin : w0;
    return out;
  }

  const Poly rhs = reference_chord(ctx);
  PiecewiseCurve diff =
      ctx.cls == FnClass::PREINCAVE
          ? combine({{Scalar(1), &phi}}, rhs.scaled(Scalar(-1)))
          : combine({{Scalar(-1), &phi}}, rhs);
  Region good = relation_region(diff, RelOp::Ge).intersect(vmem);
  PrefixAnalysis p = prefix_within(good, Scalar(1));

  bool ok = p.holds_at_zero && sign(p.sup) > 0;
  if (full) ok = p.holds_at_zero && p.sup == 1 && p.attained;
  if (!ok) {
    Scalar bad_t = !p.holds_at_zero ? Scalar(0)
                   : p.first_violation ? *p.first_violation
                                       : Scalar(1);
    out.ok = false;
    out.witness = make_witness(ctx, rhs, bad_t, false);
    return out;
  }
  out.ok = true;
  out.entry.v = full ? Scalar(1) : prefix_certificate(p);
  if (out.entry.v > out.entry.u) out.entry.v = out.entry.u;
  return out;
}

/// Sample-based fallback for one pair; evaluations stay exact, only the
/// t-quantifier is finite.
PairReport sampled_pair(const PairContext& ctx, int sample_count) {
  PairReport out;
  out.mode = AnalysisMode::Sampled;
  out.entry.k1 = ctx.k1;
  out.entry.k2 = ctx.k2;

  const Poly rhs = reference_chord(ctx);
  const bool full = uses_full_window(ctx.cls);

  std::vector<Scalar> ts = t_samples(sample_count);
  std::sort(ts.begin(), ts.end());
  if (full) ts.push_back(Scalar(1));

  const bool premise_exempt =
      (ctx.cls == FnClass::GQSLEP && !(ctx.raw1 <= ctx.raw2)) ||
      (ctx.cls == FnClass::GPSLEP && !(ctx.raw1 < ctx.raw2));

  auto point_ok = [&](const Scalar& t) {
    if (!ctx.member_at(t)) return false;
    if (premise_exempt) return true;
    if (ctx.cls == FnClass::GPSLEP) return true;  // handled via quotients below
    return inequality_at(ctx, rhs, t);
  };

  if (!point_ok(Scalar(0))) {
    out.ok = false;
    out.witness = make_witness(ctx, rhs, Scalar(0),
                               /*set_failure=*/!ctx.member_at(Scalar(0)));
    return out;
  }
  if (ctx.cls == FnClass::GPSLEP && !premise_exempt) {
    // At t = 0 the margin inequality degenerates to phi(0) <= f(k2).
    std::optional<Scalar> phi0 = ctx.value_at(Scalar(0));
    if (!phi0 || *phi0 > ctx.raw2) {
      out.ok = false;
      out.witness = make_witness(ctx, rhs, Scalar(0), !phi0.has_value());
      return out;
    }
  }

  Scalar prefix(0);
  bool any = false;
  std::optional<Scalar> first_bad;
  std::optional<Scalar> wmin;
  for (const Scalar& t : ts) {
    bool ok = point_ok(t);
    if (ok && ctx.cls == FnClass::GPSLEP && !premise_exempt) {
      std::optional<Scalar> phi = ctx.value_at(t);
      if (!phi) {
        ok = false;
      } else {
        Scalar q = (ctx.raw2 - *phi) / t;
        if (sign(q) <= 0) ok = false;
        else if (!wmin || q < *wmin) wmin = q;
      }
    }
    if (!ok) {
      first_bad = t;
      break;
    }
    prefix = t;
    any = true;
  }

  if (full) {
    if (!first_bad) {
      out.ok = true;
      out.entry.u = Scalar(1);
      out.entry.v = Scalar(1);
      return out;
    }
    out.ok = false;
    out.witness = make_witness(ctx, rhs, *first_bad, !ctx.member_at(*first_bad));
    return out;
  }

  if (premise_exempt || any) {
    // A verified positive prefix (or a vacuous premise with membership at 0).
    if (premise_exempt && !any) {
      // Membership held at 0; find a sampled membership prefix for u.
      for (const Scalar& t : ts) {
        if (!ctx.member_at(t)) break;
        prefix = t;
        any = true;
      }
      if (!any) {
        out.ok = false;
        out.sound = false;
        out.witness = make_witness(ctx, rhs, ts.front(), true);
        return out;
      }
    }
    out.ok = true;
    out.entry.u = prefix;
    out.entry.v = prefix;
    if (ctx.cls == FnClass::GPSLEP && !premise_exempt) out.entry.w = wmin;
    return out;
  }

  // No sampled t survived: sampling cannot refute an existential prefix
  // unless the failure already sits at t = 0 (handled above), so this pair
  // is inconclusive. A pointwise inequality violation is still a sound
  // witness for the strict classes when the chord cannot recover below it.
  out.ok = false;
  out.sound = false;
  out.witness = make_witness(ctx, rhs, *first_bad, !ctx.member_at(*first_bad));
  return out;
}

}  // namespace

std::optional<FnClass> fn_class_from_name(const std::string& name) {
  if (name == "gep") return FnClass::GEP;
  if (name == "gsep") return FnClass::GSEP;
  if (name == "glep") return FnClass::GLEP;
  if (name == "gslec") return FnClass::GSLEC;
  if (name == "gslep") return FnClass::GSLEP;
  if (name == "preincave") return FnClass::PREINCAVE;
  if (name == "gqslep") return FnClass::GQSLEP;
  if (name == "gpslep") return FnClass::GPSLEP;
  return std::nullopt;
}

std::string fn_class_name(FnClass cls) {
  switch (cls) {
    case FnClass::GEP: return "gep";
    case FnClass::GSEP: return "gsep";
    case FnClass::GLEP: return "glep";
    case FnClass::GSLEC: return "gslec";
    case FnClass::GSLEP: return "gslep";
    case FnClass::PREINCAVE: return "preincave";
    case FnClass::GQSLEP: return "gqslep";
    case FnClass::GPSLEP: return "gpslep";
  }
  return "?";
}

CheckVerdict check_class(const EGeodesicSpace& space, const Region& region,
                         const FnCombo& fn, FnClass cls, const ProbeSet& probes) {
  if (!fn.exact_mode()) {
    throw ConfigError("check_class",
                      "class checks need exact piecewise functions, got a "
                      "numeric-only function");
  }
  CheckVerdict out;
  out.verdict = Verdict::Holds;

  const std::vector<Scalar> pts = sorted_points(probes);
  std::optional<Witness> unsound_failure;
  long pair_count = 0;

  for (const Scalar& k1 : pts) {
    for (const Scalar& k2 : pts) {
      ++pair_count;
      PairContext ctx{space,          region,         fn,
                      cls,            k1,             k2,
                      eval_E(space, k1), eval_E(space, k2),
                      fn.eval(k1),    fn.eval(k2)};
      PairReport rep;
      try {
        rep = exact_pair(ctx);
      } catch (const InexactAnalysis&) {
        rep = sampled_pair(ctx, probes.policy.t_sample_count);
      }
      if (rep.mode == AnalysisMode::Sampled) out.mode = AnalysisMode::Sampled;
      if (rep.ok) {
        out.locality.entries.push_back(rep.entry);
        continue;
      }
      if (!rep.sound) {
        if (!unsound_failure) unsound_failure = rep.witness;
        continue;
      }
      out.verdict = Verdict::Fails;
      out.witness = rep.witness;
      std::ostringstream detail;
      detail << fn_class_name(cls) << " fails at pair (" << to_string(k1) << ", "
             << to_string(k2) << ")";
      if (rep.witness.t) detail << " at t = " << to_string(*rep.witness.t);
      detail << " (condition: " << rep.witness.condition << ")";
      out.detail = detail.str();
      out.locality.entries.clear();
      return out;
    }
  }

  if (unsound_failure) {
    out.verdict = Verdict::Inconclusive;
    out.witness = unsound_failure;
    out.detail = "sampled analysis could not certify a positive prefix at pair (" +
                 to_string(unsound_failure->k1) + ", " +
                 to_string(unsound_failure->k2) + ")";
    out.locality.entries.clear();
    return out;
  }

  std::ostringstream detail;
  detail << fn_class_name(cls) << " holds over " << pair_count
         << " ordered pairs (" << pts.size() << " probes)";
  out.detail = detail.str();
  return out;
}

CheckVerdict check_class_pair(const EGeodesicSpace& space, const Region& region,
                              const FnCombo& fn, FnClass cls, const Scalar& k1,
                              const Scalar& k2, int t_sample_count) {
  if (!fn.exact_mode()) {
    throw ConfigError("check_class_pair",
                      "class checks need exact piecewise functions, got a "
                      "numeric-only function");
  }
  PairContext ctx{space,          region,         fn,
                  cls,            k1,             k2,
                  eval_E(space, k1), eval_E(space, k2),
                  fn.eval(k1),    fn.eval(k2)};
  PairReport rep;
  try {
    rep = exact_pair(ctx);
  } catch (const InexactAnalysis&) {
    rep = sampled_pair(ctx, t_sample_count);
  }
  CheckVerdict out;
  out.mode = rep.mode;
  if (rep.ok) {
    out.verdict = Verdict::Holds;
    out.locality.entries.push_back(rep.entry);
    out.detail = fn_class_name(cls) + " holds at pair (" + to_string(k1) + ", " +
                 to_string(k2) + ")";
    return out;
  }
  out.verdict = rep.sound ? Verdict::Fails : Verdict::Inconclusive;
  out.witness = rep.witness;
  std::ostringstream detail;
  detail << fn_class_name(cls)
         << (rep.sound ? " fails at pair (" : " is inconclusive at pair (")
         << to_string(k1) << ", " << to_string(k2) << ")";
  if (rep.witness.t) detail << " at t = " << to_string(*rep.witness.t);
  detail << " (condition: " << rep.witness.condition << ")";
  out.detail = detail.str();
  return out;
}

Region level_set(const ScalarFn& f, const Region& region, const Scalar& alpha) {
  if (!f.exact_mode()) {
    throw ConfigError("level_set", "level sets need exact piecewise functions");
  }
  Region out;
  Region remaining = region;
  for (const MapPiece& piece : f.map().pieces()) {
    if (remaining.empty()) break;
    Region claimed;
    for (const Interval& part : remaining.parts()) {
      claimed = claimed.unite(guard_region(piece.when, 0, part));
    }
    for (const Interval& part : claimed.parts()) {
      out = out.unite(
          solve_relation(piece.body - Poly::constant(alpha), 0, RelOp::Le, part));
    }
    remaining = remaining.subtract(claimed);
  }
  return out;
}

std::optional<TheoremCheck> theorem_check_from_name(const std::string& name) {
  if (name == "epigraph") return TheoremCheck::EPIGRAPH;
  if (name == "levelset") return TheoremCheck::LEVELSET;
  if (name == "glep-char") return TheoremCheck::GLEP_CHAR;
  if (name == "alpha-beta") return TheoremCheck::ALPHA_BETA;
  return std::nullopt;
}

std::string theorem_check_name(TheoremCheck check) {
  switch (check) {
    case TheoremCheck::EPIGRAPH: return "epigraph";
    case TheoremCheck::LEVELSET: return "levelset";
    case TheoremCheck::GLEP_CHAR: return "glep-char";
    case TheoremCheck::ALPHA_BETA: return "alpha-beta";
  }
  return "?";
}

namespace {

std::string verdict_word(const CheckVerdict& v) { return verdict_name(v.verdict); }

void note_inconclusive(ConsistencyReport& report, const std::string& what,
                       const CheckVerdict& v) {
  if (v.verdict == Verdict::Inconclusive) {
    report.inconclusive.push_back(what + " is inconclusive: " + v.detail);
  }
}

}  // namespace

ConsistencyReport crosscheck_theorem(TheoremCheck check, const EGeodesicSpace& space,
                                     const Region& region, const ScalarFn& f,
                                     const ProbeSet& probes) {
  ConsistencyReport report;
  report.name = theorem_check_name(check);
  const FnCombo combo = FnCombo::of(f);
  const std::vector<Scalar> pts = [&] {
    std::vector<Scalar> p = probes.points;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }();

  switch (check) {
    case TheoremCheck::EPIGRAPH: {
      CheckVerdict lhs = check_class(space, region, combo, FnClass::GSLEP, probes);
      // Height cap: comfortably above every probed value so the truncation
      // cannot interfere (pair heights never exceed their endpoints).
      Scalar cap(1);
      for (const Scalar& k : pts) {
        Scalar v = f.eval(k);
        if (v + 1 > cap) cap = v + 1;
      }
      CheckVerdict rhs = check_product_glei(space, region, f, cap, probes);
      note_inconclusive(report, "function-class side", lhs);
      note_inconclusive(report, "product-set side", rhs);
      if (lhs.verdict == Verdict::Holds && rhs.verdict == Verdict::Fails) {
        report.findings.push_back(
            {"epigraph-forward",
             "function class holds but the product set fails: " + rhs.detail});
      }
      if (rhs.verdict == Verdict::Holds && lhs.verdict == Verdict::Fails) {
        report.findings.push_back(
            {"epigraph-converse",
             "product set holds but the function class fails: " + lhs.detail});
      }
      break;
    }
    case TheoremCheck::LEVELSET: {
      CheckVerdict cls = check_class(space, region, combo, FnClass::GSLEP, probes);
      note_inconclusive(report, "function-class side", cls);
      if (cls.verdict != Verdict::Holds) {
        report.inconclusive.push_back(
            "hypothesis not established (function class verdict: " +
            verdict_word(cls) + "); level sets not probed");
        break;
      }
      // Probe heights: function values at probes plus a value strictly above.
      std::vector<Scalar> alphas;
      for (const Scalar& k : pts) alphas.push_back(f.eval(k));
      std::sort(alphas.begin(), alphas.end());
      alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
      if (alphas.size() > 6) {
        std::vector<Scalar> trimmed;
        trimmed.push_back(alphas.front());
        trimmed.push_back(alphas[alphas.size() / 3]);
        trimmed.push_back(alphas[(2 * alphas.size()) / 3]);
        trimmed.push_back(alphas.back());
        alphas = trimmed;
      }
      if (!alphas.empty()) alphas.push_back(alphas.back() + 1);
      for (const Scalar& alpha : alphas) {
        Region level;
        try {
          level = level_set(f, region, alpha);
        } catch (const InexactAnalysis&) {
          report.inconclusive.push_back("level set at alpha = " + to_string(alpha) +
                                        " has no rational closed form");
          continue;
        }
        if (level.empty()) continue;
        ProbeSet level_probes = build_probes(level, space, probes.policy, {&f});
        CheckVerdict verdict =
            check_set_property(space, level, SetProperty::GLEI, level_probes);
        note_inconclusive(report, "level set at alpha = " + to_string(alpha), verdict);
        if (verdict.verdict == Verdict::Fails) {
          std::string where;
          if (verdict.witness) {
            where = " at pair (" + to_string(verdict.witness->k1) + ", " +
                    to_string(verdict.witness->k2) + ")";
          }
          report.findings.push_back(
              {"levelset", "level set at alpha = " + to_string(alpha) +
                               " is not scale-invex" + where});
        }
      }
      break;
    }
    case TheoremCheck::GLEP_CHAR: {
      CheckVerdict strong = check_class(space, region, combo, FnClass::GSLEP, probes);
      CheckVerdict weak = check_class(space, region, combo, FnClass::GLEP, probes);
      note_inconclusive(report, "raw-chord class", strong);
      note_inconclusive(report, "image-chord class", weak);
      std::optional<Scalar> increase_at;
      for (const Scalar& k : pts) {
        if (f.eval(eval_E(space, k)) > f.eval(k)) {
          increase_at = k;
          break;
        }
      }
      if (strong.verdict == Verdict::Holds && increase_at) {
        report.findings.push_back(
            {"char-necessity", "raw-chord class holds but the point map increases "
                               "the value at k = " +
                                   to_string(*increase_at)});
      }
      if (weak.verdict == Verdict::Holds && !increase_at &&
          strong.verdict == Verdict::Fails) {
        report.findings.push_back(
            {"char-sufficiency",
             "image-chord class holds and the point map never increases the "
             "value on probes, yet the raw-chord class fails: " + strong.detail});
      }
      break;
    }
    case TheoremCheck::ALPHA_BETA: {
      CheckVerdict cls = check_class(space, region, combo, FnClass::GSLEP, probes);
      note_inconclusive(report, "function-class side", cls);
      // Strict-chord condition at sampled heights above the endpoint values.
      const std::vector<Scalar> deltas = {Scalar(1) / 16, Scalar(1)};
      std::optional<Witness> strict_failure;
      bool strict_all_ok = true;
      for (const Scalar& k1 : pts) {
        for (const Scalar& k2 : pts) {
          for (const Scalar& d1 : deltas) {
            for (const Scalar& d2 : deltas) {
              PairContext ctx{space, region, combo, FnClass::GSLEP,
                              k1,    k2,     eval_E(space, k1), eval_E(space, k2),
                              f.eval(k1) + d1, f.eval(k2) + d2};
              // Reuse the GSLEP engine with shifted endpoint values: the
              // strict-chord rhs is exactly the chord of the shifted values.
              PairReport rep;
              try {
                rep = exact_pair(ctx);
              } catch (const InexactAnalysis&) {
                rep = sampled_pair(ctx, probes.policy.t_sample_count);
              }
              if (!rep.ok && rep.sound) {
                strict_all_ok = false;
                if (!strict_failure) strict_failure = rep.witness;
              } else if (!rep.ok) {
                report.inconclusive.push_back(
                    "strict-chord condition inconclusive at pair (" +
                    to_string(k1) + ", " + to_string(k2) + ")");
              }
            }
          }
          if (strict_failure) break;
        }
        if (strict_failure) break;
      }
      if (cls.verdict == Verdict::Holds && strict_failure) {
        report.findings.push_back(
            {"alpha-beta-forward",
             "function class holds but the strict-chord condition fails at pair (" +
                 to_string(strict_failure->k1) + ", " +
                 to_string(strict_failure->k2) + ")"});
      }
      if (cls.verdict == Verdict::Fails && strict_all_ok) {
        report.inconclusive.push_back(
            "strict-chord condition held at every sampled height although the "
            "function class fails; heights are sampled, so this direction is "
            "not decided");
      }
      break;
    }
  }
  return report;
}

}  // namespace geovex
