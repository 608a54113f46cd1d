#include "geovex/curve.hpp"

#include <algorithm>
#include <cassert>

namespace geovex {

Region PiecewiseCurve::covered() const {
  std::vector<Interval> parts;
  parts.reserve(segments.size());
  for (const auto& segment : segments) parts.push_back(segment.range);
  return Region(std::move(parts));
}

const CurveSegment* PiecewiseCurve::segment_containing(const Scalar& t) const {
  for (const auto& segment : segments) {
    if (segment.range.contains(t)) return &segment;
    if (segment.range.lo > t) break;
  }
  return nullptr;
}

std::optional<Scalar> PiecewiseCurve::eval(const Scalar& t) const {
  const CurveSegment* segment = segment_containing(t);
  if (!segment) return std::nullopt;
  return segment->value.eval1(t);
}

const CurveSegment* PiecewiseCurve::segment_after_zero() const {
  for (const auto& segment : segments) {
    if (segment.range.lo > 0) return nullptr;  // gap right of zero
    if (sign(segment.range.hi) > 0) return &segment;
  }
  return nullptr;
}

namespace {

Guard substitute_endpoints(const Guard& guard, const Scalar& x, const Scalar& y) {
  Guard result;
  result.always = guard.always;
  for (const auto& conjunction : guard.anyof) {
    Conjunction mapped;
    for (const auto& atom : conjunction) {
      mapped.push_back(Atom{atom.lhs.substitute(0, x).substitute(1, y), atom.op});
    }
    result.anyof.push_back(std::move(mapped));
  }
  return result;
}

void append_segments(std::vector<CurveSegment>& out, const Region& where,
                     const Poly& value) {
  for (const auto& part : where.parts()) out.push_back(CurveSegment{part, value});
}

std::vector<CurveSegment> sorted_segments(std::vector<CurveSegment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const CurveSegment& a, const CurveSegment& b) {
              if (a.range.lo != b.range.lo) return a.range.lo < b.range.lo;
              return a.range.lo_closed && !b.range.lo_closed;
            });
  return segments;
}

}  // namespace

PiecewiseCurve restrict_curve(const EGeodesicSpace& space, const Scalar& x,
                              const Scalar& y) {
  PiecewiseCurve result;
  Region remaining = Region::interval(Interval::closed(Scalar(0), Scalar(1)));
  const Interval window = Interval::closed(Scalar(0), Scalar(1));
  for (const auto& piece : space.curve.pieces()) {
    if (remaining.empty()) break;
    Guard guard = substitute_endpoints(piece.when, x, y);
    Region claimed = guard_region(guard, 2, window).intersect(remaining);
    if (claimed.empty()) continue;
    Poly value = piece.body.substitute(0, x).substitute(1, y).rename(2, 0);
    append_segments(result.segments, claimed, value);
    remaining = remaining.subtract(claimed);
  }
  result.segments = sorted_segments(std::move(result.segments));
  return result;
}

PiecewiseCurve compose(const ScalarFn& f, const PiecewiseCurve& c) {
  if (!f.exact_mode()) {
    throw InexactAnalysis("black-box function admits no exact composition");
  }
  PiecewiseCurve result;
  for (const auto& segment : c.segments) {
    Region remaining = Region::interval(segment.range);
    for (const auto& piece : f.map().pieces()) {
      if (remaining.empty()) break;
      Region claimed;
      if (piece.when.always) {
        claimed = remaining;
      } else {
        Guard guard;
        guard.always = false;
        for (const auto& conjunction : piece.when.anyof) {
          Conjunction mapped;
          for (const auto& atom : conjunction) {
            mapped.push_back(Atom{atom.lhs.substitute(0, segment.value), atom.op});
          }
          guard.anyof.push_back(std::move(mapped));
        }
        claimed = guard_region(guard, 0, segment.range).intersect(remaining);
      }
      if (claimed.empty()) continue;
      append_segments(result.segments, claimed, piece.body.substitute(0, segment.value));
      remaining = remaining.subtract(claimed);
    }
  }
  result.segments = sorted_segments(std::move(result.segments));
  return result;
}

PiecewiseCurve compose(const FnCombo& combo, const PiecewiseCurve& c) {
  std::vector<PiecewiseCurve> composed;
  composed.reserve(combo.terms.size());
  for (const auto& [coeff, fn] : combo.terms) composed.push_back(compose(*fn, c));
  std::vector<std::pair<Scalar, const PiecewiseCurve*>> terms;
  for (std::size_t i = 0; i < composed.size(); ++i) {
    terms.emplace_back(combo.terms[i].first, &composed[i]);
  }
  return combine(terms, Poly::constant(combo.constant));
}

PiecewiseCurve combine(const std::vector<std::pair<Scalar, const PiecewiseCurve*>>& terms,
                       const Poly& poly_in_t) {
  PiecewiseCurve result;
  // Domain: intersection of covered regions.
  Region domain = Region::interval(Interval::closed(Scalar(0), Scalar(1)));
  for (const auto& [coeff, curve] : terms) domain = domain.intersect(curve->covered());
  if (terms.empty()) {
    append_segments(result.segments, domain, poly_in_t);
    return result;
  }
  if (domain.empty()) return result;

  std::vector<Scalar> cuts;
  for (const auto& [coeff, curve] : terms) {
    for (const auto& segment : curve->segments) {
      cuts.push_back(segment.range.lo);
      cuts.push_back(segment.range.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Elementary pieces: every breakpoint singleton and every open gap between
  // neighbors, clipped to the common domain.
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    pieces.push_back(Interval::point(cuts[i]));
    if (i + 1 < cuts.size()) pieces.push_back(Interval::open(cuts[i], cuts[i + 1]));
  }

  std::vector<CurveSegment> segments;
  for (const auto& piece : pieces) {
    Region clipped = domain.intersect(Region::interval(piece));
    if (clipped.empty()) continue;
    Scalar probe = piece.is_singleton() ? piece.lo : (piece.lo + piece.hi) / 2;
    Poly value = poly_in_t;
    bool defined = true;
    for (const auto& [coeff, curve] : terms) {
      const CurveSegment* segment = curve->segment_containing(probe);
      if (!segment) {
        defined = false;
        break;
      }
      value += segment->value.scaled(coeff);
    }
    if (defined) append_segments(segments, clipped, value);
  }

  // Merge touching segments carrying the same polynomial.
  segments = sorted_segments(std::move(segments));
  for (const auto& segment : segments) {
    if (!result.segments.empty()) {
      CurveSegment& last = result.segments.back();
      bool touches = last.range.hi == segment.range.lo &&
                     (last.range.hi_closed || segment.range.lo_closed);
      if (touches && last.value == segment.value) {
        last.range.hi = segment.range.hi;
        last.range.hi_closed = segment.range.hi_closed;
        continue;
      }
    }
    result.segments.push_back(segment);
  }
  return result;
}

Region relation_region(const PiecewiseCurve& d, RelOp op) {
  Region result;
  for (const auto& segment : d.segments) {
    result = result.unite(solve_relation(segment.value, 0, op, segment.range));
  }
  return result;
}

Region membership_region(const PiecewiseCurve& c, const Region& target) {
  Region result;
  for (const auto& segment : c.segments) {
    for (const auto& part : target.parts()) {
      Poly above_lo = segment.value - Poly::constant(part.lo);
      Poly below_hi = segment.value - Poly::constant(part.hi);
      Region in_part =
          solve_relation(above_lo, 0, part.lo_closed ? RelOp::Ge : RelOp::Gt,
                         segment.range)
              .intersect(solve_relation(below_hi, 0,
                                        part.hi_closed ? RelOp::Le : RelOp::Lt,
                                        segment.range));
      result = result.unite(in_part);
    }
  }
  return result;
}

PrefixAnalysis prefix_within(const Region& valid, const Scalar& hi) {
  PrefixAnalysis analysis;
  Region window = Region::interval(Interval::closed(Scalar(0), hi));
  Region bad = window.subtract(valid);
  analysis.holds_at_zero = valid.contains(Scalar(0));
  if (bad.empty()) {
    analysis.sup = hi;
    analysis.attained = true;
    return analysis;
  }
  const Interval& first_bad = bad.parts().front();
  if (first_bad.contains(Scalar(0))) {
    analysis.sup = Scalar(0);
    analysis.attained = false;
    analysis.first_violation = Scalar(0);
    return analysis;
  }
  analysis.sup = first_bad.lo;
  analysis.attained = !first_bad.lo_closed;

  // Witness: prefer the smallest positive multiple of 1/16 inside the bad
  // set; otherwise nudge just past its start.
  if (first_bad.lo_closed) {
    analysis.first_violation = first_bad.lo;
    return analysis;
  }
  const Scalar sixteenth = Scalar(1) / 16;
  Scalar ratio = first_bad.lo / sixteenth;
  mpz_class floor_ratio;
  mpz_fdiv_q(floor_ratio.get_mpz_t(), ratio.get_num().get_mpz_t(),
             ratio.get_den().get_mpz_t());
  Scalar candidate = Scalar(floor_ratio + 1) * sixteenth;
  if (bad.contains(candidate)) {
    analysis.first_violation = candidate;
  } else {
    Scalar step = std::min(Scalar(Scalar(1) / 64), Scalar((first_bad.hi - first_bad.lo) / 2));
    analysis.first_violation = first_bad.lo + step;
  }
  return analysis;
}

}  // namespace geovex
