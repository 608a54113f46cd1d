#pragma once

// Reference implementations used to cross-check the library. Every formula
// here is coded directly from the bundled definitions and shares no code
// with the engine under test; agreement is the point of the tests.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "geovex/funclass.hpp"
#include "geovex/region.hpp"
#include "geovex/scalar.hpp"
#include "geovex/scalar_fn.hpp"
#include "geovex/verdict.hpp"

namespace refcheck {

using geovex::Region;
using geovex::Scalar;

inline Scalar rat(long num, long den = 1) {
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

// ---- bundled space formulas, written independently ----

struct SpaceRef {
  std::function<Scalar(const Scalar&)> E;
  std::function<Scalar(const Scalar&, const Scalar&, const Scalar&)> gamma;
};

inline SpaceRef euclid_ref() {
  SpaceRef ref;
  ref.E = [](const Scalar& x) { return x; };
  ref.gamma = [](const Scalar& x, const Scalar& y, const Scalar& t) {
    return Scalar(y + t * (x - y));
  };
  return ref;
}

// Square-then-clamp point map and sign-split curve ("paper-example-1").
inline SpaceRef split_ref() {
  SpaceRef ref;
  ref.E = [](const Scalar& x) {
    if (x >= -2 && x <= 2) return Scalar(x * x);
    return Scalar(-1);
  };
  ref.gamma = [](const Scalar& x, const Scalar& y, const Scalar& t) {
    if ((x >= 0 && y >= 0) || (x <= 0 && y <= 0)) return Scalar(y + t * (x - y));
    if ((x > 0 && y <= 0) || (x >= 0 && y < 0)) return Scalar(y + t * (-1 - y));
    return Scalar(y + t * (1 - y));
  };
  return ref;
}

// Collapse-to-[0,1] point map and constant-direction curve
// ("paper-example-2").
inline SpaceRef collapse_ref() {
  SpaceRef ref;
  ref.E = [](const Scalar& x) {
    if (x < 0) return Scalar(0);
    if (x > 1 && x <= 2) return Scalar(1);
    return x;
  };
  ref.gamma = [](const Scalar& x, const Scalar& y, const Scalar& t) {
    if (x == y) return y;
    return Scalar(y + t * (1 - x));
  };
  return ref;
}

// The step/ramp function bundled with the collapse space ("example2-h").
inline Scalar step_fn(const Scalar& m) {
  if (m > 1 && m <= 2) return Scalar(0);
  if (m > 2) return Scalar(1);
  if (m >= 0) return Scalar(1 - m);
  return Scalar(2 - m);
}

// ---- deterministic random fixtures ----

struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  Scalar rational(long span = 8, long max_den = 8) {
    long den = integer(1, max_den);
    return rat(integer(-span * den, span * den), den);
  }

  Scalar positive_rational(long span = 8, long max_den = 8) {
    long den = integer(1, max_den);
    return rat(integer(1, span * den), den);
  }

  bool coin() { return integer(0, 1) == 1; }
};

// Continuous piecewise-affine function: knots ascending, one slope per
// segment, anchored by the value at the first knot; the first and last
// slopes extend beyond the knot range so the function is total.
struct PwAffine {
  std::vector<Scalar> knots;
  std::vector<Scalar> slopes;
  Scalar value_at_first = Scalar(0);

  Scalar operator()(const Scalar& x) const {
    Scalar value = value_at_first;
    if (x <= knots.front()) return Scalar(value + slopes.front() * (x - knots.front()));
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      if (x <= knots[i + 1]) return Scalar(value + slopes[i] * (x - knots[i]));
      value += slopes[i] * (knots[i + 1] - knots[i]);
    }
    return Scalar(value + slopes.back() * (x - knots.back()));
  }

  Scalar value_at(std::size_t knot_index) const {
    Scalar value = value_at_first;
    for (std::size_t i = 0; i < knot_index; ++i) {
      value += slopes[i] * (knots[i + 1] - knots[i]);
    }
    return value;
  }

  // Engine-side build: first-match "x <= knot" guards, last piece catches
  // everything above.
  geovex::ScalarFn to_scalar_fn(const std::string& label) const {
    using geovex::Atom;
    using geovex::Guard;
    using geovex::MapPiece;
    using geovex::Poly;
    using geovex::RelOp;
    std::vector<MapPiece> pieces;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      Scalar anchor_x = knots[i];
      Scalar anchor_v = value_at(i);
      Poly body = Poly::constant(Scalar(anchor_v - slopes[i] * anchor_x)) +
                  Poly::variable(0).scaled(slopes[i]);
      if (i + 1 < slopes.size()) {
        Atom below{Poly::variable(0) - Poly::constant(knots[i + 1]), RelOp::Le};
        pieces.push_back(MapPiece{Guard::single(below), body});
      } else {
        pieces.push_back(MapPiece{Guard::everything(), body});
      }
    }
    return geovex::ScalarFn::exact(geovex::PiecewiseMap(1, pieces, label), label);
  }
};

// Random convex instance: slopes strictly increasing across segments.
inline PwAffine random_convex(Rng& rng, const Scalar& lo, const Scalar& hi,
                              int segments) {
  PwAffine fn;
  fn.knots.push_back(lo);
  for (int i = 1; i < segments; ++i) {
    fn.knots.push_back(Scalar(lo + (hi - lo) * rat(i, segments)));
  }
  fn.knots.push_back(hi);
  Scalar slope = rng.rational(4, 4);
  for (int i = 0; i < segments; ++i) {
    fn.slopes.push_back(slope);
    slope += rng.positive_rational(3, 4);
  }
  fn.value_at_first = rng.rational(4, 4);
  return fn;
}

inline PwAffine random_pw_affine(Rng& rng, const Scalar& lo, const Scalar& hi,
                                 int segments) {
  PwAffine fn;
  fn.knots.push_back(lo);
  for (int i = 1; i < segments; ++i) {
    fn.knots.push_back(Scalar(lo + (hi - lo) * rat(i, segments)));
  }
  fn.knots.push_back(hi);
  for (int i = 0; i < segments; ++i) fn.slopes.push_back(rng.rational(4, 4));
  fn.value_at_first = rng.rational(4, 4);
  return fn;
}

// ---- brute-force weak efficiency (strict componentwise domination) ----

inline std::vector<bool> weakly_efficient(
    const std::vector<std::vector<Scalar>>& rows) {
  std::vector<bool> out(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size() && out[i]; ++j) {
      if (j == i) continue;
      bool dominates = true;
      for (std::size_t c = 0; c < rows[i].size(); ++c) {
        if (!(rows[j][c] < rows[i][c])) {
          dominates = false;
          break;
        }
      }
      if (dominates) out[i] = false;
    }
  }
  return out;
}

// ---- witness re-verification against the definitions ----

// Chord value per class at parameter t, using reference evaluations only.
inline Scalar class_chord(geovex::FnClass cls,
                          const std::function<Scalar(const Scalar&)>& f,
                          const SpaceRef& space, const Scalar& k1,
                          const Scalar& k2, const Scalar& t) {
  using geovex::FnClass;
  switch (cls) {
    case FnClass::GEP:
    case FnClass::GLEP:
      return Scalar(t * f(space.E(k1)) + (1 - t) * f(space.E(k2)));
    case FnClass::GSEP:
    case FnClass::GSLEC:
    case FnClass::GSLEP:
    case FnClass::PREINCAVE:
      return Scalar(t * f(k1) + (1 - t) * f(k2));
    case FnClass::GQSLEP:
    case FnClass::GPSLEP:
      return f(k2);
  }
  return Scalar(0);
}

// True when a Fails witness reproduces its violation under the reference
// formulas. Structural conditions without a pointwise statement
// ("margin-vanishes") verify the reported numbers only.
inline bool witness_reverifies(const geovex::Witness& w, geovex::FnClass cls,
                               const SpaceRef& space,
                               const std::function<Scalar(const Scalar&)>& f,
                               const Region& region) {
  if (!w.t.has_value()) return false;
  Scalar point = space.gamma(space.E(w.k1), space.E(w.k2), *w.t);
  if (w.point.has_value() && *w.point != point) return false;
  if (w.condition == "set-precondition" || w.condition == "membership" ||
      w.condition == "max-scale-attained") {
    return !region.contains(point);
  }
  if (w.condition == "inequality") {
    if (!region.contains(point)) return false;
    Scalar lhs = f(point);
    Scalar rhs = class_chord(cls, f, space, w.k1, w.k2, *w.t);
    if (w.lhs.has_value() && *w.lhs != lhs) return false;
    if (w.rhs.has_value() && *w.rhs != rhs) return false;
    if (cls == geovex::FnClass::PREINCAVE) return lhs < rhs;
    return lhs > rhs;
  }
  if (w.condition == "margin-vanishes") {
    if (!w.lhs.has_value() || !w.rhs.has_value()) return true;
    Scalar slack_quotient = Scalar((f(w.k2) - f(point)) / *w.t);
    return *w.lhs == slack_quotient && *w.rhs == 0;
  }
  return false;
}

// Set-property witness (no function involved): the curve point must escape.
inline bool set_witness_reverifies(const geovex::Witness& w, const SpaceRef& space,
                                   const Region& region) {
  if (!w.t.has_value()) return false;
  Scalar point = space.gamma(space.E(w.k1), space.E(w.k2), *w.t);
  if (w.point.has_value() && *w.point != point) return false;
  return !region.contains(point);
}

}  // namespace refcheck
