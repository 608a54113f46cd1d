#include "geovex/space.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/expr.hpp"

namespace geovex {

Scalar eval_E(const EGeodesicSpace& space, const Scalar& kappa) {
  const Scalar args[1] = {kappa};
  return space.point_map.eval(std::span<const Scalar>(args, 1));
}

Scalar eval_eta(const EGeodesicSpace& space, const Scalar& x, const Scalar& y) {
  const Scalar args[2] = {x, y};
  return space.direction.eval(std::span<const Scalar>(args, 2));
}

Scalar eval_gamma(const EGeodesicSpace& space, const Scalar& x, const Scalar& y,
                  const Scalar& t) {
  if (sign(t) < 0 || t > 1) {
    throw EvalError(EvalError::Kind::ParameterOutOfRange,
                    "curve parameter " + to_string(t) + " outside [0,1]");
  }
  const Scalar args[3] = {x, y, t};
  return space.curve.eval(std::span<const Scalar>(args, 3));
}

namespace {

const std::string kVar1[] = {"x"};
const std::string kVar2[] = {"x", "y"};
const std::string kVar3[] = {"x", "y", "t"};

MapPiece piece1(const std::string& guard, const std::string& body) {
  return MapPiece{parse_guard_expr(guard, kVar1), parse_poly_expr(body, kVar1)};
}

MapPiece piece2(const std::string& guard, const std::string& body) {
  return MapPiece{parse_guard_expr(guard, kVar2), parse_poly_expr(body, kVar2)};
}

MapPiece piece3(const std::string& guard, const std::string& body) {
  return MapPiece{parse_guard_expr(guard, kVar3), parse_poly_expr(body, kVar3)};
}

EGeodesicSpace make_euclid() {
  EGeodesicSpace space;
  space.label = "euclid";
  space.point_map = PiecewiseMap::single(1, parse_poly_expr("x", kVar1), "E");
  space.direction = PiecewiseMap::single(2, parse_poly_expr("x - y", kVar2), "eta");
  space.curve = PiecewiseMap::single(3, parse_poly_expr("y + t*(x - y)", kVar3), "gamma");
  return space;
}

// Square-then-clamp point map over the split carrier [-4,-1) u [1,4].
// The three direction/curve branches overlap at sign boundaries; branch
// order resolves the ties, so the piece order below is load-bearing.
EGeodesicSpace make_example1() {
  EGeodesicSpace space;
  space.label = "paper-example-1";
  space.point_map = PiecewiseMap(
      1,
      {piece1("x >= -2 && x <= 2", "x^2"), piece1("x < -2 || x > 2", "-1")},
      "E");
  const std::string same_side = "(x >= 0 && y >= 0) || (x <= 0 && y <= 0)";
  const std::string to_negative = "(x > 0 && y <= 0) || (x >= 0 && y < 0)";
  const std::string to_positive = "(x < 0 && y >= 0) || (x <= 0 && y > 0)";
  space.direction = PiecewiseMap(2,
                                 {piece2(same_side, "x - y"),
                                  piece2(to_negative, "-1 - y"),
                                  piece2(to_positive, "1 - y")},
                                 "eta");
  space.curve = PiecewiseMap(3,
                             {piece3(same_side, "y + t*(x - y)"),
                              piece3(to_negative, "y + t*(-1 - y)"),
                              piece3(to_positive, "y + t*(1 - y)")},
                             "gamma");
  return space;
}

// Identity on [0,1] and (2,inf), collapsing (-inf,0) to 0 and (1,2] to 1;
// every curve moves from its base toward 1 - x unless the endpoints agree.
EGeodesicSpace make_example2() {
  EGeodesicSpace space;
  space.label = "paper-example-2";
  space.point_map = PiecewiseMap(1,
                                 {piece1("x < 0", "0"),
                                  piece1("x > 1 && x <= 2", "1"),
                                  piece1("(x >= 0 && x <= 1) || x > 2", "x")},
                                 "E");
  space.direction = PiecewiseMap(
      2, {piece2("x == y", "0"), piece2("x != y", "1 - x")}, "eta");
  space.curve = PiecewiseMap(
      3, {piece3("x == y", "y"), piece3("x != y", "y + t*(1 - x)")}, "gamma");
  return space;
}

}  // namespace

std::optional<EGeodesicSpace> builtin_space(const std::string& name) {
  if (name == "euclid") return make_euclid();
  if (name == "paper-example-1") return make_example1();
  if (name == "paper-example-2") return make_example2();
  return std::nullopt;
}

std::vector<std::string> builtin_space_names() {
  return {"euclid", "paper-example-1", "paper-example-2"};
}

ValidationReport validate_space(const EGeodesicSpace& space,
                                const std::vector<Scalar>& probes) {
  ValidationReport report;
  auto record = [&](const std::string& check, const Scalar& x, const Scalar& y,
                    std::string detail) {
    report.ok = false;
    report.issues.push_back(ValidationIssue{check, x, y, std::move(detail)});
  };

  std::vector<Scalar> endpoints;
  for (const Scalar& p : probes) {
    endpoints.push_back(p);
    try {
      endpoints.push_back(eval_E(space, p));
    } catch (const EvalError& error) {
      record("total", p, p, error.what());
    }
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  for (const Scalar& x : endpoints) {
    for (const Scalar& y : endpoints) {
      const Scalar args[3] = {x, y, scalar_zero()};
      int index = space.curve.match_index(std::span<const Scalar>(args, 3));
      if (index < 0) {
        record("total", x, y, "curve has no matching piece at t=0");
        continue;
      }
      Scalar at_base;
      try {
        at_base = eval_gamma(space, x, y, scalar_zero());
      } catch (const EvalError& error) {
        record("total", x, y, error.what());
        continue;
      }
      if (at_base != y) {
        record("starts-at-base", x, y,
               "curve(0) = " + to_string(at_base) + ", base = " + to_string(y));
      }
      Scalar direction;
      try {
        direction = eval_eta(space, x, y);
      } catch (const EvalError& error) {
        record("total", x, y, error.what());
        continue;
      }
      // Initial velocity of the matched piece; exact because pieces are
      // polynomial in t.
      const Poly& body = space.curve.pieces()[static_cast<std::size_t>(index)].body;
      Poly velocity = body.derivative(2).substitute(0, x).substitute(1, y).substitute(
          2, scalar_zero());
      auto value = velocity.constant_value();
      if (!value) {
        record("direction", x, y, "curve velocity is not constant at t=0");
      } else if (*value != direction) {
        record("direction", x, y,
               "curve velocity " + to_string(*value) + " differs from direction " +
                   to_string(direction));
      }
    }
  }
  return report;
}

}  // namespace geovex
