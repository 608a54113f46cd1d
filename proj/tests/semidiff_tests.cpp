#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "geovex/errors.hpp"
#include "geovex/semidiff.hpp"
#include "support/refcheck.hpp"

using geovex::FnCombo;
using geovex::Interval;
using geovex::Region;
using geovex::Scalar;
using geovex::ScalarFn;
using geovex::SdKind;
using geovex::SdOrientation;
using geovex::SemiDerivative;
using refcheck::rat;

TEST_CASE("affine composite slope is exact") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  // f(x) = 3x - 1 along gamma(t) = base + t*(target - base):
  // d/dt f(gamma(t)) = 3 * (target - base)
  ScalarFn fn = ScalarFn::affine(rat(-1), rat(3), "3x-1");
  SemiDerivative d =
      geovex::semiderivative(fn, *euclid, rat(1, 2), rat(2));
  REQUIRE(d.kind == SdKind::Finite);
  CHECK(d.exact);
  CHECK(*d.value == rat(9, 2));

  SemiDerivative backwards =
      geovex::semiderivative(fn, *euclid, rat(1, 2), rat(-1));
  REQUIRE(backwards.kind == SdKind::Finite);
  CHECK(*backwards.value == rat(-9, 2));
}

TEST_CASE("kinks differentiate one-sidedly") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  refcheck::PwAffine vee;
  vee.knots = {rat(-1), rat(0), rat(1)};
  vee.slopes = {rat(-1), rat(1)};
  vee.value_at_first = rat(1);
  ScalarFn fn = vee.to_scalar_fn("vee");

  // base at the kink: the right derivative follows the direction of travel
  SemiDerivative right = geovex::semiderivative(fn, *euclid, rat(0), rat(1));
  REQUIRE(right.kind == SdKind::Finite);
  CHECK(*right.value == rat(1));
  SemiDerivative left = geovex::semiderivative(fn, *euclid, rat(0), rat(-1));
  REQUIRE(left.kind == SdKind::Finite);
  CHECK(*left.value == rat(1));  // slope -1 times direction -1
}

TEST_CASE("numeric schedule agrees with the exact value") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  refcheck::Rng rng(606060);

  for (int round = 0; round < 40; ++round) {
    refcheck::PwAffine fn = refcheck::random_pw_affine(rng, rat(-2), rat(2), 3);
    ScalarFn engine_fn = fn.to_scalar_fn("sample");
    Scalar base = rat(rng.integer(-16, 16), 8);
    Scalar target = rat(rng.integer(-16, 16), 8);
    FnCombo combo = FnCombo::of(engine_fn);

    SemiDerivative exact = geovex::semiderivative(combo, *euclid, base, target);
    SemiDerivative numeric =
        geovex::semiderivative_numeric(combo, *euclid, base, target);
    REQUIRE(exact.kind == SdKind::Finite);
    REQUIRE(exact.exact);
    REQUIRE(numeric.kind == SdKind::Finite);
    CAPTURE(round);
    CHECK(std::abs(exact.as_double() - *numeric.approx) <= 1e-8);
  }
}

TEST_CASE("positive scaling passes through exactly") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  refcheck::Rng rng(17);
  refcheck::PwAffine fn = refcheck::random_pw_affine(rng, rat(-2), rat(2), 3);
  ScalarFn engine_fn = fn.to_scalar_fn("sample");

  FnCombo plain = FnCombo::of(engine_fn);
  FnCombo scaled;
  scaled.add(rat(7, 3), engine_fn);

  SemiDerivative d1 = geovex::semiderivative(plain, *euclid, rat(1, 4), rat(2));
  SemiDerivative d2 = geovex::semiderivative(scaled, *euclid, rat(1, 4), rat(2));
  REQUIRE(d1.kind == SdKind::Finite);
  REQUIRE(d2.kind == SdKind::Finite);
  CHECK(*d2.value == Scalar(rat(7, 3) * *d1.value));
}

TEST_CASE("the derivative base must be fixed by the point map") {
  auto space = geovex::builtin_space("paper-example-1");
  REQUIRE(space.has_value());
  ScalarFn fn = ScalarFn::affine(rat(0), rat(1), "identity");
  // the point map sends 3 to -1, so 3 is not a valid base
  CHECK_THROWS_AS(geovex::semiderivative(fn, *space, rat(3), rat(1)),
                  geovex::PremiseError);
  try {
    geovex::semiderivative(fn, *space, rat(3), rat(1));
  } catch (const geovex::PremiseError& error) {
    CHECK(error.code() == "base-not-fixed");
  }
}

TEST_CASE("the reversed orientation of the step function diverges upward") {
  auto space = geovex::builtin_space("paper-example-2");
  auto h = geovex::builtin_function("example2-h");
  REQUIRE(space.has_value());
  REQUIRE(h.has_value());

  // curve from the image of 3 toward the base 1/2: the function value near
  // the start stays 1 while the subtracted value is h(1/2) = 1/2, so the
  // quotient grows without bound
  SemiDerivative d = geovex::semiderivative(*h, *space, rat(1, 2), rat(3),
                                            SdOrientation::ImageToBase);
  CHECK(d.kind == SdKind::PlusInfinity);
  CHECK_FALSE(d.value.has_value());

  // the numeric schedule must not call it finite either
  SemiDerivative numeric = geovex::semiderivative_numeric(
      FnCombo::of(*h), *space, rat(1, 2), rat(3), SdOrientation::ImageToBase);
  CHECK(numeric.kind != SdKind::Finite);

  // the default orientation anchors the quotient at the base instead and
  // the composite is an exact ramp with slope 2
  SemiDerivative forward = geovex::semiderivative(*h, *space, rat(1, 2), rat(3));
  REQUIRE(forward.kind == SdKind::Finite);
  CHECK(*forward.value == rat(2));
}

TEST_CASE("black-box oscillation is reported divergent, not finite") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  ScalarFn wobble = ScalarFn::blackbox(
      [](double x) { return x == 0.0 ? 0.0 : x * std::sin(1.0 / x); },
      "wobble");
  SemiDerivative d = geovex::semiderivative_numeric(FnCombo::of(wobble), *euclid,
                                                    rat(0), rat(1));
  CHECK(d.kind == SdKind::Divergent);
  CHECK_FALSE(d.exact);
  CHECK(d.samples_used > 0);
}

TEST_CASE("derivative-link screens pass on a convex sample") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));
  refcheck::PwAffine vee;
  vee.knots = {rat(-1), rat(0), rat(1)};
  vee.slopes = {rat(-1), rat(1)};
  vee.value_at_first = rat(1);
  ScalarFn fn = vee.to_scalar_fn("vee");
  geovex::ProbeSet probes =
      geovex::build_probes(box, *euclid, geovex::ProbePolicy{}, {&fn});

  geovex::ConsistencyReport preinvex_link = geovex::check_derivative_links(
      FnCombo::of(fn), *euclid, rat(0), probes, geovex::DerivativeLink::PREINVEX);
  for (const auto& finding : preinvex_link.findings) CAPTURE(finding.detail);
  CHECK(preinvex_link.consistent());

  geovex::ConsistencyReport quasi_link = geovex::check_derivative_links(
      FnCombo::of(fn), *euclid, rat(0), probes, geovex::DerivativeLink::QUASI);
  CHECK(quasi_link.consistent());
}

TEST_CASE("derivative-link screens flag a concave kink") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));
  refcheck::PwAffine hat;
  hat.knots = {rat(-1), rat(0), rat(1)};
  hat.slopes = {rat(1), rat(-1)};
  hat.value_at_first = rat(0);
  ScalarFn fn = hat.to_scalar_fn("hat");
  geovex::ProbeSet probes =
      geovex::build_probes(box, *euclid, geovex::ProbePolicy{}, {&fn});

  // from a base on the rising flank, the curve toward k = 1 crosses the
  // peak: the initial derivative is +3/2 but hat(1) - hat(-1/2) = -1/2,
  // violating the preinvex inequality; the concave-side link holds
  geovex::ConsistencyReport preinvex_link = geovex::check_derivative_links(
      FnCombo::of(fn), *euclid, rat(-1, 2), probes,
      geovex::DerivativeLink::PREINVEX);
  CHECK_FALSE(preinvex_link.consistent());

  geovex::ConsistencyReport preincave_link = geovex::check_derivative_links(
      FnCombo::of(fn), *euclid, rat(-1, 2), probes,
      geovex::DerivativeLink::PREINCAVE);
  CHECK(preincave_link.consistent());
}
