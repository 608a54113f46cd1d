#include <doctest.h>

#include <functional>
#include <vector>

#include "geovex/funclass.hpp"
#include "support/refcheck.hpp"

using geovex::FnClass;
using geovex::FnCombo;
using geovex::Interval;
using geovex::ProbePolicy;
using geovex::ProbeSet;
using geovex::Region;
using geovex::Scalar;
using geovex::ScalarFn;
using geovex::Verdict;
using refcheck::rat;

namespace {

const FnClass kAllClasses[] = {FnClass::GEP,    FnClass::GSEP,
                               FnClass::GLEP,   FnClass::GSLEC,
                               FnClass::GSLEP,  FnClass::PREINCAVE,
                               FnClass::GQSLEP, FnClass::GPSLEP};

geovex::CheckVerdict run_class(const geovex::EGeodesicSpace& space,
                               const Region& region, const ScalarFn& fn,
                               FnClass cls) {
  ProbeSet probes = geovex::build_probes(region, space, ProbePolicy{}, {&fn});
  return geovex::check_class(space, region, FnCombo::of(fn), cls, probes);
}

}  // namespace

TEST_CASE("affine functions pass every chord class in the identity space") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-2), rat(2)));
  ScalarFn fn = ScalarFn::affine(rat(1), rat(-3, 2), "affine");

  for (FnClass cls : kAllClasses) {
    CAPTURE(geovex::fn_class_name(cls));
    geovex::CheckVerdict verdict = run_class(*space, box, fn, cls);
    CHECK(verdict.verdict == Verdict::Holds);
  }
}

TEST_CASE("a convex kink passes the preinvex side and fails the concave side") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));
  refcheck::PwAffine vee;
  vee.knots = {rat(-1), rat(0), rat(1)};
  vee.slopes = {rat(-1), rat(1)};
  vee.value_at_first = rat(1);
  ScalarFn fn = vee.to_scalar_fn("vee");

  for (FnClass cls : {FnClass::GSEP, FnClass::GSLEC, FnClass::GSLEP,
                      FnClass::GQSLEP, FnClass::GPSLEP}) {
    CAPTURE(geovex::fn_class_name(cls));
    CHECK(run_class(*space, box, fn, cls).verdict == Verdict::Holds);
  }

  geovex::CheckVerdict concave = run_class(*space, box, fn, FnClass::PREINCAVE);
  REQUIRE(concave.verdict == Verdict::Fails);
  REQUIRE(concave.witness.has_value());
  CHECK(refcheck::witness_reverifies(
      *concave.witness, FnClass::PREINCAVE, refcheck::euclid_ref(),
      [&](const Scalar& x) { return vee(x); }, box));
}

TEST_CASE("a concave kink fails the chord classes with sound witnesses") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));
  refcheck::PwAffine hat;
  hat.knots = {rat(-1), rat(0), rat(1)};
  hat.slopes = {rat(1), rat(-1)};
  hat.value_at_first = rat(0);
  ScalarFn fn = hat.to_scalar_fn("hat");

  for (FnClass cls : {FnClass::GEP, FnClass::GSEP, FnClass::GLEP,
                      FnClass::GSLEC, FnClass::GSLEP}) {
    CAPTURE(geovex::fn_class_name(cls));
    geovex::CheckVerdict verdict = run_class(*space, box, fn, cls);
    REQUIRE(verdict.verdict == Verdict::Fails);
    REQUIRE(verdict.witness.has_value());
    CHECK(refcheck::witness_reverifies(
        *verdict.witness, cls, refcheck::euclid_ref(),
        [&](const Scalar& x) { return hat(x); }, box));
  }

  CHECK(run_class(*space, box, fn, FnClass::PREINCAVE).verdict == Verdict::Holds);
}

TEST_CASE("single-pair checks reproduce the bundled step-function inequalities") {
  auto space = geovex::builtin_space("paper-example-2");
  auto window = geovex::builtin_set("example2-window");
  auto h = geovex::builtin_function("example2-h");
  REQUIRE(space.has_value());
  REQUIRE(window.has_value());
  REQUIRE(h.has_value());
  FnCombo combo = FnCombo::of(*h);

  SUBCASE("attained-prefix chord fails at (2, 3): the curve sits at 3") {
    geovex::CheckVerdict verdict = geovex::check_class_pair(
        *space, *window, combo, FnClass::GSLEC, rat(2), rat(3));
    REQUIRE(verdict.verdict == Verdict::Fails);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->condition == "inequality");
    // lhs is exactly 1 and rhs is exactly 1 - t at the reported t
    REQUIRE(verdict.witness->t.has_value());
    CHECK(*verdict.witness->lhs == rat(1));
    CHECK(*verdict.witness->rhs == Scalar(1 - *verdict.witness->t));
    CHECK(refcheck::witness_reverifies(*verdict.witness, FnClass::GSLEC,
                                       refcheck::collapse_ref(),
                                       refcheck::step_fn, *window));
  }

  SUBCASE("full-interval chord fails at (1, 4): the curve sits at 4") {
    geovex::CheckVerdict verdict = geovex::check_class_pair(
        *space, *window, combo, FnClass::GSEP, rat(1), rat(4));
    REQUIRE(verdict.verdict == Verdict::Fails);
    REQUIRE(verdict.witness.has_value());
    REQUIRE(verdict.witness->t.has_value());
    CHECK(*verdict.witness->lhs == rat(1));
    CHECK(*verdict.witness->rhs == Scalar(1 - *verdict.witness->t));
    CHECK(refcheck::witness_reverifies(*verdict.witness, FnClass::GSEP,
                                       refcheck::collapse_ref(),
                                       refcheck::step_fn, *window));
  }

  SUBCASE("prefix chord fails at (3, 2) despite the bundle's note") {
    geovex::CheckVerdict verdict = geovex::check_class_pair(
        *space, *window, combo, FnClass::GSLEP, rat(3), rat(2));
    REQUIRE(verdict.verdict == Verdict::Fails);
    REQUIRE(verdict.witness.has_value());
    // the mapped base is 1, so gamma(t) = 1 - 2t and h there = 2t;
    // chord = t*h(3) + (1-t)*h(2) = t; 2t > t for every t > 0
    REQUIRE(verdict.witness->t.has_value());
    Scalar t = *verdict.witness->t;
    CHECK(*verdict.witness->lhs == Scalar(2 * t));
    CHECK(*verdict.witness->rhs == t);
    CHECK(refcheck::witness_reverifies(*verdict.witness, FnClass::GSLEP,
                                       refcheck::collapse_ref(),
                                       refcheck::step_fn, *window));
  }
}

TEST_CASE("chord-class implications hold on shared probe sets") {
  // full-interval implies prefix; attained-prefix implies prefix; prefix
  // implies both the level-type and the margin-type variants
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  refcheck::Rng rng(909090);

  int verdicts_seen = 0;
  for (int round = 0; round < 12; ++round) {
    Scalar lo = rat(rng.integer(-4, 0));
    Scalar hi = Scalar(lo + rat(rng.integer(1, 4)));
    Region box = Region::interval(Interval::closed(lo, hi));
    refcheck::PwAffine fn = rng.coin()
                                ? refcheck::random_convex(rng, lo, hi, 3)
                                : refcheck::random_pw_affine(rng, lo, hi, 3);
    ScalarFn engine_fn = fn.to_scalar_fn("sample");
    ProbeSet probes =
        geovex::build_probes(box, *euclid, ProbePolicy{}, {&engine_fn});

    auto verdict_of = [&](FnClass cls) {
      return geovex::check_class(*euclid, box, FnCombo::of(engine_fn), cls, probes)
          .verdict;
    };
    Verdict gsep = verdict_of(FnClass::GSEP);
    Verdict gslec = verdict_of(FnClass::GSLEC);
    Verdict gslep = verdict_of(FnClass::GSLEP);
    Verdict gqslep = verdict_of(FnClass::GQSLEP);
    Verdict gpslep = verdict_of(FnClass::GPSLEP);
    ++verdicts_seen;

    CAPTURE(round);
    if (gsep == Verdict::Holds) CHECK(gslep == Verdict::Holds);
    if (gslec == Verdict::Holds) CHECK(gslep == Verdict::Holds);
    if (gslep == Verdict::Holds) {
      CHECK(gqslep == Verdict::Holds);
      CHECK(gpslep == Verdict::Holds);
    }
  }
  CHECK(verdicts_seen == 12);
}

TEST_CASE("every failing verdict over a random family re-verifies") {
  auto euclid = geovex::builtin_space("euclid");
  REQUIRE(euclid.has_value());
  refcheck::Rng rng(131313);

  int failures_checked = 0;
  for (int round = 0; round < 10; ++round) {
    Region box = Region::interval(Interval::closed(rat(-2), rat(2)));
    refcheck::PwAffine fn = refcheck::random_pw_affine(rng, rat(-2), rat(2), 4);
    ScalarFn engine_fn = fn.to_scalar_fn("sample");
    ProbeSet probes =
        geovex::build_probes(box, *euclid, ProbePolicy{}, {&engine_fn});

    for (FnClass cls : kAllClasses) {
      geovex::CheckVerdict verdict =
          geovex::check_class(*euclid, box, FnCombo::of(engine_fn), cls, probes);
      if (verdict.verdict != Verdict::Fails) continue;
      REQUIRE(verdict.witness.has_value());
      CAPTURE(round);
      CAPTURE(geovex::fn_class_name(cls));
      CAPTURE(verdict.witness->condition);
      CHECK(refcheck::witness_reverifies(
          *verdict.witness, cls, refcheck::euclid_ref(),
          [&](const Scalar& x) { return fn(x); }, box));
      ++failures_checked;
    }
  }
  // the family is spiky enough that failures actually occurred
  CHECK(failures_checked > 10);
}

TEST_CASE("holds verdicts carry per-pair locality certificates") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(0), rat(1)));
  ScalarFn fn = ScalarFn::affine(rat(0), rat(1), "identity");
  geovex::CheckVerdict verdict = run_class(*space, box, fn, FnClass::GSLEP);
  REQUIRE(verdict.verdict == Verdict::Holds);
  REQUIRE_FALSE(verdict.locality.entries.empty());
  for (const auto& entry : verdict.locality.entries) {
    CHECK(entry.u > 0);
    CHECK(entry.v > 0);
    CHECK(entry.v <= entry.u);
  }
}

TEST_CASE("margin certificates accompany the margin class") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(0), rat(1)));
  ScalarFn fn = ScalarFn::affine(rat(0), rat(1), "identity");
  geovex::CheckVerdict verdict = run_class(*space, box, fn, FnClass::GPSLEP);
  REQUIRE(verdict.verdict == Verdict::Holds);
  bool any_premise_pair = false;
  for (const auto& entry : verdict.locality.entries) {
    if (entry.w.has_value()) {
      any_premise_pair = true;
      CHECK(*entry.w > 0);
    }
  }
  CHECK(any_premise_pair);
}

TEST_CASE("level sets of the identity are exact prefixes") {
  Region box = Region::interval(Interval::closed(rat(0), rat(1)));
  ScalarFn fn = ScalarFn::affine(rat(0), rat(1), "identity");
  Region level = geovex::level_set(fn, box, rat(1, 2));
  CHECK(level == Region::interval(Interval::closed(rat(0), rat(1, 2))));

  Region all = geovex::level_set(fn, box, rat(2));
  CHECK(all == box);
  Region none = geovex::level_set(fn, box, rat(-1));
  CHECK(none.empty());
}

TEST_CASE("level sets of the bundled step function") {
  auto h = geovex::builtin_function("example2-h");
  auto window = geovex::builtin_set("example2-window");
  REQUIRE(h.has_value());
  REQUIRE(window.has_value());
  // h <= 1/2 on [-1, 4]: 1 - m <= 1/2 on [1/2, 1], 0 on (1, 2], and the
  // (2, inf) part sits at 1 > 1/2
  Region level = geovex::level_set(*h, *window, rat(1, 2));
  CHECK(level == Region::interval(Interval::closed(rat(1, 2), rat(2))));
  for (const Scalar& inside : {rat(1, 2), rat(1), rat(3, 2), rat(2)}) {
    CHECK(level.contains(inside));
  }
  for (const Scalar& outside : {rat(0), rat(49, 100), rat(5, 2), rat(3)}) {
    CHECK_FALSE(level.contains(outside));
  }
}

TEST_CASE("structural crosschecks find nothing on a convex sample") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));
  refcheck::PwAffine vee;
  vee.knots = {rat(-1), rat(0), rat(1)};
  vee.slopes = {rat(-1), rat(1)};
  vee.value_at_first = rat(1);
  ScalarFn fn = vee.to_scalar_fn("vee");
  ProbeSet probes = geovex::build_probes(box, *space, ProbePolicy{}, {&fn});

  for (geovex::TheoremCheck check :
       {geovex::TheoremCheck::EPIGRAPH, geovex::TheoremCheck::LEVELSET,
        geovex::TheoremCheck::GLEP_CHAR, geovex::TheoremCheck::ALPHA_BETA}) {
    CAPTURE(geovex::theorem_check_name(check));
    geovex::ConsistencyReport report =
        geovex::crosscheck_theorem(check, *space, box, fn, probes);
    for (const auto& finding : report.findings) CAPTURE(finding.detail);
    CHECK(report.consistent());
  }
}

TEST_CASE("structural crosschecks find nothing on the bundled step function") {
  auto space = geovex::builtin_space("paper-example-2");
  auto window = geovex::builtin_set("example2-window");
  auto h = geovex::builtin_function("example2-h");
  REQUIRE(space.has_value());
  REQUIRE(window.has_value());
  REQUIRE(h.has_value());
  ProbeSet probes =
      geovex::build_probes(*window, *space, ProbePolicy{}, {&*h});

  for (geovex::TheoremCheck check :
       {geovex::TheoremCheck::EPIGRAPH, geovex::TheoremCheck::LEVELSET}) {
    CAPTURE(geovex::theorem_check_name(check));
    geovex::ConsistencyReport report =
        geovex::crosscheck_theorem(check, *space, *window, *h, probes);
    for (const auto& finding : report.findings) CAPTURE(finding.detail);
    CHECK(report.consistent());
  }
}
