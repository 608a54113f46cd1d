#include <doctest.h>

#include <vector>

#include "geovex/setcheck.hpp"
#include "support/refcheck.hpp"

using geovex::Interval;
using geovex::ProbePolicy;
using geovex::ProbeSet;
using geovex::Region;
using geovex::Scalar;
using geovex::SetProperty;
using geovex::Verdict;
using refcheck::rat;

namespace {

ProbeSet probes_for(const Region& region, const geovex::EGeodesicSpace& space) {
  return geovex::build_probes(region, space, ProbePolicy{});
}

}  // namespace

TEST_CASE("closed interval in the identity space holds every set property") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(2)));
  ProbeSet probes = probes_for(box, *space);

  for (SetProperty property :
       {SetProperty::GEI, SetProperty::GLEI, SetProperty::STARSHAPED}) {
    CAPTURE(geovex::set_property_name(property));
    geovex::CheckVerdict verdict =
        geovex::check_set_property(*space, box, property, probes);
    CHECK(verdict.verdict == Verdict::Holds);
    CHECK_FALSE(verdict.locality.entries.empty());
  }
}

TEST_CASE("full-interval membership implies the scaled variant with unit scale") {
  // on any one probe set: property-wide Holds for the full-interval check
  // forces Holds for the positive-prefix check, and every certificate
  // entry carries u = 1
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(0), rat(1)));
  ProbeSet probes = probes_for(box, *space);

  geovex::CheckVerdict full =
      geovex::check_set_property(*space, box, SetProperty::GEI, probes);
  REQUIRE(full.verdict == Verdict::Holds);
  for (const auto& entry : full.locality.entries) CHECK(entry.u == rat(1));

  geovex::CheckVerdict scaled =
      geovex::check_set_property(*space, box, SetProperty::GLEI, probes);
  CHECK(scaled.verdict == Verdict::Holds);
}

TEST_CASE("the split carrier fails full-interval membership with a sound witness") {
  auto space = geovex::builtin_space("paper-example-1");
  auto region = geovex::builtin_set("example1-A");
  REQUIRE(space.has_value());
  REQUIRE(region.has_value());
  ProbeSet probes = probes_for(*region, *space);

  geovex::CheckVerdict verdict =
      geovex::check_set_property(*space, *region, SetProperty::GEI, probes);
  REQUIRE(verdict.verdict == Verdict::Fails);
  REQUIRE(verdict.witness.has_value());
  CHECK(refcheck::set_witness_reverifies(*verdict.witness, refcheck::split_ref(),
                                         *region));

  // the scaled variant fails as well: the point map sends members to -1,
  // which the set does not contain, so some curves start outside
  geovex::CheckVerdict scaled =
      geovex::check_set_property(*space, *region, SetProperty::GLEI, probes);
  REQUIRE(scaled.verdict == Verdict::Fails);
  REQUIRE(scaled.witness.has_value());
  CHECK(refcheck::set_witness_reverifies(*scaled.witness, refcheck::split_ref(),
                                         *region));
}

TEST_CASE("witnesses are lexicographically smallest") {
  auto space = geovex::builtin_space("paper-example-1");
  auto region = geovex::builtin_set("example1-A");
  REQUIRE(space.has_value());
  REQUIRE(region.has_value());
  ProbeSet probes = probes_for(*region, *space);

  geovex::CheckVerdict verdict =
      geovex::check_set_property(*space, *region, SetProperty::GEI, probes);
  REQUIRE(verdict.witness.has_value());
  // -4 is the smallest probe point and the pair (-4, -4) already fails
  // (its mapped base is -1, outside the set), so nothing smaller exists
  CHECK(verdict.witness->k1 == rat(-4));
  CHECK(verdict.witness->k2 == rat(-4));
  CHECK(verdict.witness->t == rat(0));
}

TEST_CASE("endpoint openness is invisible to chords between members") {
  // pair endpoints are always members, and on the straight-line space the
  // whole chord between two members of an interval stays between them, so
  // [0, 1) passes every set property in full: the open end never hosts a
  // curve point because no pair reaches it
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region half = Region::interval(Interval{rat(0), rat(1), true, false});
  ProbeSet probes = probes_for(half, *space);
  for (const Scalar& point : probes.points) {
    CHECK(point < rat(1));  // the open end must not be probed as a member
  }

  for (SetProperty property :
       {SetProperty::GLEI, SetProperty::GEI, SetProperty::STARSHAPED}) {
    geovex::CheckVerdict verdict =
        geovex::check_set_property(*space, half, property, probes);
    CHECK(verdict.verdict == Verdict::Holds);
  }
}

TEST_CASE("starshaped check demands the attained maximum") {
  // region [0,1] minus the midpoint: curves crossing the hole have a
  // positive but capped scale; the cap is approached yet never attained
  // for pairs that straddle 1/2, so the attained-scale check must fail
  // while the existence check succeeds on pairs inside one half.
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region holed = Region::interval(Interval::closed(rat(0), rat(1)))
                     .subtract(Region::point(rat(1, 2)));
  ProbeSet probes = probes_for(holed, *space);

  geovex::CheckVerdict star =
      geovex::check_set_property(*space, holed, SetProperty::STARSHAPED, probes);
  REQUIRE(star.verdict == Verdict::Fails);
  REQUIRE(star.witness.has_value());
  CHECK(refcheck::set_witness_reverifies(*star.witness, refcheck::euclid_ref(),
                                         holed));
}

TEST_CASE("probe refinement never turns a failure into a pass") {
  auto space = geovex::builtin_space("paper-example-1");
  auto region = geovex::builtin_set("example1-A");
  REQUIRE(space.has_value());
  REQUIRE(region.has_value());

  ProbePolicy coarse;
  coarse.grid_step = rat(1, 2);
  ProbePolicy fine;
  fine.grid_step = rat(1, 32);

  for (SetProperty property : {SetProperty::GEI, SetProperty::GLEI}) {
    CAPTURE(geovex::set_property_name(property));
    geovex::CheckVerdict at_coarse = geovex::check_set_property(
        *space, *region, property, geovex::build_probes(*region, *space, coarse));
    geovex::CheckVerdict at_fine = geovex::check_set_property(
        *space, *region, property, geovex::build_probes(*region, *space, fine));
    if (at_coarse.verdict == Verdict::Fails) {
      CHECK(at_fine.verdict == Verdict::Fails);
    }
  }
}

TEST_CASE("epigraph-style product condition") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(-1), rat(1)));

  SUBCASE("convex function over a box passes") {
    // f(x) = |x| via two pieces; epigraph slices are intervals
    refcheck::PwAffine vee;
    vee.knots = {rat(-1), rat(0), rat(1)};
    vee.slopes = {rat(-1), rat(1)};
    vee.value_at_first = rat(1);
    geovex::ScalarFn fn = vee.to_scalar_fn("vee");
    ProbeSet probes = geovex::build_probes(box, *space, ProbePolicy{}, {&fn});
    geovex::CheckVerdict verdict =
        geovex::check_product_glei(*space, box, fn, rat(3), probes);
    CHECK(verdict.verdict == Verdict::Holds);
  }

  SUBCASE("concave kink fails: chords over the peak leave the epigraph") {
    refcheck::PwAffine hat;
    hat.knots = {rat(-1), rat(0), rat(1)};
    hat.slopes = {rat(1), rat(-1)};
    hat.value_at_first = rat(0);
    geovex::ScalarFn fn = hat.to_scalar_fn("hat");
    ProbeSet probes = geovex::build_probes(box, *space, ProbePolicy{}, {&fn});
    geovex::CheckVerdict verdict =
        geovex::check_product_glei(*space, box, fn, rat(3), probes);
    REQUIRE(verdict.verdict == Verdict::Fails);
    REQUIRE(verdict.witness.has_value());
    // the recorded tuple re-verifies: the function value at the curve point
    // really exceeds the interpolated height it was compared against
    REQUIRE(verdict.witness->point.has_value());
    REQUIRE(verdict.witness->lhs.has_value());
    REQUIRE(verdict.witness->rhs.has_value());
    CHECK(verdict.witness->condition == "epigraph-inequality");
    CHECK(*verdict.witness->lhs == hat(*verdict.witness->point));
    CHECK(*verdict.witness->lhs > *verdict.witness->rhs);
  }
}

TEST_CASE("product check rejects the plain set entry point") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  Region box = Region::interval(Interval::closed(rat(0), rat(1)));
  ProbeSet probes = probes_for(box, *space);
  CHECK_THROWS_AS(geovex::check_set_property(*space, box,
                                             SetProperty::GLEI_PRODUCT, probes),
                  geovex::ConfigError);
}
