#include <doctest.h>

#include <vector>

#include "geovex/errors.hpp"
#include "geovex/region.hpp"
#include "geovex/setcheck.hpp"
#include "geovex/space.hpp"
#include "geovex/vfp.hpp"
#include "support/refcheck.hpp"

using geovex::Interval;
using geovex::Region;
using geovex::Scalar;
using refcheck::rat;

TEST_CASE("interval membership honors open and closed ends") {
  Interval half{rat(-4), rat(-1), true, false};  // [-4, -1)
  CHECK(half.contains(rat(-4)));
  CHECK(half.contains(rat(-2)));
  CHECK_FALSE(half.contains(rat(-1)));
  CHECK_FALSE(half.contains(rat(-4001, 1000)));

  CHECK(Interval::open(rat(0), rat(0)).empty());
  CHECK(Interval::point(rat(3)).is_singleton());
  CHECK(Interval{rat(2), rat(1), true, true}.empty());
}

TEST_CASE("region normalization merges touching parts") {
  Region merged(
      {Interval::closed(rat(0), rat(1)), Interval::closed(rat(1), rat(2))});
  CHECK(merged.parts().size() == 1);
  CHECK(merged == Region::interval(Interval::closed(rat(0), rat(2))));

  // [0,1) and (1,2] stay apart: 1 is missing
  Region split({Interval{rat(0), rat(1), true, false},
                Interval{rat(1), rat(2), false, true}});
  CHECK(split.parts().size() == 2);
  CHECK_FALSE(split.contains(rat(1)));

  // adding the point closes the gap
  Region closed = split.unite(Region::point(rat(1)));
  CHECK(closed.parts().size() == 1);
}

TEST_CASE("region set algebra agrees with pointwise membership") {
  refcheck::Rng rng(77001);
  Region a({Interval{rat(-4), rat(-1), true, false},
            Interval::closed(rat(1), rat(4))});
  Region b({Interval::closed(rat(-2), rat(2))});

  Region join = a.unite(b);
  Region meet = a.intersect(b);
  Region diff = a.subtract(b);

  for (int i = 0; i < 300; ++i) {
    Scalar p = rng.rational(6, 16);
    CAPTURE(geovex::to_string(p));
    bool in_a = a.contains(p);
    bool in_b = b.contains(p);
    CHECK(join.contains(p) == (in_a || in_b));
    CHECK(meet.contains(p) == (in_a && in_b));
    CHECK(diff.contains(p) == (in_a && !in_b));
  }
}

TEST_CASE("region endpoints and rendering") {
  Region a({Interval{rat(-4), rat(-1), true, false},
            Interval::closed(rat(1), rat(4))});
  std::vector<Scalar> ends = a.endpoints();
  REQUIRE(ends.size() == 4);
  CHECK(ends[0] == rat(-4));
  CHECK(ends[3] == rat(4));
  CHECK(a.lower_bound() == rat(-4));
  CHECK(a.upper_bound() == rat(4));
  CHECK(a.to_string() == "[-4, -1) u [1, 4]");
}

TEST_CASE("first-match piece order is load-bearing") {
  // Two overlapping branches: on the overlap the earlier one must answer.
  using geovex::Atom;
  using geovex::Guard;
  using geovex::MapPiece;
  using geovex::PiecewiseMap;
  using geovex::Poly;
  using geovex::RelOp;

  Atom nonpos{Poly::variable(0), RelOp::Le};
  Atom nonneg{Poly::variable(0), RelOp::Ge};
  MapPiece low{Guard::single(nonpos), Poly::constant(rat(-1))};
  MapPiece high{Guard::single(nonneg), Poly::constant(rat(1))};

  PiecewiseMap low_first(1, {low, high});
  PiecewiseMap high_first(1, {high, low});
  const Scalar zero[1] = {rat(0)};
  CHECK(low_first.eval(std::span<const Scalar>(zero, 1)) == rat(-1));
  CHECK(high_first.eval(std::span<const Scalar>(zero, 1)) == rat(1));
  CHECK(low_first.match_index(std::span<const Scalar>(zero, 1)) == 0);

  const Scalar outside[1] = {rat(1, 2)};
  PiecewiseMap gap(1, {low});
  CHECK_THROWS_AS(gap.eval(std::span<const Scalar>(outside, 1)), geovex::EvalError);
  CHECK(gap.match_index(std::span<const Scalar>(outside, 1)) == -1);
}

TEST_CASE("square-clamp space matches the reference formulas") {
  auto space = geovex::builtin_space("paper-example-1");
  REQUIRE(space.has_value());
  refcheck::SpaceRef ref = refcheck::split_ref();
  refcheck::Rng rng(55011);

  // boundary exactness of the point map
  CHECK(geovex::eval_E(*space, rat(2)) == rat(4));
  CHECK(geovex::eval_E(*space, rat(2001, 1000)) == rat(-1));
  CHECK(geovex::eval_E(*space, rat(-2)) == rat(4));
  CHECK(geovex::eval_E(*space, rat(3)) == rat(-1));

  for (int i = 0; i < 250; ++i) {
    Scalar x = rng.rational(5, 8);
    Scalar y = rng.rational(5, 8);
    Scalar t = rat(rng.integer(0, 16), 16);
    CAPTURE(geovex::to_string(x));
    CAPTURE(geovex::to_string(y));
    CAPTURE(geovex::to_string(t));
    CHECK(geovex::eval_E(*space, x) == ref.E(x));
    CHECK(geovex::eval_gamma(*space, x, y, t) == ref.gamma(x, y, t));
  }
}

TEST_CASE("square-clamp curve reproduces the tie-broken branch at the origin pair") {
  // gamma(-1, 0, t): both the nonpositive-pair branch and the
  // toward-positive branch admit (x, y) = (-1, 0); declaration order picks
  // the first, so the curve is -t, not t.
  auto space = geovex::builtin_space("paper-example-1");
  REQUIRE(space.has_value());
  for (int k = 0; k <= 4; ++k) {
    Scalar t = rat(k, 4);
    CHECK(geovex::eval_gamma(*space, rat(-1), rat(0), t) == Scalar(-t));
  }
}

TEST_CASE("collapse space matches the reference formulas") {
  auto space = geovex::builtin_space("paper-example-2");
  REQUIRE(space.has_value());
  refcheck::SpaceRef ref = refcheck::collapse_ref();
  refcheck::Rng rng(55012);

  CHECK(geovex::eval_E(*space, rat(-3)) == rat(0));
  CHECK(geovex::eval_E(*space, rat(3, 2)) == rat(1));
  CHECK(geovex::eval_E(*space, rat(2)) == rat(1));
  CHECK(geovex::eval_E(*space, rat(5, 2)) == rat(5, 2));
  CHECK(geovex::eval_E(*space, rat(1, 2)) == rat(1, 2));

  for (int i = 0; i < 250; ++i) {
    Scalar x = rng.rational(5, 8);
    Scalar y = rng.rational(5, 8);
    Scalar t = rat(rng.integer(0, 16), 16);
    CHECK(geovex::eval_E(*space, x) == ref.E(x));
    CHECK(geovex::eval_gamma(*space, x, y, t) == ref.gamma(x, y, t));
  }
}

TEST_CASE("bundled step function matches its reference") {
  auto h = geovex::builtin_function("example2-h");
  REQUIRE(h.has_value());
  refcheck::Rng rng(55013);
  CHECK(h->eval(rat(1)) == rat(0));
  CHECK(h->eval(rat(2)) == rat(0));
  CHECK(h->eval(rat(2001, 1000)) == rat(1));
  CHECK(h->eval(rat(0)) == rat(1));
  CHECK(h->eval(rat(-1)) == rat(3));
  for (int i = 0; i < 250; ++i) {
    Scalar x = rng.rational(5, 8);
    CAPTURE(geovex::to_string(x));
    CHECK(h->eval(x) == refcheck::step_fn(x));
  }
}

TEST_CASE("curve parameter domain is enforced") {
  auto space = geovex::builtin_space("euclid");
  REQUIRE(space.has_value());
  CHECK_THROWS_AS(geovex::eval_gamma(*space, rat(1), rat(0), rat(-1, 16)),
                  geovex::EvalError);
  CHECK_THROWS_AS(geovex::eval_gamma(*space, rat(1), rat(0), rat(17, 16)),
                  geovex::EvalError);
  CHECK(geovex::eval_gamma(*space, rat(1), rat(0), rat(1)) == rat(1));
}

TEST_CASE("space validation accepts the bundled spaces on their windows") {
  std::vector<Scalar> probes;
  for (int k = -8; k <= 8; ++k) probes.push_back(rat(k, 2));
  for (const char* name : {"euclid", "paper-example-2"}) {
    CAPTURE(name);
    auto space = geovex::builtin_space(name);
    REQUIRE(space.has_value());
    geovex::ValidationReport report = geovex::validate_space(*space, probes);
    for (const auto& issue : report.issues) CAPTURE(issue.detail);
    CHECK(report.ok);
  }
}

TEST_CASE("bundled sets") {
  auto a = geovex::builtin_set("example1-A");
  REQUIRE(a.has_value());
  CHECK(a->contains(rat(-4)));
  CHECK_FALSE(a->contains(rat(-1)));
  CHECK(a->contains(rat(4)));
  CHECK_FALSE(a->contains(rat(0)));

  auto window = geovex::builtin_set("example2-window");
  REQUIRE(window.has_value());
  CHECK(window->contains(rat(-1)));
  CHECK(window->contains(rat(4)));
  CHECK_FALSE(window->contains(rat(9, 2)));

  CHECK_FALSE(geovex::builtin_set("no-such-set").has_value());
}

TEST_CASE("builtin catalogs are self-consistent") {
  // every listed name resolves through its own lookup
  for (const auto& name : geovex::builtin_space_names()) {
    CHECK(geovex::builtin_space(name).has_value());
  }
  for (const auto& name : geovex::builtin_set_names()) {
    CHECK(geovex::builtin_set(name).has_value());
  }
  for (const auto& name : geovex::builtin_function_names()) {
    CHECK(geovex::builtin_function(name).has_value());
  }
  for (const auto& name : geovex::builtin_instance_names()) {
    CHECK(geovex::builtin_instance(name).has_value());
  }
}
