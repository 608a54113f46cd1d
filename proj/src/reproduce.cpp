#include "geovex/reproduce.hpp"

#include "geovex/funclass.hpp"
#include "geovex/setcheck.hpp"
#include "geovex/space.hpp"

namespace geovex {

namespace {

NamedCheck pair_check(const std::string& name, const EGeodesicSpace& space,
                      const Region& region, const ScalarFn& fn, FnClass cls,
                      const Scalar& k1, const Scalar& k2) {
  CheckVerdict verdict = check_class_pair(space, region, FnCombo::of(fn), cls, k1, k2);
  NamedCheck check;
  check.name = name;
  check.verdict = verdict_name(verdict.verdict);
  check.witness = verdict.witness;
  check.detail = verdict.detail;
  return check;
}

}  // namespace

ReproduceResult reproduce_example1() {
  ReproduceResult result;
  Report& report = result.report;
  report.command = {"reproduce", "example1"};

  EGeodesicSpace space = *builtin_space("paper-example-1");
  Region set = *builtin_set("example1-A");

  const Scalar k1 = 3;
  const Scalar k2 = 0;
  const Scalar e1 = eval_E(space, k1);  // -1
  const Scalar e2 = eval_E(space, k2);  // 0

  report.notes.push_back("designated pair: k1=3, k2=0 on set [-4,-1) U [1,4]");
  report.notes.push_back("mapped endpoints: E(3)=" + to_string(e1) +
                         ", E(0)=" + to_string(e2));

  // The recorded computation: the curve between the mapped endpoints is
  // gamma(t) = -t; at t=1 it reaches -1, which the set excludes. Every step
  // is re-evaluated here rather than asserted.
  const Scalar t_full = 1;
  const Scalar endpoint = eval_gamma(space, e1, e2, t_full);
  report.notes.push_back("curve samples: gamma(1/2)=" +
                         to_string(eval_gamma(space, e1, e2, Scalar(1) / 2)) +
                         ", gamma(1)=" + to_string(endpoint));

  if (!set.contains(endpoint)) {
    Witness witness;
    witness.k1 = k1;
    witness.k2 = k2;
    witness.t = t_full;
    witness.point = endpoint;
    witness.condition = "membership";
    report.witness = witness;
    report.verdict = "Fails";
    report.mode = "exact";
    report.detail = "full-interval membership fails: gamma(1)=" + to_string(endpoint) +
                    " is outside the set";
    report.checks.push_back({"membership-full-interval (gei) at (3,0)", "Fails",
                             witness, "curve exits the set at t=1"});
  } else {
    report.verdict = "Inconclusive";
    report.detail = "designated endpoint unexpectedly inside the set";
  }

  // Fidelity flags: definitional discrepancies the designated computation
  // itself trips over, found by direct evaluation.
  if (!set.contains(k2)) {
    report.fidelity.push_back(
        "designated pair uses endpoint 0, but 0 lies outside the set");
  }
  Scalar image3 = eval_E(space, Scalar(3));
  if (!set.contains(image3)) {
    report.fidelity.push_back("pair (3,3): curve base E(3)=" + to_string(image3) +
                              " lies outside the set, so even the scale-" +
                              "existence property fails on this pair");
    LocalityResult pair33 = locality_u(space, set, Scalar(3), Scalar(3));
    Witness witness;
    witness.k1 = 3;
    witness.k2 = 3;
    witness.t = Scalar(0);
    witness.point = image3;
    witness.condition = "membership";
    report.checks.push_back({"membership-prefix (glei) at (3,3)",
                             pair33.holds_at_zero ? "Holds" : "Fails", witness,
                             "curve base is outside the set at t=0"});
  }

  result.exit_code = report.verdict == "Fails" ? 1 : 2;
  return result;
}

ReproduceResult reproduce_example2() {
  ReproduceResult result;
  Report& report = result.report;
  report.command = {"reproduce", "example2"};

  EGeodesicSpace space = *builtin_space("paper-example-2");
  Region window = *builtin_set("example2-window");
  ScalarFn fn = *builtin_function("example2-h");

  report.notes.push_back("step function on the window [-1,4]");

  NamedCheck gslec = pair_check("chord-attained-prefix (gslec) at (2,3)", space,
                                window, fn, FnClass::GSLEC, 2, 3);
  NamedCheck gsep = pair_check("chord-full-interval (gsep) at (1,4)", space, window,
                               fn, FnClass::GSEP, 1, 4);
  NamedCheck gslep = pair_check("chord-prefix (gslep) at (3,2)", space, window, fn,
                                FnClass::GSLEP, 3, 2);
  report.checks.push_back(gslec);
  report.checks.push_back(gsep);
  report.checks.push_back(gslep);

  // Headline witness: the attained-prefix refutation at the designated pair.
  report.witness = gslec.witness;
  report.verdict = gslec.verdict;
  report.mode = "exact";
  report.detail =
      "designated pairs refute the attained-prefix and full-interval chord "
      "classes; the prefix chord class fails too (see fidelity)";

  if (gslep.verdict == "Fails" && gslep.witness.has_value()) {
    const Witness& w = *gslep.witness;
    report.fidelity.push_back(
        "the example's recorded prefix-chord claim fails at pair (3,2): lhs=" +
        (w.lhs.has_value() ? to_string(*w.lhs) : std::string("?")) + " > rhs=" +
        (w.rhs.has_value() ? to_string(*w.rhs) : std::string("?")) + " at t=" +
        (w.t.has_value() ? to_string(*w.t) : std::string("?")));
  }

  result.exit_code = report.verdict == "Fails" ? 1 : 2;
  return result;
}

}  // namespace geovex
