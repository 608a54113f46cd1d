#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geovex/cli.hpp"
#include "geovex/report.hpp"
#include "support/refcheck.hpp"

using geovex::NamedCheck;
using geovex::Report;
using geovex::ReportFormat;
using geovex::Witness;
using refcheck::rat;

namespace {

Report full_report() {
  Report report;
  report.command = {"check", "fn", "--space", "demo"};
  report.verdict = "Fails";
  report.mode = "exact";
  Witness w;
  w.k1 = rat(3);
  w.k2 = rat(0);
  w.t = rat(1);
  w.point = rat(-1);
  w.lhs = rat(2);
  w.rhs = rat(1);
  w.condition = "inequality";
  report.witness = w;
  report.locality.entries.push_back({rat(0), rat(1), rat(1), rat(1, 2), rat(3)});
  report.locality.entries.push_back({rat(1), rat(0), rat(1, 4), rat(1, 8), std::nullopt});
  report.checks.push_back({"first-check", "Holds", std::nullopt, "all good"});
  report.checks.push_back({"second-check", "Fails", w, ""});
  report.fidelity = {"documented value disagrees at 0"};
  report.probe_count = 19;
  report.probe_step = rat(1, 16);
  report.values.emplace_back("pairs", "361");
  report.notes = {"note one", "note two"};
  report.warnings = {"careful"};
  report.detail = "the long story";
  return report;
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = geovex::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report emission is deterministic in both formats") {
  Report report = full_report();
  for (ReportFormat format : {ReportFormat::Text, ReportFormat::Structured}) {
    std::string a = geovex::emit_report(report, format);
    std::string b = geovex::emit_report(report, format);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
    CHECK(a.back() == '\n');
  }
}

TEST_CASE("the text format renders every populated block") {
  std::string text = geovex::emit_report(full_report(), ReportFormat::Text);
  CHECK(text.find("command: check fn --space demo\n") != std::string::npos);
  CHECK(text.find("verdict: Fails (exact)\n") != std::string::npos);
  CHECK(text.find("witness: k1=3 k2=0 t=1 point=-1 lhs=2 rhs=1 [inequality]\n") !=
        std::string::npos);
  // the certificate block keeps the weakest scale over all entries
  CHECK(text.find("certificate: u=1/4 v=1/8 w=3\n") != std::string::npos);
  CHECK(text.find("pairs: 361\n") != std::string::npos);
  CHECK(text.find("probes: 19 points, step 1/16\n") != std::string::npos);
  CHECK(text.find("fidelity:\n  - documented value disagrees at 0\n") !=
        std::string::npos);
  CHECK(text.find("warnings:\n  - careful\n") != std::string::npos);
  CHECK(text.find("detail: the long story\n") != std::string::npos);
}

TEST_CASE("the structured format exposes stable field names") {
  std::string text = geovex::emit_report(full_report(), ReportFormat::Structured);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["verdict"] == "Fails");
  CHECK(doc["mode"] == "exact");
  CHECK(doc["witness"]["k1"] == "3");
  CHECK(doc["witness"]["t"] == "1");
  CHECK(doc["witness"]["point"] == "-1");
  CHECK(doc["witness"]["condition"] == "inequality");
  CHECK(doc["certificate"]["u"] == "1/4");
  CHECK(doc["certificate"]["v"] == "1/8");
  CHECK(doc["certificate"]["w"] == "3");
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["name"] == "first-check");
  CHECK(doc["checks"][1]["witness"]["k2"] == "0");
  CHECK(doc["probes"]["count"] == 19);
  CHECK(doc["probes"]["step"] == "1/16");
  CHECK(doc["values"]["pairs"] == "361");
  CHECK(doc["fidelity"].is_array());
  CHECK(doc["notes"].size() == 2);
  CHECK(doc["warnings"][0] == "careful");
  CHECK(doc["detail"] == "the long story");
}

TEST_CASE("format names resolve") {
  CHECK(geovex::report_format_from_name("text") == ReportFormat::Text);
  CHECK(geovex::report_format_from_name("structured") == ReportFormat::Structured);
  CHECK_FALSE(geovex::report_format_from_name("yaml").has_value());
}

TEST_CASE("help and usage errors use the reserved exit codes") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"--help"}).out.find("check") != std::string::npos);

  CHECK(run_cli({}).exit_code == 3);                       // missing subcommand
  CHECK(run_cli({"frobnicate"}).exit_code == 3);           // unknown subcommand
  CHECK(run_cli({"check", "fn", "--bogus"}).exit_code == 3);
  CHECK(run_cli({"check", "fn", "--space", "euclid"}).exit_code == 3);  // missing flags

  CliRun bad_scalar = run_cli({"semidiff", "--space", "euclid", "--fn", "h",
                               "--base", "oops", "--target", "1"});
  CHECK(bad_scalar.exit_code == 3);
  CHECK(bad_scalar.err.find("not a rational") != std::string::npos);

  CliRun bad_step = run_cli({"check", "fn", "--space", "ex2", "--fn", "h",
                             "--class", "gslep", "--grid-step", "0"});
  CHECK(bad_step.exit_code == 3);

  CliRun no_companion = run_cli({"check", "set", "--space", "euclid", "--class", "gei"});
  CHECK(no_companion.exit_code == 3);
  CHECK(no_companion.err.find("companion") != std::string::npos);

  CliRun missing_config = run_cli({"check", "fn", "--space", "euclid", "--fn", "h",
                                   "--class", "gslep", "--config", "no-such-file.json"});
  CHECK(missing_config.exit_code == 3);
}

TEST_CASE("refuted checks exit with code one and print their witness") {
  CliRun run = run_cli({"check", "fn", "--space", "ex2", "--fn", "h", "--class", "gslec"});
  CHECK(run.exit_code == 1);
  CHECK(run.err.empty());
  CHECK(run.out.find("verdict: Fails") != std::string::npos);
  CHECK(run.out.find("witness:") != std::string::npos);

  CliRun set_run = run_cli({"check", "set", "--space", "ex1", "--class", "gei"});
  CHECK(set_run.exit_code == 1);
  CHECK(set_run.out.find("k1=-4 k2=-4 t=0") != std::string::npos);
}

TEST_CASE("holding checks exit with code zero") {
  // straight chords between members of an interval never leave it
  CliRun run = run_cli({"check", "set", "--space", "euclid", "--set",
                        "example2-window", "--class", "gei"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("verdict: Holds") != std::string::npos);

  CliRun certify = run_cli({"vfp", "certify", "--instance", "I1", "--base", "0",
                            "--zeta", "1", "--xi", "0"});
  CHECK(certify.exit_code == 0);
  CHECK(certify.out.find("verdict: Certified") != std::string::npos);
  CHECK(certify.out.find("condition fixed-point: pass") != std::string::npos);

  CliRun oracle = run_cli({"vfp", "oracle", "--instance", "I1"});
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("verdict: Consistent") != std::string::npos);
  CHECK(oracle.out.find("k=0: efficient") != std::string::npos);
}

TEST_CASE("derivative queries print exact values and honor orientation") {
  CliRun forward = run_cli({"semidiff", "--space", "ex2", "--fn", "h",
                            "--base", "1/2", "--target", "3"});
  CHECK(forward.exit_code == 0);
  CHECK(forward.out.find("kind: finite") != std::string::npos);
  CHECK(forward.out.find("value: 2") != std::string::npos);

  CliRun reverse = run_cli({"semidiff", "--space", "ex2", "--fn", "h",
                            "--base", "1/2", "--target", "3",
                            "--orientation", "image-to-base"});
  CHECK(reverse.exit_code == 0);
  CHECK(reverse.out.find("kind: +inf") != std::string::npos);

  // a base the point map moves is a rejected premise
  CliRun moved = run_cli({"semidiff", "--space", "ex1", "--fn", "h",
                          "--base", "3", "--target", "0"});
  CHECK(moved.exit_code == 3);
  CHECK_FALSE(moved.err.empty());
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::vector<std::string>> invocations = {
      {"reproduce", "example1"},
      {"reproduce", "example2"},
      {"check", "set", "--space", "ex1", "--class", "gei", "--format", "structured"},
      {"vfp", "duality", "--instance", "I1"},
  };
  for (const auto& args : invocations) {
    CliRun first = run_cli(args);
    CliRun second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("the walkthroughs reproduce their documented refutations") {
  CliRun one = run_cli({"reproduce", "example1"});
  CHECK(one.exit_code == 1);
  CHECK(one.out.find("k1=3 k2=0 t=1 point=-1") != std::string::npos);
  CHECK(one.out.find("fidelity:") != std::string::npos);

  CliRun two = run_cli({"reproduce", "example2"});
  CHECK(two.exit_code == 1);
  CHECK(two.out.find("fidelity:") != std::string::npos);
}

TEST_CASE("structured output is machine-parseable") {
  CliRun run = run_cli({"check", "set", "--space", "ex1", "--class", "gei",
                        "--format", "structured"});
  REQUIRE(run.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(run.out);
  CHECK(doc["verdict"] == "Fails");
  CHECK(doc["witness"]["k1"] == "-4");
  CHECK(doc["witness"]["t"] == "0");
  CHECK(doc["probes"].contains("count"));
}

TEST_CASE("a configuration document drives the whole pipeline") {
  const char* text = R"({
    "functions": {
      "bump": [
        {"when": "x <= 0", "value": "0 - x"},
        {"when": "x > 0", "value": "x"}
      ]
    },
    "sets": {"box": [{"lo": "-2", "hi": "2"}]},
    "duals": {"floor": {"alpha": ["1"], "beta": ["0"], "lambda": "0", "zeta": ["0"]}}
  })";
  const std::string path = "cli_doc_test.json";
  {
    std::ofstream file(path, std::ios::binary);
    file << text;
  }

  CliRun fn_check = run_cli({"check", "fn", "--space", "euclid", "--set", "box",
                             "--fn", "bump", "--class", "gsep", "--config", path});
  CHECK(fn_check.exit_code == 0);
  CHECK(fn_check.out.find("verdict: Holds") != std::string::npos);

  CliRun duality = run_cli({"vfp", "duality", "--instance", "I1", "--config", path});
  CHECK(duality.exit_code == 0);
  CHECK(duality.out.find("dual-feasible floor: Feasible") != std::string::npos);
  CHECK(duality.out.find("violations: 0") != std::string::npos);

  CliRun converse = run_cli({"vfp", "duality", "--instance", "I1", "--config", path,
                             "--dual", "floor", "--converse", "--base", "0"});
  CHECK(converse.exit_code == 0);
  CHECK(converse.out.find("verdict: Consistent") != std::string::npos);

  CliRun premise = run_cli({"vfp", "duality", "--instance", "I1", "--config", path,
                            "--dual", "floor", "--converse", "--base", "1/2"});
  CHECK(premise.exit_code == 3);
  CHECK(premise.out.find("verdict: PremiseViolated") != std::string::npos);

  std::remove(path.c_str());
}

TEST_CASE("certificates can be named in the document or spelled inline") {
  const char* text = R"({
    "certificates": {
      "origin": {"base": "0", "zeta": ["1"], "xi": ["0"]}
    }
  })";
  const std::string path = "cli_cert_test.json";
  {
    std::ofstream file(path, std::ios::binary);
    file << text;
  }

  CliRun named = run_cli({"vfp", "certify", "--instance", "I1", "--cert", "origin",
                          "--config", path});
  CliRun inline_cert = run_cli({"vfp", "certify", "--instance", "I1", "--base", "0",
                                "--zeta", "1", "--xi", "0"});
  CHECK(named.exit_code == 0);
  CHECK(inline_cert.exit_code == 0);
  CHECK(named.out.find("verdict: Certified") != std::string::npos);

  CliRun unknown = run_cli({"vfp", "certify", "--instance", "I1", "--cert", "ghost",
                            "--config", path});
  CHECK(unknown.exit_code == 3);

  CliRun refuted = run_cli({"vfp", "certify", "--instance", "I1", "--base", "1/2",
                            "--zeta", "1", "--xi", "0"});
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.out.find("verdict: Refuted") != std::string::npos);
  CHECK(refuted.out.find("failed-condition: stationarity") != std::string::npos);

  std::remove(path.c_str());
}
