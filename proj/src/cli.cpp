#include "geovex/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "geovex/config.hpp"
#include "geovex/errors.hpp"
#include "geovex/funclass.hpp"
#include "geovex/report.hpp"
#include "geovex/reproduce.hpp"
#include "geovex/semidiff.hpp"

namespace geovex {

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

int exit_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return kExitRefuted;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct CommonOpts {
  std::string config_path;
  std::string format = "text";
  std::string probe_policy = "default";
  std::string grid_step;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--config", opts->config_path, "JSON configuration document");
  cmd->add_option("--format", opts->format, "report format")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "structured"}));
  cmd->add_option("--probe-policy", opts->probe_policy, "probe density preset")
      ->check(CLI::IsMember(std::vector<std::string>{"default", "dense"}));
  cmd->add_option("--grid-step", opts->grid_step, "probe grid step (P/Q)");
}

struct Context {
  std::optional<ConfigDocument> doc;
  ProbePolicy policy;
  ReportFormat format = ReportFormat::Text;

  const ConfigDocument* doc_ptr() const { return doc.has_value() ? &*doc : nullptr; }
};

Scalar flag_scalar(const std::string& text, const std::string& flag) {
  std::optional<Scalar> value = parse_scalar(text);
  if (!value.has_value()) {
    throw ConfigError(flag, "'" + text + "' is not a rational (write P/Q)");
  }
  return *value;
}

std::vector<Scalar> flag_scalar_list(const std::string& csv, const std::string& flag) {
  std::vector<Scalar> out;
  if (csv.empty()) return out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t first = item.find_first_not_of(" \t");
    std::size_t last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ConfigError(flag, "empty entry in '" + csv + "'");
    }
    out.push_back(flag_scalar(item.substr(first, last - first + 1), flag));
  }
  return out;
}

Context make_context(const CommonOpts& opts) {
  Context ctx;
  if (!opts.config_path.empty()) ctx.doc = load_config(opts.config_path);
  if (ctx.doc.has_value() && ctx.doc->policy.has_value()) {
    ctx.policy = *ctx.doc->policy;
  }
  if (opts.probe_policy == "dense") {
    ctx.policy.grid_step = Scalar(1) / 64;
    ctx.policy.offset = Scalar(1) / 256;
    ctx.policy.t_sample_count = 24;
  }
  if (!opts.grid_step.empty()) {
    Scalar step = flag_scalar(opts.grid_step, "--grid-step");
    if (step <= 0) throw ConfigError("--grid-step", "must be positive");
    ctx.policy.grid_step = step;
  }
  ctx.format = *report_format_from_name(opts.format);
  return ctx;
}

EGeodesicSpace need_space(const Context& ctx, const std::string& name) {
  std::optional<EGeodesicSpace> space = find_space(ctx.doc_ptr(), name);
  if (!space.has_value()) throw ConfigError("--space", "unknown space '" + name + "'");
  return *space;
}

Region need_set(const Context& ctx, const EGeodesicSpace& space,
                const std::string& name) {
  std::string resolved = name;
  if (resolved.empty()) {
    std::optional<std::string> fallback = default_set_for_space(space.label);
    if (!fallback.has_value()) {
      throw ConfigError("--set", "space '" + space.label +
                                     "' has no companion set; name one explicitly");
    }
    resolved = *fallback;
  }
  std::optional<Region> region = find_set(ctx.doc_ptr(), resolved);
  if (!region.has_value()) throw ConfigError("--set", "unknown set '" + resolved + "'");
  return *region;
}

ScalarFn need_fn(const Context& ctx, const std::string& name) {
  std::optional<ScalarFn> fn = find_function(ctx.doc_ptr(), name);
  if (!fn.has_value()) throw ConfigError("--fn", "unknown function '" + name + "'");
  return *fn;
}

VfpInstance need_instance(const Context& ctx, const std::string& name) {
  std::optional<VfpInstance> inst = find_instance(ctx.doc_ptr(), name);
  if (!inst.has_value()) {
    throw ConfigError("--instance", "unknown instance '" + name + "'");
  }
  return *inst;
}

void fill_from_verdict(Report* report, const CheckVerdict& verdict) {
  report->verdict = verdict_name(verdict.verdict);
  report->mode = mode_name(verdict.mode);
  report->witness = verdict.witness;
  report->locality = verdict.locality;
  report->detail = verdict.detail;
}

void fill_probe_info(Report* report, const ProbeSet& probes) {
  report->probe_count = static_cast<int>(probes.points.size());
  report->probe_step = probes.policy.grid_step;
}

std::string fmt_double(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

struct Outcome {
  Report report;
  int exit_code = 0;
};

/// Per-instance probe set: grid plus breakpoints of every bundled function.
ProbeSet instance_probes(const VfpInstance& inst, const EGeodesicSpace& space,
                         const ProbePolicy& policy) {
  std::vector<const ScalarFn*> fns;
  for (const ScalarFn& fn : inst.f) fns.push_back(&fn);
  for (const ScalarFn& fn : inst.g) fns.push_back(&fn);
  for (const ScalarFn& fn : inst.h) fns.push_back(&fn);
  return build_probes(inst.k0, space, policy, fns);
}

// ---- check set ----

struct CheckSetOpts {
  CommonOpts common;
  std::string space;
  std::string set;
  std::string property;
  std::string fn;
  std::string cap;
};

Outcome run_check_set(const CheckSetOpts& opts) {
  Context ctx = make_context(opts.common);
  EGeodesicSpace space = need_space(ctx, opts.space);
  Region region = need_set(ctx, space, opts.set);
  std::optional<SetProperty> property = set_property_from_name(opts.property);
  if (!property.has_value()) {
    throw ConfigError("--class", "unknown set property '" + opts.property + "'");
  }

  Outcome outcome;
  if (ctx.doc.has_value()) outcome.report.warnings = ctx.doc->warnings;

  if (*property == SetProperty::GLEI_PRODUCT) {
    if (opts.fn.empty() || opts.cap.empty()) {
      throw ConfigError("--class", "glei-product needs --fn and --cap");
    }
    ScalarFn fn = need_fn(ctx, opts.fn);
    Scalar cap = flag_scalar(opts.cap, "--cap");
    ProbeSet probes = build_probes(region, space, ctx.policy, {&fn});
    CheckVerdict verdict = check_product_glei(space, region, fn, cap, probes);
    fill_from_verdict(&outcome.report, verdict);
    fill_probe_info(&outcome.report, probes);
    outcome.exit_code = exit_for(verdict.verdict);
    return outcome;
  }

  ProbeSet probes = build_probes(region, space, ctx.policy);
  CheckVerdict verdict = check_set_property(space, region, *property, probes);
  fill_from_verdict(&outcome.report, verdict);
  fill_probe_info(&outcome.report, probes);
  outcome.exit_code = exit_for(verdict.verdict);
  return outcome;
}

// ---- check fn ----

struct CheckFnOpts {
  CommonOpts common;
  std::string space;
  std::string set;
  std::string fn;
  std::string cls;
};

Outcome run_check_fn(const CheckFnOpts& opts) {
  Context ctx = make_context(opts.common);
  EGeodesicSpace space = need_space(ctx, opts.space);
  Region region = need_set(ctx, space, opts.set);
  ScalarFn fn = need_fn(ctx, opts.fn);
  std::optional<FnClass> cls = fn_class_from_name(opts.cls);
  if (!cls.has_value()) {
    throw ConfigError("--class", "unknown function class '" + opts.cls + "'");
  }

  Outcome outcome;
  if (ctx.doc.has_value()) outcome.report.warnings = ctx.doc->warnings;
  ProbeSet probes = build_probes(region, space, ctx.policy, {&fn});
  CheckVerdict verdict = check_class(space, region, FnCombo::of(fn), *cls, probes);
  fill_from_verdict(&outcome.report, verdict);
  fill_probe_info(&outcome.report, probes);
  outcome.exit_code = exit_for(verdict.verdict);
  return outcome;
}

// ---- semidiff ----

struct SemidiffOpts {
  CommonOpts common;
  std::string space;
  std::string fn;
  std::string base;
  std::string target;
  std::string orientation = "base-to-image";
  bool numeric = false;
};

Outcome run_semidiff(const SemidiffOpts& opts) {
  Context ctx = make_context(opts.common);
  EGeodesicSpace space = need_space(ctx, opts.space);
  ScalarFn fn = need_fn(ctx, opts.fn);
  Scalar base = flag_scalar(opts.base, "--base");
  Scalar target = flag_scalar(opts.target, "--target");
  SdOrientation orientation = opts.orientation == "image-to-base"
                                  ? SdOrientation::ImageToBase
                                  : SdOrientation::BaseToImage;

  FnCombo combo = FnCombo::of(fn);
  SemiDerivative derivative =
      opts.numeric ? semiderivative_numeric(combo, space, base, target, orientation)
                   : semiderivative(combo, space, base, target, orientation);

  Outcome outcome;
  Report& report = outcome.report;
  if (ctx.doc.has_value()) report.warnings = ctx.doc->warnings;
  report.verdict = sd_kind_name(derivative.kind);
  report.values.emplace_back("kind", sd_kind_name(derivative.kind));
  report.values.emplace_back("exact", derivative.exact ? "true" : "false");
  if (derivative.value.has_value()) {
    report.values.emplace_back("value", to_string(*derivative.value));
  }
  if (derivative.approx.has_value()) {
    report.values.emplace_back("approx", fmt_double(*derivative.approx));
  }
  if (!derivative.exact) {
    report.values.emplace_back("error-estimate", fmt_double(derivative.error_estimate));
    report.values.emplace_back("samples", std::to_string(derivative.samples_used));
  }
  report.detail = "derivative along the curve from " + to_string(base) + " toward " +
                  to_string(target) + " (" + opts.orientation + ")";
  outcome.exit_code = derivative.kind == SdKind::Divergent ? kExitInconclusive : 0;
  return outcome;
}

// ---- vfp oracle ----

struct OracleOpts {
  CommonOpts common;
  std::string instance;
  std::string mode = "fractional";
  std::string lambda;
};

Outcome run_vfp_oracle(const OracleOpts& opts) {
  Context ctx = make_context(opts.common);
  VfpInstance inst = need_instance(ctx, opts.instance);
  std::vector<Scalar> grid = instance_grid(inst, ctx.policy.grid_step);

  std::vector<InstanceIssue> issues = validate_denominators(inst, grid);
  if (!issues.empty()) {
    throw ConfigError("--instance", "denominator " + std::to_string(issues[0].index) +
                                        " is " + to_string(issues[0].value) +
                                        " at k=" + to_string(issues[0].at));
  }

  Outcome outcome;
  Report& report = outcome.report;
  if (ctx.doc.has_value()) report.warnings = ctx.doc->warnings;
  report.probe_count = static_cast<int>(grid.size());
  report.probe_step = ctx.policy.grid_step;

  OracleMode mode =
      opts.mode == "parametric" ? OracleMode::Parametric : OracleMode::Fractional;
  std::vector<Scalar> lambda;
  if (mode == OracleMode::Parametric) {
    lambda = flag_scalar_list(opts.lambda, "--lambda");
    if (lambda.empty()) {
      throw ConfigError("--lambda", "parametric mode needs one value per objective");
    }
  }

  OracleResult oracle = weak_efficient_oracle(inst, grid, mode, lambda);
  int efficient = 0;
  for (const OracleEntry& entry : oracle.entries) {
    if (entry.efficient) {
      ++efficient;
      report.notes.push_back("k=" + to_string(entry.point) + ": efficient");
    } else {
      report.notes.push_back("k=" + to_string(entry.point) + ": dominated by " +
                             to_string(*entry.dominated_by));
    }
  }
  report.values.emplace_back("feasible-grid-points",
                             std::to_string(oracle.entries.size()));
  report.values.emplace_back("efficient-count", std::to_string(efficient));

  if (mode == OracleMode::Fractional) {
    ConsistencyReport crosscheck = crosscheck_oracle_equivalence(inst, grid);
    for (const ConsistencyFinding& finding : crosscheck.findings) {
      report.notes.push_back("finding [" + finding.code + "]: " + finding.detail);
    }
    for (const std::string& note : crosscheck.inconclusive) {
      report.notes.push_back("inconclusive: " + note);
    }
    if (!crosscheck.consistent()) {
      report.verdict = "Violation";
      outcome.exit_code = kExitRefuted;
      return outcome;
    }
  }
  report.verdict = "Consistent";
  outcome.exit_code = 0;
  return outcome;
}

// ---- vfp certify ----

struct CertifyOpts {
  CommonOpts common;
  std::string instance;
  std::string space = "euclid";
  std::string cert;
  std::string base;
  std::string zeta;
  std::string xi;
  std::string kind = "basic";
  bool conditions_only = false;
};

Outcome run_vfp_certify(const CertifyOpts& opts) {
  Context ctx = make_context(opts.common);
  VfpInstance inst = need_instance(ctx, opts.instance);
  EGeodesicSpace space = need_space(ctx, opts.space);

  Certificate cert;
  if (!opts.cert.empty()) {
    const Certificate* named = find_certificate(ctx.doc_ptr(), opts.cert);
    if (named == nullptr) {
      throw ConfigError("--cert", "unknown certificate '" + opts.cert + "'");
    }
    cert = *named;
  } else {
    if (opts.base.empty()) {
      throw ConfigError("--base", "certify needs --cert or --base/--zeta/--xi");
    }
    cert.kbar = flag_scalar(opts.base, "--base");
    cert.zeta = flag_scalar_list(opts.zeta, "--zeta");
    cert.xi = flag_scalar_list(opts.xi, "--xi");
    std::optional<CertKind> kind = cert_kind_from_name(opts.kind);
    if (!kind.has_value()) {
      throw ConfigError("--kind", "unknown certificate kind '" + opts.kind + "'");
    }
    cert.kind = *kind;
  }

  Outcome outcome;
  Report& report = outcome.report;
  if (ctx.doc.has_value()) report.warnings = ctx.doc->warnings;
  ProbeSet probes = instance_probes(inst, space, ctx.policy);
  fill_probe_info(&report, probes);
  report.values.emplace_back("kind", cert_kind_name(cert.kind));

  CertVerdict verdict = check_certificate(inst, space, cert, probes);
  for (const ConditionRow& row : verdict.log) {
    report.notes.push_back("condition " + row.condition + ": " +
                           (row.pass ? "pass" : "fail") + " (" + row.detail + ")");
  }
  for (const std::string& row : verdict.inconclusive_rows) {
    report.notes.push_back("inconclusive: " + row);
  }
  for (const std::string& warning : verdict.warnings) report.warnings.push_back(warning);
  report.witness = verdict.witness;
  if (!verdict.failed_condition.empty()) {
    report.values.emplace_back("failed-condition", verdict.failed_condition);
  }

  if (verdict.outcome == CertOutcome::Refuted) {
    report.verdict = "Refuted";
    outcome.exit_code = kExitRefuted;
    return outcome;
  }

  bool hypothesis_failed = false;
  bool hypothesis_undecided = false;
  if (!opts.conditions_only) {
    HypothesisReport hypotheses = verify_hypotheses(inst, space, cert, probes);
    for (const HypothesisRow& row : hypotheses.rows) {
      report.checks.push_back({row.name, verdict_name(row.verdict.verdict),
                               row.verdict.witness, row.verdict.detail});
      if (row.verdict.verdict == Verdict::Fails) hypothesis_failed = true;
      if (row.verdict.verdict == Verdict::Inconclusive) hypothesis_undecided = true;
    }
  }

  if (hypothesis_failed) {
    report.verdict = "Refuted";
    report.detail = "conditions verified but a class hypothesis fails";
    outcome.exit_code = kExitRefuted;
  } else if (verdict.outcome == CertOutcome::Inconclusive || hypothesis_undecided) {
    report.verdict = "Inconclusive";
    outcome.exit_code = kExitInconclusive;
  } else {
    report.verdict = "Certified";
    outcome.exit_code = 0;
  }
  return outcome;
}

// ---- vfp duality ----

struct DualityOpts {
  CommonOpts common;
  std::string instance;
  std::string space = "euclid";
  std::vector<std::string> duals;
  bool converse = false;
  std::string base;
};

Outcome run_vfp_duality(const DualityOpts& opts) {
  Context ctx = make_context(opts.common);
  VfpInstance inst = need_instance(ctx, opts.instance);
  EGeodesicSpace space = need_space(ctx, opts.space);
  std::vector<Scalar> grid = instance_grid(inst, ctx.policy.grid_step);

  std::vector<std::pair<std::string, DualPoint>> duals;
  if (!opts.duals.empty()) {
    for (const std::string& name : opts.duals) {
      const DualPoint* dual = find_dual(ctx.doc_ptr(), name);
      if (dual == nullptr) throw ConfigError("--dual", "unknown dual '" + name + "'");
      duals.emplace_back(name, *dual);
    }
  } else if (ctx.doc.has_value()) {
    for (const auto& [name, dual] : ctx.doc->duals) duals.emplace_back(name, dual);
  }

  Outcome outcome;
  Report& report = outcome.report;
  if (ctx.doc.has_value()) report.warnings = ctx.doc->warnings;
  report.probe_count = static_cast<int>(grid.size());
  report.probe_step = ctx.policy.grid_step;

  if (opts.converse) {
    if (duals.size() != 1) {
      throw ConfigError("--converse", "needs exactly one --dual");
    }
    if (opts.base.empty()) throw ConfigError("--base", "converse mode needs --base");
    Scalar kbar = flag_scalar(opts.base, "--base");
    ConverseReport converse =
        converse_duality_check(inst, space, duals[0].second, kbar, grid, ctx.policy);
    report.verdict = converse_outcome_name(converse.outcome);
    for (const HypothesisRow& row : converse.hypotheses) {
      report.checks.push_back({row.name, verdict_name(row.verdict.verdict),
                               row.verdict.witness, row.verdict.detail});
    }
    for (const std::string& note : converse.notes) report.notes.push_back(note);
    switch (converse.outcome) {
      case ConverseOutcome::Consistent: outcome.exit_code = 0; break;
      case ConverseOutcome::Violation: outcome.exit_code = kExitRefuted; break;
      case ConverseOutcome::Inconclusive: outcome.exit_code = kExitInconclusive; break;
      case ConverseOutcome::PremiseViolated: outcome.exit_code = kExitUsage; break;
    }
    return outcome;
  }

  ProbeSet probes = instance_probes(inst, space, ctx.policy);
  bool any_inconclusive = false;
  for (const auto& [name, dual] : duals) {
    CertVerdict feasibility = dual_feasible(inst, space, dual, probes);
    std::string label = cert_outcome_name(feasibility.outcome);
    if (feasibility.outcome == CertOutcome::Certified) label = "Feasible";
    if (feasibility.outcome == CertOutcome::Refuted) label = "Infeasible";
    report.checks.push_back({"dual-feasible " + name, label, feasibility.witness,
                             feasibility.failed_condition.empty()
                                 ? std::string()
                                 : "failed " + feasibility.failed_condition});
    if (feasibility.outcome == CertOutcome::Inconclusive) any_inconclusive = true;
  }

  std::vector<DualPoint> points;
  points.reserve(duals.size());
  for (const auto& [name, dual] : duals) points.push_back(dual);
  WeakDualityReport scan = weak_duality_scan(inst, space, points, grid, ctx.policy);
  report.values.emplace_back("pairs-checked", std::to_string(scan.pairs_checked));
  report.values.emplace_back("violations", std::to_string(scan.violations.size()));
  for (const std::string& note : scan.skipped) report.notes.push_back(note);
  for (const DualityViolation& violation : scan.violations) {
    std::ostringstream line;
    line << "violation: primal k=" << to_string(violation.primal) << " undercuts dual "
         << duals[violation.dual_index].first << " (ratios";
    for (const Scalar& ratio : violation.ratios) line << " " << to_string(ratio);
    line << "); failed hypotheses:";
    if (violation.failed_hypotheses.empty()) {
      line << " none (theorem counterexample)";
    } else {
      for (const std::string& name : violation.failed_hypotheses) line << " " << name;
    }
    report.notes.push_back(line.str());
    for (const HypothesisRow& row : violation.hypothesis_rows) {
      report.checks.push_back({row.name, verdict_name(row.verdict.verdict),
                               row.verdict.witness, row.verdict.detail});
    }
  }

  if (!scan.violations.empty()) {
    report.verdict = "Violation";
    outcome.exit_code = kExitRefuted;
  } else if (any_inconclusive) {
    report.verdict = "Inconclusive";
    outcome.exit_code = kExitInconclusive;
  } else {
    report.verdict = "Consistent";
    outcome.exit_code = 0;
  }
  return outcome;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact verification of curve-based convexity classes and ratio programs",
               "geovex"};
  app.require_subcommand(1);

  CheckSetOpts check_set_opts;
  CheckFnOpts check_fn_opts;
  SemidiffOpts semidiff_opts;
  OracleOpts oracle_opts;
  CertifyOpts certify_opts;
  DualityOpts duality_opts;
  std::string reproduce_which;
  std::string reproduce_format = "text";

  CLI::App* check = app.add_subcommand("check", "set and function class checks");
  check->require_subcommand(1);

  CLI::App* check_set = check->add_subcommand("set", "decide a set property");
  add_common(check_set, &check_set_opts.common);
  check_set->add_option("--space", check_set_opts.space, "space name")->required();
  check_set->add_option("--set", check_set_opts.set, "set name (default: companion set)");
  check_set->add_option("--class", check_set_opts.property,
                        "gei | glei | starshaped | glei-product")
      ->required();
  check_set->add_option("--fn", check_set_opts.fn, "function (glei-product only)");
  check_set->add_option("--cap", check_set_opts.cap, "height cap (glei-product only)");

  CLI::App* check_fn = check->add_subcommand("fn", "decide a function class");
  add_common(check_fn, &check_fn_opts.common);
  check_fn->add_option("--space", check_fn_opts.space, "space name")->required();
  check_fn->add_option("--set", check_fn_opts.set, "set name (default: companion set)");
  check_fn->add_option("--fn", check_fn_opts.fn, "function name")->required();
  check_fn->add_option("--class", check_fn_opts.cls,
                       "gep | gsep | glep | gslec | gslep | preincave | gqslep | gpslep")
      ->required();

  CLI::App* semidiff = app.add_subcommand("semidiff", "one-sided derivative along a curve");
  add_common(semidiff, &semidiff_opts.common);
  semidiff->add_option("--space", semidiff_opts.space, "space name")->required();
  semidiff->add_option("--fn", semidiff_opts.fn, "function name")->required();
  semidiff->add_option("--base", semidiff_opts.base, "base point (P/Q)")->required();
  semidiff->add_option("--target", semidiff_opts.target, "target point (P/Q)")->required();
  semidiff->add_option("--orientation", semidiff_opts.orientation,
                       "curve orientation: base-to-image | image-to-base")
      ->check(CLI::IsMember(std::vector<std::string>{"base-to-image", "image-to-base"}));
  semidiff->add_flag("--numeric", semidiff_opts.numeric,
                     "force the numeric difference-quotient schedule");

  CLI::App* vfp = app.add_subcommand("vfp", "ratio-program verification");
  vfp->require_subcommand(1);

  CLI::App* oracle = vfp->add_subcommand("oracle", "brute-force weak efficiency");
  add_common(oracle, &oracle_opts.common);
  oracle->add_option("--instance", oracle_opts.instance, "instance name")->required();
  oracle->add_option("--mode", oracle_opts.mode, "fractional | parametric")
      ->check(CLI::IsMember(std::vector<std::string>{"fractional", "parametric"}));
  oracle->add_option("--lambda", oracle_opts.lambda,
                     "comma-separated ratio parameters (parametric mode)");

  CLI::App* certify = vfp->add_subcommand("certify", "verify an efficiency certificate");
  add_common(certify, &certify_opts.common);
  certify->add_option("--instance", certify_opts.instance, "instance name")->required();
  certify->add_option("--space", certify_opts.space, "space name (default euclid)");
  certify->add_option("--cert", certify_opts.cert, "certificate name (from --config)");
  certify->add_option("--base", certify_opts.base, "base point (P/Q)");
  certify->add_option("--zeta", certify_opts.zeta, "objective multipliers (comma-separated)");
  certify->add_option("--xi", certify_opts.xi, "constraint multipliers (comma-separated)");
  certify->add_option("--kind", certify_opts.kind,
                      "basic | parametric | scalarized-chord | scalarized-margin | corollary");
  certify->add_flag("--conditions-only", certify_opts.conditions_only,
                    "skip the class hypothesis checks");

  CLI::App* duality = vfp->add_subcommand("duality", "dual feasibility and duality scans");
  add_common(duality, &duality_opts.common);
  duality->add_option("--instance", duality_opts.instance, "instance name")->required();
  duality->add_option("--space", duality_opts.space, "space name (default euclid)");
  duality->add_option("--dual", duality_opts.duals,
                      "dual point name from --config (repeatable; default: all)");
  duality->add_flag("--converse", duality_opts.converse,
                    "run the converse check for --base instead of the weak-duality scan");
  duality->add_option("--base", duality_opts.base,
                      "claimed efficient point (converse mode)");

  CLI::App* reproduce = app.add_subcommand("reproduce", "worked-example walkthroughs");
  reproduce->add_option("which", reproduce_which, "example1 | example2")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"example1", "example2"}));
  reproduce->add_option("--format", reproduce_format, "report format")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "structured"}));

  std::vector<const char*> argv;
  argv.push_back("geovex");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& parse_error) {
    if (parse_error.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << parse_error.what() << "\n";
    return kExitUsage;
  }

  try {
    Outcome outcome;
    if (check_set->parsed()) {
      outcome = run_check_set(check_set_opts);
    } else if (check_fn->parsed()) {
      outcome = run_check_fn(check_fn_opts);
    } else if (semidiff->parsed()) {
      outcome = run_semidiff(semidiff_opts);
    } else if (oracle->parsed()) {
      outcome = run_vfp_oracle(oracle_opts);
    } else if (certify->parsed()) {
      outcome = run_vfp_certify(certify_opts);
    } else if (duality->parsed()) {
      outcome = run_vfp_duality(duality_opts);
    } else if (reproduce->parsed()) {
      ReproduceResult result =
          reproduce_which == "example1" ? reproduce_example1() : reproduce_example2();
      outcome.report = std::move(result.report);
      outcome.exit_code = result.exit_code;
      outcome.report.command = args;
      out << emit_report(outcome.report,
                         *report_format_from_name(reproduce_format));
      return outcome.exit_code;
    }
    outcome.report.command = args;
    ReportFormat format = ReportFormat::Text;
    auto format_of = [](const std::string& name) {
      return *report_format_from_name(name);
    };
    if (check_set->parsed()) format = format_of(check_set_opts.common.format);
    if (check_fn->parsed()) format = format_of(check_fn_opts.common.format);
    if (semidiff->parsed()) format = format_of(semidiff_opts.common.format);
    if (oracle->parsed()) format = format_of(oracle_opts.common.format);
    if (certify->parsed()) format = format_of(certify_opts.common.format);
    if (duality->parsed()) format = format_of(duality_opts.common.format);
    out << emit_report(outcome.report, format);
    return outcome.exit_code;
  } catch (const ConfigError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const PremiseError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace geovex
