#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geovex/scalar.hpp"
#include "geovex/verdict.hpp"

namespace geovex {

enum class ReportFormat { Text, Structured };

std::optional<ReportFormat> report_format_from_name(const std::string& name);

/// One named sub-result inside a larger report (hypothesis rows, walkthrough
/// steps, per-dual feasibility).
struct NamedCheck {
  std::string name;
  std::string verdict;
  std::optional<Witness> witness;
  std::string detail;
};

/// Everything a command wants to say. Emission is deterministic: identical
/// reports produce identical bytes, and no field depends on wall time.
struct Report {
  std::vector<std::string> command;  // argv echo
  std::string verdict;
  std::string mode;  // "exact"/"sampled"; empty = not applicable
  std::optional<Witness> witness;
  LocalityCertificate locality;  // summarized as minima; empty = omitted
  std::vector<NamedCheck> checks;
  std::vector<std::string> fidelity;
  std::optional<int> probe_count;
  std::optional<Scalar> probe_step;
  std::vector<std::pair<std::string, std::string>> values;  // flat key/value rows
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
  std::string detail;
};

/// Text mode is line-oriented for reading; structured mode is a JSON object
/// with stable field names (verdict, witness{k1,k2,t,point,lhs,rhs,condition},
/// certificate{u,v,w}, checks[], fidelity[], probes{count,step}, values{},
/// notes[], warnings[], detail). Rationals render as "p/q" in both modes.
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace geovex
