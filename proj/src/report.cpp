#include "geovex/report.hpp"

#include <sstream>

#include <json.hpp>

namespace geovex {

namespace {

using Json = nlohmann::ordered_json;

/// The certificate block reports the weakest (smallest) scales over all
/// pair entries, so it stays a valid certificate for every pair at once.
struct CertificateSummary {
  Scalar u;
  Scalar v;
  std::optional<Scalar> w;
};

std::optional<CertificateSummary> summarize(const LocalityCertificate& locality) {
  if (locality.entries.empty()) return std::nullopt;
  CertificateSummary summary{locality.entries.front().u, locality.entries.front().v,
                             std::nullopt};
  for (const LocalityEntry& entry : locality.entries) {
    if (entry.u < summary.u) summary.u = entry.u;
    if (entry.v < summary.v) summary.v = entry.v;
    if (entry.w.has_value()) {
      if (!summary.w.has_value() || *entry.w < *summary.w) summary.w = entry.w;
    }
  }
  return summary;
}

std::string witness_text(const Witness& witness) {
  std::ostringstream out;
  out << "k1=" << to_string(witness.k1) << " k2=" << to_string(witness.k2);
  if (witness.t.has_value()) out << " t=" << to_string(*witness.t);
  if (witness.point.has_value()) out << " point=" << to_string(*witness.point);
  if (witness.lhs.has_value()) out << " lhs=" << to_string(*witness.lhs);
  if (witness.rhs.has_value()) out << " rhs=" << to_string(*witness.rhs);
  if (!witness.condition.empty()) out << " [" << witness.condition << "]";
  return out.str();
}

Json witness_json(const Witness& witness) {
  Json out = Json::object();
  out["k1"] = to_string(witness.k1);
  out["k2"] = to_string(witness.k2);
  if (witness.t.has_value()) out["t"] = to_string(*witness.t);
  if (witness.point.has_value()) out["point"] = to_string(*witness.point);
  if (witness.lhs.has_value()) out["lhs"] = to_string(*witness.lhs);
  if (witness.rhs.has_value()) out["rhs"] = to_string(*witness.rhs);
  if (!witness.condition.empty()) out["condition"] = witness.condition;
  return out;
}

std::string emit_text(const Report& report) {
  std::ostringstream out;
  if (!report.command.empty()) {
    out << "command:";
    for (const std::string& word : report.command) out << " " << word;
    out << "\n";
  }
  if (!report.verdict.empty()) {
    out << "verdict: " << report.verdict;
    if (!report.mode.empty()) out << " (" << report.mode << ")";
    out << "\n";
  }
  if (report.witness.has_value()) {
    out << "witness: " << witness_text(*report.witness) << "\n";
  }
  if (auto summary = summarize(report.locality)) {
    out << "certificate: u=" << to_string(summary->u) << " v=" << to_string(summary->v);
    if (summary->w.has_value()) out << " w=" << to_string(*summary->w);
    out << "\n";
  }
  for (const auto& [key, value] : report.values) {
    out << key << ": " << value << "\n";
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const NamedCheck& check : report.checks) {
      out << "  " << check.name << ": " << check.verdict;
      if (check.witness.has_value()) out << "  witness: " << witness_text(*check.witness);
      if (!check.detail.empty()) out << "  (" << check.detail << ")";
      out << "\n";
    }
  }
  if (!report.fidelity.empty()) {
    out << "fidelity:\n";
    for (const std::string& flag : report.fidelity) out << "  - " << flag << "\n";
  }
  if (report.probe_count.has_value() || report.probe_step.has_value()) {
    out << "probes:";
    if (report.probe_count.has_value()) out << " " << *report.probe_count << " points";
    if (report.probe_step.has_value()) {
      out << (report.probe_count.has_value() ? ", " : " ") << "step "
          << to_string(*report.probe_step);
    }
    out << "\n";
  }
  for (const std::string& note : report.notes) out << note << "\n";
  if (!report.warnings.empty()) {
    out << "warnings:\n";
    for (const std::string& warning : report.warnings) out << "  - " << warning << "\n";
  }
  if (!report.detail.empty()) out << "detail: " << report.detail << "\n";
  return out.str();
}

std::string emit_structured(const Report& report) {
  Json out = Json::object();
  if (!report.command.empty()) out["command"] = report.command;
  if (!report.verdict.empty()) out["verdict"] = report.verdict;
  if (!report.mode.empty()) out["mode"] = report.mode;
  if (report.witness.has_value()) out["witness"] = witness_json(*report.witness);
  if (auto summary = summarize(report.locality)) {
    Json certificate = Json::object();
    certificate["u"] = to_string(summary->u);
    certificate["v"] = to_string(summary->v);
    if (summary->w.has_value()) certificate["w"] = to_string(*summary->w);
    out["certificate"] = std::move(certificate);
  }
  if (!report.checks.empty()) {
    Json checks = Json::array();
    for (const NamedCheck& check : report.checks) {
      Json row = Json::object();
      row["name"] = check.name;
      row["verdict"] = check.verdict;
      if (check.witness.has_value()) row["witness"] = witness_json(*check.witness);
      if (!check.detail.empty()) row["detail"] = check.detail;
      checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
  }
  out["fidelity"] = report.fidelity;
  if (report.probe_count.has_value() || report.probe_step.has_value()) {
    Json probes = Json::object();
    if (report.probe_count.has_value()) probes["count"] = *report.probe_count;
    if (report.probe_step.has_value()) probes["step"] = to_string(*report.probe_step);
    out["probes"] = std::move(probes);
  }
  if (!report.values.empty()) {
    Json values = Json::object();
    for (const auto& [key, value] : report.values) values[key] = value;
    out["values"] = std::move(values);
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "structured") return ReportFormat::Structured;
  return std::nullopt;
}

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Text ? emit_text(report) : emit_structured(report);
}

}  // namespace geovex
