#include "geovex/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geovex/errors.hpp"
#include "geovex/expr.hpp"

namespace geovex {

namespace {

using Json = nlohmann::ordered_json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  std::size_t stop = byte > 0 ? byte - 1 : 0;
  for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Scalar scalar_at(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Scalar(static_cast<long>(value.get<long long>()));
  }
  if (value.is_string()) {
    std::optional<Scalar> parsed = parse_scalar(value.get<std::string>());
    if (parsed.has_value()) return *parsed;
    throw ConfigError(where, "'" + value.get<std::string>() + "' is not a rational");
  }
  if (value.is_number_float()) {
    throw ConfigError(where, "floating literal is not exact; write \"p/q\"");
  }
  throw ConfigError(where, "expected an integer or a \"p/q\" string");
}

std::vector<Scalar> scalar_list_at(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ConfigError(where, "expected an array of rationals");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(scalar_at(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

bool bool_at(const Json& obj, const std::string& key, bool fallback,
             const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) throw ConfigError(where + "." + key, "expected a boolean");
  return obj[key].get<bool>();
}

/// Unbounded-capable span used for interval-style piece guards and for
/// overlap diagnostics. Bounded on both sides it is also a Region interval.
struct Span {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

Span span_at(const Json& obj, const std::string& where) {
  if (!obj.is_object()) {
    throw ConfigError(where, "expected an interval object {lo, hi, lo-closed, hi-closed}");
  }
  Span span;
  for (const auto& [key, value] : obj.items()) {
    if (key == "lo") {
      span.lo = scalar_at(value, where + ".lo");
    } else if (key == "hi") {
      span.hi = scalar_at(value, where + ".hi");
    } else if (key == "lo-closed") {
      span.lo_closed = bool_at(obj, "lo-closed", true, where);
    } else if (key == "hi-closed") {
      span.hi_closed = bool_at(obj, "hi-closed", true, where);
    } else {
      throw ConfigError(where + "." + key, "unknown interval key");
    }
  }
  if (span.lo.has_value() && span.hi.has_value() && *span.hi < *span.lo) {
    throw ConfigError(where, "interval is empty: hi < lo");
  }
  return span;
}

Interval bounded_interval_at(const Json& obj, const std::string& where) {
  Span span = span_at(obj, where);
  if (!span.lo.has_value() || !span.hi.has_value()) {
    throw ConfigError(where, "set intervals must carry both lo and hi");
  }
  return Interval{*span.lo, *span.hi, span.lo_closed, span.hi_closed};
}

Guard guard_of_span(const Span& span) {
  Conjunction conj;
  if (span.lo.has_value()) {
    conj.push_back(Atom{Poly::variable(0) - Poly::constant(*span.lo),
                        span.lo_closed ? RelOp::Ge : RelOp::Gt});
  }
  if (span.hi.has_value()) {
    conj.push_back(Atom{Poly::variable(0) - Poly::constant(*span.hi),
                        span.hi_closed ? RelOp::Le : RelOp::Lt});
  }
  if (conj.empty()) return Guard::everything();
  Guard guard;
  guard.anyof.push_back(std::move(conj));
  return guard;
}

bool spans_overlap(const Span& a, const Span& b) {
  // Empty overlap needs a separating bound: one span ends before the other
  // starts (touching counts as overlap only when both endpoints are closed).
  auto separated = [](const Span& low, const Span& high) {
    if (!low.hi.has_value() || !high.lo.has_value()) return false;
    if (*low.hi < *high.lo) return true;
    if (*low.hi == *high.lo) return !(low.hi_closed && high.lo_closed);
    return false;
  };
  return !separated(a, b) && !separated(b, a);
}

struct ParsedPiece {
  MapPiece piece;
  std::optional<Span> span;  // interval-guard pieces only (overlap diagnostics)
};

ParsedPiece piece_at(const Json& obj, const std::string& where,
                     std::span<const std::string> vars) {
  if (!obj.is_object()) throw ConfigError(where, "expected a piece object");
  if (!obj.contains("value")) throw ConfigError(where, "piece needs a value");

  ParsedPiece out;
  const Json& value = obj["value"];
  if (value.is_string()) {
    try {
      out.piece.body = parse_poly_expr(value.get<std::string>(), vars);
    } catch (const ConfigError& err) {
      throw ConfigError(where + ".value", err.what());
    }
  } else {
    out.piece.body = Poly::constant(scalar_at(value, where + ".value"));
  }

  const bool has_when = obj.contains("when");
  const bool has_on = obj.contains("on");
  if (has_when && has_on) {
    throw ConfigError(where, "piece admits either 'when' or 'on', not both");
  }
  if (has_when) {
    if (!obj["when"].is_string()) throw ConfigError(where + ".when", "expected a formula string");
    try {
      out.piece.when = parse_guard_expr(obj["when"].get<std::string>(), vars);
    } catch (const ConfigError& err) {
      throw ConfigError(where + ".when", err.what());
    }
  } else if (has_on) {
    if (vars.size() != 1) {
      throw ConfigError(where + ".on", "interval guards apply to one-variable maps only");
    }
    Span span = span_at(obj["on"], where + ".on");
    out.piece.when = guard_of_span(span);
    out.span = span;
  } else {
    out.piece.when = Guard::everything();
  }

  for (const auto& [key, ignored] : obj.items()) {
    (void)ignored;
    if (key != "value" && key != "when" && key != "on") {
      throw ConfigError(where + "." + key, "unknown piece key");
    }
  }
  return out;
}

PiecewiseMap map_at(const Json& arr, const std::string& where,
                    std::span<const std::string> vars, const std::string& label,
                    std::vector<std::string>* warnings) {
  if (!arr.is_array() || arr.empty()) {
    throw ConfigError(where, "expected a non-empty array of pieces");
  }
  std::vector<MapPiece> pieces;
  std::vector<std::optional<Span>> spans;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ParsedPiece parsed = piece_at(arr[i], where + "[" + std::to_string(i) + "]", vars);
    pieces.push_back(std::move(parsed.piece));
    spans.push_back(parsed.span);
  }
  if (warnings != nullptr) {
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (!spans[i].has_value()) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (!spans[j].has_value()) continue;
        if (spans_overlap(*spans[i], *spans[j])) {
          warnings->push_back(where + ": piece " + std::to_string(i + 1) +
                              " overlaps piece " + std::to_string(j + 1) +
                              "; first match wins");
        }
      }
    }
  }
  return PiecewiseMap(static_cast<int>(vars.size()), std::move(pieces), label);
}

const std::vector<std::string> kVarX = {"x"};
const std::vector<std::string> kVarXY = {"x", "y"};
const std::vector<std::string> kVarXYT = {"x", "y", "t"};

ScalarFn function_at(const Json& arr, const std::string& where,
                     const std::string& label, std::vector<std::string>* warnings) {
  return ScalarFn::exact(map_at(arr, where, kVarX, label, warnings), label);
}

Region set_at(const Json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) {
    throw ConfigError(where, "expected a non-empty array of intervals");
  }
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    parts.push_back(bounded_interval_at(arr[i], where + "[" + std::to_string(i) + "]"));
  }
  return Region(std::move(parts));
}

EGeodesicSpace space_at(const Json& obj, const std::string& where,
                        const std::string& name, std::vector<std::string>* warnings) {
  if (!obj.is_object()) throw ConfigError(where, "expected a space object");
  for (const auto& [key, ignored] : obj.items()) {
    (void)ignored;
    if (key != "point-map" && key != "direction" && key != "curve") {
      throw ConfigError(where + "." + key, "unknown space key");
    }
  }
  if (!obj.contains("point-map") || !obj.contains("direction") || !obj.contains("curve")) {
    throw ConfigError(where, "space needs point-map, direction, and curve");
  }
  EGeodesicSpace space;
  space.label = name;
  space.point_map = map_at(obj["point-map"], where + ".point-map", kVarX,
                           name + ".point-map", warnings);
  space.direction = map_at(obj["direction"], where + ".direction", kVarXY,
                           name + ".direction", warnings);
  space.curve = map_at(obj["curve"], where + ".curve", kVarXYT, name + ".curve",
                       warnings);
  return space;
}

std::vector<ScalarFn> function_list_at(const Json& arr, const std::string& where,
                                       const std::string& label_prefix,
                                       const ConfigDocument& doc,
                                       std::vector<std::string>* warnings) {
  if (!arr.is_array()) {
    throw ConfigError(where, "expected an array of function names or inline pieces");
  }
  std::vector<ScalarFn> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& entry = arr[i];
    std::string entry_where = where + "[" + std::to_string(i) + "]";
    if (entry.is_string()) {
      std::string name = entry.get<std::string>();
      auto local = doc.functions.find(name);
      if (local != doc.functions.end()) {
        out.push_back(local->second);
        continue;
      }
      std::optional<ScalarFn> builtin = builtin_function(name);
      if (builtin.has_value()) {
        out.push_back(std::move(*builtin));
        continue;
      }
      throw ConfigError(entry_where, "unknown function '" + name + "'");
    }
    out.push_back(function_at(entry, entry_where,
                              label_prefix + std::to_string(i + 1), warnings));
  }
  return out;
}

VfpInstance instance_at(const Json& obj, const std::string& where,
                        const std::string& name, const ConfigDocument& doc,
                        std::vector<std::string>* warnings) {
  if (!obj.is_object()) throw ConfigError(where, "expected an instance object");
  for (const auto& [key, ignored] : obj.items()) {
    (void)ignored;
    if (key != "f" && key != "g" && key != "h" && key != "set") {
      throw ConfigError(where + "." + key, "unknown instance key");
    }
  }
  if (!obj.contains("f") || !obj.contains("g") || !obj.contains("set")) {
    throw ConfigError(where, "instance needs f, g, and set");
  }
  VfpInstance inst;
  inst.label = name;
  inst.f = function_list_at(obj["f"], where + ".f", name + ".f", doc, warnings);
  inst.g = function_list_at(obj["g"], where + ".g", name + ".g", doc, warnings);
  if (obj.contains("h")) {
    inst.h = function_list_at(obj["h"], where + ".h", name + ".h", doc, warnings);
  }
  if (inst.f.empty()) throw ConfigError(where + ".f", "needs at least one objective");
  if (inst.g.size() != inst.f.size()) {
    throw ConfigError(where + ".g", "needs exactly one denominator per objective");
  }
  const Json& set = obj["set"];
  if (set.is_string()) {
    std::string set_name = set.get<std::string>();
    std::optional<Region> region = find_set(&doc, set_name);
    if (!region.has_value()) {
      throw ConfigError(where + ".set", "unknown set '" + set_name + "'");
    }
    inst.k0 = std::move(*region);
  } else {
    inst.k0 = set_at(set, where + ".set");
  }
  return inst;
}

Certificate certificate_at(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected a certificate object");
  for (const auto& [key, ignored] : obj.items()) {
    (void)ignored;
    if (key != "base" && key != "zeta" && key != "xi" && key != "kind") {
      throw ConfigError(where + "." + key, "unknown certificate key");
    }
  }
  if (!obj.contains("base") || !obj.contains("zeta") || !obj.contains("xi")) {
    throw ConfigError(where, "certificate needs base, zeta, and xi");
  }
  Certificate cert;
  cert.kbar = scalar_at(obj["base"], where + ".base");
  cert.zeta = scalar_list_at(obj["zeta"], where + ".zeta");
  cert.xi = scalar_list_at(obj["xi"], where + ".xi");
  if (obj.contains("kind")) {
    if (!obj["kind"].is_string()) throw ConfigError(where + ".kind", "expected a string");
    std::optional<CertKind> kind = cert_kind_from_name(obj["kind"].get<std::string>());
    if (!kind.has_value()) {
      throw ConfigError(where + ".kind",
                        "unknown kind '" + obj["kind"].get<std::string>() + "'");
    }
    cert.kind = *kind;
  }
  return cert;
}

DualPoint dual_at(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected a dual object");
  for (const auto& [key, ignored] : obj.items()) {
    (void)ignored;
    if (key != "alpha" && key != "beta" && key != "lambda" && key != "zeta") {
      throw ConfigError(where + "." + key, "unknown dual key");
    }
  }
  if (!obj.contains("alpha") || !obj.contains("beta") || !obj.contains("lambda") ||
      !obj.contains("zeta")) {
    throw ConfigError(where, "dual needs alpha, beta, lambda, and zeta");
  }
  DualPoint dual;
  dual.alpha = scalar_list_at(obj["alpha"], where + ".alpha");
  dual.beta = scalar_list_at(obj["beta"], where + ".beta");
  dual.lambda = scalar_at(obj["lambda"], where + ".lambda");
  dual.zeta = scalar_list_at(obj["zeta"], where + ".zeta");
  return dual;
}

ProbePolicy policy_at(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected a policy object");
  ProbePolicy policy;
  for (const auto& [key, value] : obj.items()) {
    if (key == "grid-step") {
      policy.grid_step = scalar_at(value, where + ".grid-step");
      if (policy.grid_step <= 0) {
        throw ConfigError(where + ".grid-step", "must be positive");
      }
    } else if (key == "offset") {
      policy.offset = scalar_at(value, where + ".offset");
      if (policy.offset <= 0) throw ConfigError(where + ".offset", "must be positive");
    } else if (key == "t-samples") {
      if (!value.is_number_integer()) {
        throw ConfigError(where + ".t-samples", "expected an integer");
      }
      long long count = value.get<long long>();
      if (count < 1 || count > 64) {
        throw ConfigError(where + ".t-samples", "expected 1..64");
      }
      policy.t_sample_count = static_cast<int>(count);
    } else {
      throw ConfigError(where + "." + key, "unknown policy key");
    }
  }
  return policy;
}

std::string guard_text(const Guard& guard, std::span<const std::string> vars) {
  if (guard.always || guard.anyof.empty()) return "";
  std::ostringstream out;
  for (std::size_t a = 0; a < guard.anyof.size(); ++a) {
    if (a > 0) out << " || ";
    const Conjunction& conj = guard.anyof[a];
    if (conj.empty()) return "";  // one always-true alternative admits everything
    for (std::size_t c = 0; c < conj.size(); ++c) {
      if (c > 0) out << " && ";
      out << conj[c].lhs.to_string(vars) << " " << relop_symbol(conj[c].op) << " 0";
    }
  }
  return out.str();
}

Json emit_pieces(const PiecewiseMap& map, std::span<const std::string> vars) {
  Json arr = Json::array();
  for (const MapPiece& piece : map.pieces()) {
    Json entry = Json::object();
    std::string when = guard_text(piece.when, vars);
    if (!when.empty()) entry["when"] = when;
    entry["value"] = piece.body.to_string(vars);
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json emit_set(const Region& region) {
  Json arr = Json::array();
  for (const Interval& part : region.parts()) {
    Json entry = Json::object();
    entry["lo"] = to_string(part.lo);
    entry["hi"] = to_string(part.hi);
    if (!part.lo_closed) entry["lo-closed"] = false;
    if (!part.hi_closed) entry["hi-closed"] = false;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json emit_scalars(const std::vector<Scalar>& values) {
  Json arr = Json::array();
  for (const Scalar& value : values) arr.push_back(to_string(value));
  return arr;
}

Json emit_function_list(const std::vector<ScalarFn>& fns) {
  Json arr = Json::array();
  for (const ScalarFn& fn : fns) arr.push_back(emit_pieces(fn.map(), kVarX));
  return arr;
}

}  // namespace

ConfigDocument parse_config(const std::string& text, const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    auto [line, column] = line_column(text, err.byte);
    std::string what = err.what();
    std::size_t cut = what.find("] ");
    if (cut != std::string::npos) what = what.substr(cut + 2);
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(column),
                      what);
  }
  if (!root.is_object()) throw ConfigError(origin, "expected a JSON object");

  ConfigDocument doc;
  // Functions and sets resolve before instances regardless of document
  // order; instances may only reference names, not forward-declare them.
  if (root.contains("policy")) doc.policy = policy_at(root["policy"], "policy");
  if (root.contains("spaces")) {
    if (!root["spaces"].is_object()) throw ConfigError("spaces", "expected an object");
    for (const auto& [name, value] : root["spaces"].items()) {
      doc.spaces.emplace(name, space_at(value, "spaces." + name, name, &doc.warnings));
    }
  }
  if (root.contains("sets")) {
    if (!root["sets"].is_object()) throw ConfigError("sets", "expected an object");
    for (const auto& [name, value] : root["sets"].items()) {
      doc.sets.emplace(name, set_at(value, "sets." + name));
    }
  }
  if (root.contains("functions")) {
    if (!root["functions"].is_object()) {
      throw ConfigError("functions", "expected an object");
    }
    for (const auto& [name, value] : root["functions"].items()) {
      doc.functions.emplace(
          name, function_at(value, "functions." + name, name, &doc.warnings));
    }
  }
  if (root.contains("instances")) {
    if (!root["instances"].is_object()) {
      throw ConfigError("instances", "expected an object");
    }
    for (const auto& [name, value] : root["instances"].items()) {
      doc.instances.emplace(
          name, instance_at(value, "instances." + name, name, doc, &doc.warnings));
    }
  }
  if (root.contains("certificates")) {
    if (!root["certificates"].is_object()) {
      throw ConfigError("certificates", "expected an object");
    }
    for (const auto& [name, value] : root["certificates"].items()) {
      doc.certificates.emplace(name, certificate_at(value, "certificates." + name));
    }
  }
  if (root.contains("duals")) {
    if (!root["duals"].is_object()) throw ConfigError("duals", "expected an object");
    for (const auto& [name, value] : root["duals"].items()) {
      doc.duals.emplace(name, dual_at(value, "duals." + name));
    }
  }
  for (const auto& [key, ignored] : root.items()) {
    (void)ignored;
    if (key != "policy" && key != "spaces" && key != "sets" && key != "functions" &&
        key != "instances" && key != "certificates" && key != "duals") {
      doc.warnings.push_back("unknown top-level key '" + key + "' ignored");
    }
  }
  return doc;
}

ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, "cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

std::string emit_config(const ConfigDocument& doc) {
  Json root = Json::object();
  if (doc.policy.has_value()) {
    Json policy = Json::object();
    policy["grid-step"] = to_string(doc.policy->grid_step);
    policy["offset"] = to_string(doc.policy->offset);
    policy["t-samples"] = doc.policy->t_sample_count;
    root["policy"] = std::move(policy);
  }
  if (!doc.spaces.empty()) {
    Json spaces = Json::object();
    for (const auto& [name, space] : doc.spaces) {
      Json entry = Json::object();
      entry["point-map"] = emit_pieces(space.point_map, kVarX);
      entry["direction"] = emit_pieces(space.direction, kVarXY);
      entry["curve"] = emit_pieces(space.curve, kVarXYT);
      spaces[name] = std::move(entry);
    }
    root["spaces"] = std::move(spaces);
  }
  if (!doc.sets.empty()) {
    Json sets = Json::object();
    for (const auto& [name, region] : doc.sets) sets[name] = emit_set(region);
    root["sets"] = std::move(sets);
  }
  if (!doc.functions.empty()) {
    Json functions = Json::object();
    for (const auto& [name, fn] : doc.functions) {
      functions[name] = emit_pieces(fn.map(), kVarX);
    }
    root["functions"] = std::move(functions);
  }
  if (!doc.instances.empty()) {
    Json instances = Json::object();
    for (const auto& [name, inst] : doc.instances) {
      Json entry = Json::object();
      entry["f"] = emit_function_list(inst.f);
      entry["g"] = emit_function_list(inst.g);
      if (!inst.h.empty()) entry["h"] = emit_function_list(inst.h);
      entry["set"] = emit_set(inst.k0);
      instances[name] = std::move(entry);
    }
    root["instances"] = std::move(instances);
  }
  if (!doc.certificates.empty()) {
    Json certificates = Json::object();
    for (const auto& [name, cert] : doc.certificates) {
      Json entry = Json::object();
      entry["base"] = to_string(cert.kbar);
      entry["zeta"] = emit_scalars(cert.zeta);
      entry["xi"] = emit_scalars(cert.xi);
      entry["kind"] = cert_kind_name(cert.kind);
      certificates[name] = std::move(entry);
    }
    root["certificates"] = std::move(certificates);
  }
  if (!doc.duals.empty()) {
    Json duals = Json::object();
    for (const auto& [name, dual] : doc.duals) {
      Json entry = Json::object();
      entry["alpha"] = emit_scalars(dual.alpha);
      entry["beta"] = emit_scalars(dual.beta);
      entry["lambda"] = to_string(dual.lambda);
      entry["zeta"] = emit_scalars(dual.zeta);
      duals[name] = std::move(entry);
    }
    root["duals"] = std::move(duals);
  }
  return root.dump(2) + "\n";
}

std::optional<EGeodesicSpace> find_space(const ConfigDocument* doc,
                                         const std::string& name) {
  if (doc != nullptr) {
    auto it = doc->spaces.find(name);
    if (it != doc->spaces.end()) return it->second;
  }
  std::string resolved = name;
  if (name == "ex1") resolved = "paper-example-1";
  if (name == "ex2") resolved = "paper-example-2";
  return builtin_space(resolved);
}

std::optional<Region> find_set(const ConfigDocument* doc, const std::string& name) {
  if (doc != nullptr) {
    auto it = doc->sets.find(name);
    if (it != doc->sets.end()) return it->second;
  }
  return builtin_set(name);
}

std::optional<ScalarFn> find_function(const ConfigDocument* doc,
                                      const std::string& name) {
  if (doc != nullptr) {
    auto it = doc->functions.find(name);
    if (it != doc->functions.end()) return it->second;
  }
  std::string resolved = name == "h" ? "example2-h" : name;
  return builtin_function(resolved);
}

std::optional<VfpInstance> find_instance(const ConfigDocument* doc,
                                         const std::string& name) {
  if (doc != nullptr) {
    auto it = doc->instances.find(name);
    if (it != doc->instances.end()) return it->second;
  }
  return builtin_instance(name);
}

const Certificate* find_certificate(const ConfigDocument* doc,
                                    const std::string& name) {
  if (doc == nullptr) return nullptr;
  auto it = doc->certificates.find(name);
  return it == doc->certificates.end() ? nullptr : &it->second;
}

const DualPoint* find_dual(const ConfigDocument* doc, const std::string& name) {
  if (doc == nullptr) return nullptr;
  auto it = doc->duals.find(name);
  return it == doc->duals.end() ? nullptr : &it->second;
}

std::optional<std::string> default_set_for_space(const std::string& space_label) {
  if (space_label == "paper-example-1") return "example1-A";
  if (space_label == "paper-example-2") return "example2-window";
  return std::nullopt;
}

}  // namespace geovex
