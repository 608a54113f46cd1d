#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geovex/duality.hpp"
#include "geovex/setcheck.hpp"
#include "geovex/space.hpp"

namespace geovex {

/// Parsed configuration document. Every rational in the source is exact
/// ("p/q" strings or integer literals; floating literals are rejected).
/// `warnings` records non-fatal findings (overlapping interval guards,
/// ignored keys) in document order.
struct ConfigDocument {
  std::map<std::string, EGeodesicSpace> spaces;
  std::map<std::string, Region> sets;
  std::map<std::string, ScalarFn> functions;
  std::map<std::string, VfpInstance> instances;
  std::map<std::string, Certificate> certificates;
  std::map<std::string, DualPoint> duals;
  std::optional<ProbePolicy> policy;
  std::vector<std::string> warnings;
};

/// Parses a JSON configuration document. Malformed JSON raises ConfigError
/// whose `where` carries "origin:line:column"; schema violations and
/// dangling references raise ConfigError with the offending path.
ConfigDocument parse_config(const std::string& text,
                            const std::string& origin = "<config>");
ConfigDocument load_config(const std::string& path);

/// Canonical serialization: stable key order, "p/q" rationals, formula
/// guards. parse -> emit reaches a fixed point after one round, so
/// emit(parse(emit(parse(text)))) == emit(parse(text)).
std::string emit_config(const ConfigDocument& doc);

/// Lookups fall back to the built-in catalog when the document (which may
/// be null) does not define the name. Spaces accept the aliases "ex1" and
/// "ex2" for the built-in example spaces, and functions accept "h" for the
/// bundled step function "example2-h".
std::optional<EGeodesicSpace> find_space(const ConfigDocument* doc,
                                         const std::string& name);
std::optional<Region> find_set(const ConfigDocument* doc, const std::string& name);
std::optional<ScalarFn> find_function(const ConfigDocument* doc,
                                      const std::string& name);
std::optional<VfpInstance> find_instance(const ConfigDocument* doc,
                                         const std::string& name);
const Certificate* find_certificate(const ConfigDocument* doc,
                                    const std::string& name);
const DualPoint* find_dual(const ConfigDocument* doc, const std::string& name);

/// Companion set used when a command names a space but no set: the built-in
/// example spaces carry one; other spaces have no default.
std::optional<std::string> default_set_for_space(const std::string& space_label);

}  // namespace geovex
