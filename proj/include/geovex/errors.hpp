#pragma once

#include <stdexcept>
#include <string>

namespace geovex {

/// Raised when an evaluation request cannot be answered exactly:
/// a point outside every piece guard, a curve parameter outside [0,1],
/// a nonpositive denominator in a ratio objective, and similar.
class EvalError : public std::runtime_error {
 public:
  enum class Kind {
    NoPieceMatches,
    ParameterOutOfRange,
    NonpositiveDenominator,
    DomainMismatch,
  };

  EvalError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised by configuration loading: malformed documents, bad expressions,
/// dangling references. `where` carries a human-readable location
/// (JSON pointer plus line/column where applicable).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, std::string message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// A documented precondition of an operation fails for the given inputs
/// (for example, a derivative base point that the point map does not fix).
/// `code` is a stable machine-readable tag.
class PremiseError : public std::runtime_error {
 public:
  PremiseError(std::string code, std::string message)
      : std::runtime_error(std::move(message)), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Internal signal: the exact analysis toolkit cannot decide a question in
/// closed form (degree above two, or irrational roots). Checker engines
/// catch this and re-run the affected question on the sampled-parameter
/// path; it never escapes a public entry point.
class InexactAnalysis : public std::runtime_error {
 public:
  explicit InexactAnalysis(std::string message)
      : std::runtime_error(std::move(message)) {}
};

}  // namespace geovex
