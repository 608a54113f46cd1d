#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geovex/scalar.hpp"

namespace geovex {

enum class Verdict { Holds, Fails, Inconclusive };

std::string verdict_name(Verdict verdict);

/// Exact analysis decides quantifiers over t in closed form; the sampled
/// mode only verifies the listed parameter samples (evaluations themselves
/// stay exact) and says so in the verdict.
enum class AnalysisMode { Exact, Sampled };

std::string mode_name(AnalysisMode mode);

/// Pointwise refutation data. Every field re-verifies by direct evaluation:
/// the curve endpoints come from the pair (k1, k2), t locates the failure,
/// and point/lhs/rhs restate what was evaluated there.
struct Witness {
  Scalar k1;
  Scalar k2;
  std::optional<Scalar> t;
  std::optional<Scalar> point;
  std::optional<Scalar> lhs;
  std::optional<Scalar> rhs;
  std::string condition;
};

/// Per-pair locality scales backing a Holds verdict: u bounds how long the
/// curve stays in the region, v (<= u) how long the defining inequality
/// holds, w the pseudo-class margin where applicable.
struct LocalityEntry {
  Scalar k1;
  Scalar k2;
  Scalar u;
  Scalar v;
  std::optional<Scalar> w;
};

struct LocalityCertificate {
  std::vector<LocalityEntry> entries;
};

struct CheckVerdict {
  Verdict verdict = Verdict::Inconclusive;
  AnalysisMode mode = AnalysisMode::Exact;
  std::optional<Witness> witness;
  LocalityCertificate locality;
  std::string detail;
};

/// Crosscheck outcome: `findings` lists observed inconsistencies (empty
/// means consistent), `inconclusive` lists questions the engines could not
/// settle; both use plain rendered sentences plus stable code prefixes.
struct ConsistencyFinding {
  std::string code;
  std::string detail;
};

struct ConsistencyReport {
  std::string name;
  std::vector<ConsistencyFinding> findings;
  std::vector<std::string> inconclusive;

  bool consistent() const { return findings.empty(); }
};

}  // namespace geovex
