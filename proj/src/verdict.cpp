#include "geovex/verdict.hpp"

namespace geovex {

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string mode_name(AnalysisMode mode) {
  switch (mode) {
    case AnalysisMode::Exact: return "exact";
    case AnalysisMode::Sampled: return "sampled";
  }
  return "?";
}

}  // namespace geovex
