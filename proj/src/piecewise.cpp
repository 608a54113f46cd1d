#include "geovex/piecewise.hpp"

#include <algorithm>
#include <sstream>

#include "geovex/solve.hpp"

namespace geovex {

PiecewiseMap::PiecewiseMap(int arity, std::vector<MapPiece> pieces, std::string label)
    : arity_(arity), pieces_(std::move(pieces)), label_(std::move(label)) {}

Scalar PiecewiseMap::eval(std::span<const Scalar> args) const {
  int index = match_index(args);
  if (index < 0) {
    std::ostringstream message;
    message << (label_.empty() ? "piecewise map" : label_) << ": no piece matches (";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) message << ", ";
      message << to_string(args[i]);
    }
    message << ")";
    throw EvalError(EvalError::Kind::NoPieceMatches, message.str());
  }
  return pieces_[static_cast<std::size_t>(index)].body.eval(args);
}

int PiecewiseMap::match_index(std::span<const Scalar> args) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].when.holds(args)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Scalar> PiecewiseMap::breakpoints_in(int slot) const {
  std::vector<Scalar> points;
  for (const auto& piece : pieces_) {
    for (const auto& conjunction : piece.when.anyof) {
      for (const auto& atom : conjunction) {
        if (!atom.lhs.univariate_in(slot)) continue;
        auto coeffs = atom.lhs.dense_coeffs(slot);
        if (!coeffs) continue;
        try {
          for (const Scalar& root : poly_roots(*coeffs)) points.push_back(root);
        } catch (const InexactAnalysis&) {
          // Irrational or high-degree switch points cannot seed exact probes.
        }
      }
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

PiecewiseMap PiecewiseMap::single(int arity, Poly body, std::string label) {
  std::vector<MapPiece> pieces;
  pieces.push_back(MapPiece{Guard::everything(), std::move(body)});
  return PiecewiseMap(arity, std::move(pieces), std::move(label));
}

}  // namespace geovex
