#pragma once

#include <span>
#include <string>
#include <vector>

#include "geovex/errors.hpp"
#include "geovex/guard.hpp"

namespace geovex {

/// One guarded branch of a piecewise map.
struct MapPiece {
  Guard when;
  Poly body;
};

/// Piecewise polynomial map of fixed arity (1 to 3 arguments). Branches are
/// tried in declaration order and the FIRST matching guard wins; overlapping
/// guards are therefore legal and order-significant.
class PiecewiseMap {
 public:
  PiecewiseMap() = default;
  PiecewiseMap(int arity, std::vector<MapPiece> pieces, std::string label = "");

  int arity() const { return arity_; }
  const std::vector<MapPiece>& pieces() const { return pieces_; }
  const std::string& label() const { return label_; }

  /// First-match evaluation. Throws EvalError{NoPieceMatches} when no guard
  /// admits the arguments.
  Scalar eval(std::span<const Scalar> args) const;
  /// Index of the first matching piece, or -1.
  int match_index(std::span<const Scalar> args) const;

  /// Exact rationals at which a single-argument map can switch branches:
  /// roots of every guard atom that mentions only `slot`. Used to seed probe
  /// sets with breakpoints.
  std::vector<Scalar> breakpoints_in(int slot) const;

  static PiecewiseMap single(int arity, Poly body, std::string label = "");

 private:
  int arity_ = 0;
  std::vector<MapPiece> pieces_;
  std::string label_;
};

}  // namespace geovex
