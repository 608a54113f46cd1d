#pragma once

#include <span>
#include <string>
#include <vector>

#include "geovex/poly.hpp"

namespace geovex {

enum class RelOp { Lt, Le, Eq, Ne, Ge, Gt };

std::string relop_symbol(RelOp op);
bool relop_holds(RelOp op, int sign_of_lhs);
/// The relation satisfied by exactly the complementary sign set.
RelOp relop_negation(RelOp op);

/// One comparison `poly(args) op 0`.
struct Atom {
  Poly lhs;
  RelOp op;

  bool holds(std::span<const Scalar> args) const;
};

/// Conjunction of atoms; empty means "always".
using Conjunction = std::vector<Atom>;

/// Guard in disjunctive normal form: any satisfied conjunction admits the
/// piece. An empty alternative list with `always == true` admits everything.
struct Guard {
  std::vector<Conjunction> anyof;
  bool always = false;

  bool holds(std::span<const Scalar> args) const;

  static Guard everything();
  static Guard single(Atom atom);
};

}  // namespace geovex
