#include "geovex/guard.hpp"

namespace geovex {

std::string relop_symbol(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Eq: return "==";
    case RelOp::Ne: return "!=";
    case RelOp::Ge: return ">=";
    case RelOp::Gt: return ">";
  }
  return "?";
}

bool relop_holds(RelOp op, int sign_of_lhs) {
  switch (op) {
    case RelOp::Lt: return sign_of_lhs < 0;
    case RelOp::Le: return sign_of_lhs <= 0;
    case RelOp::Eq: return sign_of_lhs == 0;
    case RelOp::Ne: return sign_of_lhs != 0;
    case RelOp::Ge: return sign_of_lhs >= 0;
    case RelOp::Gt: return sign_of_lhs > 0;
  }
  return false;
}

RelOp relop_negation(RelOp op) {
  switch (op) {
    case RelOp::Lt: return RelOp::Ge;
    case RelOp::Le: return RelOp::Gt;
    case RelOp::Eq: return RelOp::Ne;
    case RelOp::Ne: return RelOp::Eq;
    case RelOp::Ge: return RelOp::Lt;
    case RelOp::Gt: return RelOp::Le;
  }
  return RelOp::Eq;
}

bool Atom::holds(std::span<const Scalar> args) const {
  return relop_holds(op, sign(lhs.eval(args)));
}

bool Guard::holds(std::span<const Scalar> args) const {
  if (always) return true;
  for (const auto& conjunction : anyof) {
    bool all = true;
    for (const auto& atom : conjunction) {
      if (!atom.holds(args)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Guard Guard::everything() {
  Guard guard;
  guard.always = true;
  return guard;
}

Guard Guard::single(Atom atom) {
  Guard guard;
  guard.anyof.push_back({std::move(atom)});
  return guard;
}

}  // namespace geovex
