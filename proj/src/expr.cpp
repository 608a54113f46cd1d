#include "geovex/expr.hpp"

#include <cctype>
#include <optional>
#include <variant>
#include <vector>

namespace geovex {

namespace {

enum class TokKind {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Lt,
  Le,
  EqEq,
  Ne,
  Ge,
  Gt,
  AndAnd,
  OrOr,
  End,
};

struct Token {
  TokKind kind;
  std::size_t column;  // 1-based
  Scalar number;
  std::string ident;
};

[[noreturn]] void fail(std::size_t column, const std::string& message) {
  throw ConfigError("column " + std::to_string(column), message);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto column = [&] { return i + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = column();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      Token tok{TokKind::Number, start, {}, {}};
      tok.number = Scalar(text.substr(begin, i - begin));
      tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      tokens.push_back({TokKind::Ident, start, {}, text.substr(begin, i - begin)});
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two('&', '&')) { tokens.push_back({TokKind::AndAnd, start, {}, {}}); i += 2; continue; }
    if (two('|', '|')) { tokens.push_back({TokKind::OrOr, start, {}, {}}); i += 2; continue; }
    if (two('<', '=')) { tokens.push_back({TokKind::Le, start, {}, {}}); i += 2; continue; }
    if (two('>', '=')) { tokens.push_back({TokKind::Ge, start, {}, {}}); i += 2; continue; }
    if (two('=', '=')) { tokens.push_back({TokKind::EqEq, start, {}, {}}); i += 2; continue; }
    if (two('!', '=')) { tokens.push_back({TokKind::Ne, start, {}, {}}); i += 2; continue; }
    TokKind kind;
    switch (c) {
      case '+': kind = TokKind::Plus; break;
      case '-': kind = TokKind::Minus; break;
      case '*': kind = TokKind::Star; break;
      case '/': kind = TokKind::Slash; break;
      case '^': kind = TokKind::Caret; break;
      case '(': kind = TokKind::LParen; break;
      case ')': kind = TokKind::RParen; break;
      case '<': kind = TokKind::Lt; break;
      case '>': kind = TokKind::Gt; break;
      default:
        fail(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, start, {}, {}});
    ++i;
  }
  tokens.push_back({TokKind::End, text.size() + 1, {}, {}});
  return tokens;
}

/// Boolean AST prior to DNF normalization.
struct BoolNode {
  enum class Kind { Leaf, And, Or } kind;
  Atom leaf;
  std::vector<BoolNode> children;
};

class Parser {
 public:
  Parser(const std::string& text, std::span<const std::string> var_names)
      : tokens_(lex(text)), var_names_(var_names) {}

  Poly parse_poly() {
    Poly result = parse_sum();
    expect_end();
    return result;
  }

  Guard parse_guard() {
    BoolNode root = parse_or();
    expect_end();
    Guard guard;
    guard.anyof = to_dnf(root);
    return guard;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool at(TokKind kind) const { return peek().kind == kind; }

  void expect_end() {
    if (!at(TokKind::End)) fail(peek().column, "unexpected trailing input");
  }

  static std::optional<RelOp> as_relop(TokKind kind) {
    switch (kind) {
      case TokKind::Lt: return RelOp::Lt;
      case TokKind::Le: return RelOp::Le;
      case TokKind::EqEq: return RelOp::Eq;
      case TokKind::Ne: return RelOp::Ne;
      case TokKind::Ge: return RelOp::Ge;
      case TokKind::Gt: return RelOp::Gt;
      default: return std::nullopt;
    }
  }

  Poly parse_sum() {
    Poly left = parse_product();
    while (at(TokKind::Plus) || at(TokKind::Minus)) {
      bool add = take().kind == TokKind::Plus;
      Poly right = parse_product();
      left = add ? left + right : left - right;
    }
    return left;
  }

  Poly parse_product() {
    Poly left = parse_unary();
    while (at(TokKind::Star) || at(TokKind::Slash)) {
      Token op = take();
      Poly right = parse_unary();
      if (op.kind == TokKind::Star) {
        left = left * right;
      } else {
        auto divisor = right.constant_value();
        if (!divisor) fail(op.column, "divisor must be a constant");
        if (sign(*divisor) == 0) fail(op.column, "division by zero");
        left = left.scaled(1 / *divisor);
      }
    }
    return left;
  }

  Poly parse_unary() {
    if (at(TokKind::Minus)) {
      std::size_t column = take().column;
      (void)column;
      return -parse_unary();
    }
    return parse_power();
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (at(TokKind::Caret)) {
      Token op = take();
      if (!at(TokKind::Number)) fail(peek().column, "exponent must be an integer literal");
      Token exponent = take();
      if (exponent.number.get_den() != 1 || sign(exponent.number) < 0) {
        fail(exponent.column, "exponent must be a nonnegative integer");
      }
      unsigned long value = exponent.number.get_num().get_ui();
      if (value > 16) fail(exponent.column, "exponent too large");
      (void)op;
      return base.pow(static_cast<unsigned>(value));
    }
    return base;
  }

  Poly parse_atom() {
    if (at(TokKind::Number)) {
      return Poly::constant(take().number);
    }
    if (at(TokKind::Ident)) {
      Token tok = take();
      for (std::size_t slot = 0; slot < var_names_.size(); ++slot) {
        if (var_names_[slot] == tok.ident) return Poly::variable(static_cast<int>(slot));
      }
      fail(tok.column, "unknown variable '" + tok.ident + "'");
    }
    if (at(TokKind::LParen)) {
      take();
      Poly inner = parse_sum();
      if (!at(TokKind::RParen)) fail(peek().column, "expected ')'");
      take();
      return inner;
    }
    fail(peek().column, "expected a number, variable, or '('");
  }

  BoolNode parse_or() {
    BoolNode left = parse_and();
    while (at(TokKind::OrOr)) {
      take();
      BoolNode node{BoolNode::Kind::Or, {}, {}};
      node.children.push_back(std::move(left));
      node.children.push_back(parse_and());
      left = std::move(node);
    }
    return left;
  }

  BoolNode parse_and() {
    BoolNode left = parse_comparison();
    while (at(TokKind::AndAnd)) {
      take();
      BoolNode node{BoolNode::Kind::And, {}, {}};
      node.children.push_back(std::move(left));
      node.children.push_back(parse_comparison());
      left = std::move(node);
    }
    return left;
  }

  // A comparison chain `a <= b <= c` desugars to `a <= b && b <= c`.
  // A parenthesized group is re-parsed as a full boolean expression when no
  // comparison operator follows it at the arithmetic level.
  BoolNode parse_comparison() {
    if (at(TokKind::LParen) && group_is_boolean()) {
      take();
      BoolNode inner = parse_or();
      if (!at(TokKind::RParen)) fail(peek().column, "expected ')'");
      take();
      return inner;
    }
    Poly first = parse_sum();
    auto op = as_relop(peek().kind);
    if (!op) fail(peek().column, "expected a comparison operator");
    BoolNode chain{BoolNode::Kind::And, {}, {}};
    Poly prev = std::move(first);
    while (auto next_op = as_relop(peek().kind)) {
      take();
      Poly rhs = parse_sum();
      BoolNode leaf{BoolNode::Kind::Leaf, Atom{prev - rhs, *next_op}, {}};
      chain.children.push_back(std::move(leaf));
      prev = std::move(rhs);
    }
    if (chain.children.size() == 1) return std::move(chain.children.front());
    return chain;
  }

  /// Looks ahead from a '(' to decide whether the group encloses boolean
  /// structure (&&, || or a comparison at depth 1).
  bool group_is_boolean() const {
    int depth = 0;
    for (std::size_t j = pos_; j < tokens_.size(); ++j) {
      TokKind kind = tokens_[j].kind;
      if (kind == TokKind::LParen) ++depth;
      if (kind == TokKind::RParen) {
        --depth;
        if (depth == 0) return false;
      }
      if (depth == 1 && (kind == TokKind::AndAnd || kind == TokKind::OrOr ||
                         as_relop(kind).has_value())) {
        return true;
      }
      if (kind == TokKind::End) return false;
    }
    return false;
  }

  static std::vector<Conjunction> to_dnf(const BoolNode& node) {
    switch (node.kind) {
      case BoolNode::Kind::Leaf:
        return {{node.leaf}};
      case BoolNode::Kind::Or: {
        std::vector<Conjunction> result;
        for (const auto& child : node.children) {
          auto sub = to_dnf(child);
          result.insert(result.end(), sub.begin(), sub.end());
        }
        return result;
      }
      case BoolNode::Kind::And: {
        std::vector<Conjunction> result{{}};
        for (const auto& child : node.children) {
          auto sub = to_dnf(child);
          std::vector<Conjunction> next;
          for (const auto& left : result) {
            for (const auto& right : sub) {
              Conjunction merged = left;
              merged.insert(merged.end(), right.begin(), right.end());
              next.push_back(std::move(merged));
            }
          }
          result = std::move(next);
        }
        return result;
      }
    }
    return {};
  }

  std::vector<Token> tokens_;
  std::span<const std::string> var_names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly_expr(const std::string& text, std::span<const std::string> var_names) {
  return Parser(text, var_names).parse_poly();
}

Guard parse_guard_expr(const std::string& text, std::span<const std::string> var_names) {
  return Parser(text, var_names).parse_guard();
}

}  // namespace geovex
