#include "geovex/scalar_fn.hpp"

#include <sstream>

#include "geovex/expr.hpp"

namespace geovex {

ScalarFn ScalarFn::exact(PiecewiseMap map, std::string label) {
  ScalarFn fn;
  fn.exact_ = std::move(map);
  fn.label_ = std::move(label);
  return fn;
}

ScalarFn ScalarFn::affine(const Scalar& constant, const Scalar& slope, std::string label) {
  std::vector<Scalar> coeffs{constant, slope};
  ScalarFn fn;
  fn.exact_ = PiecewiseMap::single(1, Poly::univariate(coeffs), label);
  fn.label_ = std::move(label);
  return fn;
}

ScalarFn ScalarFn::blackbox(std::function<double(double)> fn, std::string label) {
  ScalarFn result;
  result.numeric_ = std::move(fn);
  result.label_ = std::move(label);
  return result;
}

Scalar ScalarFn::eval(const Scalar& x) const {
  if (!exact_) {
    throw EvalError(EvalError::Kind::DomainMismatch,
                    "black-box function '" + label_ + "' has no exact evaluation");
  }
  const Scalar args[1] = {x};
  return exact_->eval(std::span<const Scalar>(args, 1));
}

double ScalarFn::eval_numeric(double x) const {
  if (exact_) {
    return to_double(eval(Scalar(x)));
  }
  return numeric_(x);
}

const PiecewiseMap& ScalarFn::map() const { return *exact_; }

std::vector<Scalar> ScalarFn::breakpoints() const {
  if (!exact_) return {};
  return exact_->breakpoints_in(0);
}

FnCombo FnCombo::of(const ScalarFn& fn) {
  FnCombo combo;
  combo.terms.emplace_back(scalar_one(), &fn);
  return combo;
}

FnCombo FnCombo::affine_shift(const Scalar& constant) {
  FnCombo combo;
  combo.constant = constant;
  return combo;
}

FnCombo& FnCombo::add(const Scalar& coeff, const ScalarFn& fn) {
  terms.emplace_back(coeff, &fn);
  return *this;
}

Scalar FnCombo::eval(const Scalar& x) const {
  Scalar total = constant;
  for (const auto& [coeff, fn] : terms) total += coeff * fn->eval(x);
  return total;
}

double FnCombo::eval_numeric(double x) const {
  double total = to_double(constant);
  for (const auto& [coeff, fn] : terms) total += to_double(coeff) * fn->eval_numeric(x);
  return total;
}

bool FnCombo::exact_mode() const {
  for (const auto& [coeff, fn] : terms) {
    if (!fn->exact_mode()) return false;
  }
  return true;
}

std::vector<Scalar> FnCombo::breakpoints() const {
  std::vector<Scalar> points;
  for (const auto& [coeff, fn] : terms) {
    auto sub = fn->breakpoints();
    points.insert(points.end(), sub.begin(), sub.end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::string FnCombo::describe() const {
  std::ostringstream out;
  bool first = true;
  if (sign(constant) != 0 || terms.empty()) {
    out << to_string(constant);
    first = false;
  }
  for (const auto& [coeff, fn] : terms) {
    if (!first) out << " + ";
    first = false;
    if (coeff != 1) out << to_string(coeff) << "*";
    out << (fn->label().empty() ? "fn" : fn->label());
  }
  return out.str();
}

namespace {

const std::string kVar1[] = {"x"};

// Step/ramp function shipped with the "paper-example-2" space: zero on
// (1,2], one above 2, and descending ramps 1-x on [0,1], 2-x below 0.
ScalarFn make_example2_h() {
  std::vector<MapPiece> pieces;
  pieces.push_back({parse_guard_expr("x > 1 && x <= 2", kVar1),
                    parse_poly_expr("0", kVar1)});
  pieces.push_back({parse_guard_expr("x > 2", kVar1), parse_poly_expr("1", kVar1)});
  pieces.push_back({parse_guard_expr("x >= 0 && x <= 1", kVar1),
                    parse_poly_expr("-x + 1", kVar1)});
  pieces.push_back({parse_guard_expr("x < 0", kVar1), parse_poly_expr("-x + 2", kVar1)});
  return ScalarFn::exact(PiecewiseMap(1, std::move(pieces), "example2-h"), "example2-h");
}

}  // namespace

std::optional<ScalarFn> builtin_function(const std::string& name) {
  if (name == "example2-h") return make_example2_h();
  return std::nullopt;
}

std::vector<std::string> builtin_function_names() { return {"example2-h"}; }

}  // namespace geovex
