#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geovex/piecewise.hpp"
#include "geovex/region.hpp"

namespace geovex {

/// Real-valued function of one variable. Exact functions are piecewise
/// polynomials with order-sensitive guards (argument slot 0); black-box
/// functions evaluate through doubles only and are admitted solely by the
/// numeric cross-check paths.
class ScalarFn {
 public:
  ScalarFn() = default;

  static ScalarFn exact(PiecewiseMap map, std::string label = "");
  /// constant + slope * x
  static ScalarFn affine(const Scalar& constant, const Scalar& slope,
                         std::string label = "");
  static ScalarFn blackbox(std::function<double(double)> fn, std::string label = "");

  bool exact_mode() const { return exact_.has_value(); }
  const std::string& label() const { return label_; }

  Scalar eval(const Scalar& x) const;  // throws EvalError on black-box functions
  double eval_numeric(double x) const;

  const PiecewiseMap& map() const;  // exact mode only

  /// Guard switch points, ascending; empty for black-box functions.
  std::vector<Scalar> breakpoints() const;

 private:
  std::optional<PiecewiseMap> exact_;
  std::function<double(double)> numeric_;
  std::string label_;
};

/// Affine combination of scalar functions: constant + sum coeff_i * fn_i.
/// Class checkers and semiderivatives accept combos so that derived
/// functionals (f - lambda*g, dual aggregates) never need piece algebra.
struct FnCombo {
  Scalar constant = Scalar(0);
  std::vector<std::pair<Scalar, const ScalarFn*>> terms;

  static FnCombo of(const ScalarFn& fn);
  static FnCombo affine_shift(const Scalar& constant);

  FnCombo& add(const Scalar& coeff, const ScalarFn& fn);
  Scalar eval(const Scalar& x) const;
  double eval_numeric(double x) const;
  bool exact_mode() const;
  std::vector<Scalar> breakpoints() const;
  std::string describe() const;
};

/// Built-in functions by name; currently the step/ramp function bundled
/// with the "paper-example-2" space ("example2-h"). Returns nullopt for
/// unknown names.
std::optional<ScalarFn> builtin_function(const std::string& name);
std::vector<std::string> builtin_function_names();

}  // namespace geovex
