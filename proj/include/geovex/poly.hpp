#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geovex/scalar.hpp"

namespace geovex {

inline constexpr int kMaxVars = 3;

using Exponents = std::array<unsigned, kMaxVars>;

/// Sparse polynomial in at most three variables with exact rational
/// coefficients. Variable slots are positional; the owning map decides what
/// they mean (for curve maps: slot 0 = target endpoint, slot 1 = base
/// endpoint, slot 2 = curve parameter). Univariate polynomials use slot 0.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Scalar value);
  static Poly variable(int slot);
  /// Dense univariate build from coefficients c0 + c1*v + c2*v^2 + ...
  /// in the given slot.
  static Poly univariate(std::span<const Scalar> coeffs, int slot = 0);

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  bool operator==(const Poly& other) const = default;

  Poly scaled(const Scalar& factor) const;
  Poly pow(unsigned exponent) const;

  bool is_zero() const;
  /// Constant value if the polynomial has no variable term.
  std::optional<Scalar> constant_value() const;

  int degree_in(int slot) const;
  /// True when every term uses only `slot`.
  bool univariate_in(int slot) const;
  bool uses_slot(int slot) const;

  /// Full evaluation; args.size() must cover every used slot.
  Scalar eval(std::span<const Scalar> args) const;
  Scalar eval1(const Scalar& arg) const;

  /// Replaces `slot` by a constant, producing a polynomial in the rest.
  Poly substitute(int slot, const Scalar& value) const;
  /// Replaces `slot` by another polynomial.
  Poly substitute(int slot, const Poly& replacement) const;
  /// Renames variable `from` to `to` (to-slot must be unused).
  Poly rename(int from, int to) const;

  Poly derivative(int slot) const;

  /// Dense coefficient vector (constant first) when univariate in `slot`;
  /// nullopt if other slots appear. The zero polynomial yields {0}.
  std::optional<std::vector<Scalar>> dense_coeffs(int slot) const;

  std::string to_string(std::span<const std::string> names) const;

  const std::map<Exponents, Scalar>& terms() const { return terms_; }

 private:
  void add_term(const Exponents& exps, const Scalar& coeff);
  std::map<Exponents, Scalar> terms_;
};

}  // namespace geovex
