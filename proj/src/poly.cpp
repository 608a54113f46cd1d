#include "geovex/poly.hpp"

#include <cassert>
#include <sstream>

namespace geovex {

namespace {
const Exponents kConstExps{0, 0, 0};
}

Poly Poly::constant(Scalar value) {
  Poly p;
  if (sign(value) != 0) p.terms_.emplace(kConstExps, std::move(value));
  return p;
}

Poly Poly::variable(int slot) {
  assert(slot >= 0 && slot < kMaxVars);
  Poly p;
  Exponents exps{0, 0, 0};
  exps[static_cast<std::size_t>(slot)] = 1;
  p.terms_.emplace(exps, scalar_one());
  return p;
}

Poly Poly::univariate(std::span<const Scalar> coeffs, int slot) {
  Poly p;
  Exponents exps{0, 0, 0};
  for (std::size_t deg = 0; deg < coeffs.size(); ++deg) {
    exps[static_cast<std::size_t>(slot)] = static_cast<unsigned>(deg);
    p.add_term(exps, coeffs[deg]);
  }
  return p;
}

void Poly::add_term(const Exponents& exps, const Scalar& coeff) {
  if (sign(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& other) const {
  Poly result = *this;
  result += other;
  return result;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

Poly Poly::operator-(const Poly& other) const {
  Poly result = *this;
  result -= other;
  return result;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

Poly Poly::operator-() const {
  Poly result;
  for (const auto& [exps, coeff] : terms_) result.terms_.emplace(exps, -coeff);
  return result;
}

Poly Poly::operator*(const Poly& other) const {
  Poly result;
  for (const auto& [le, lc] : terms_) {
    for (const auto& [re, rc] : other.terms_) {
      Exponents exps;
      for (int i = 0; i < kMaxVars; ++i) exps[i] = le[i] + re[i];
      result.add_term(exps, lc * rc);
    }
  }
  return result;
}

Poly Poly::scaled(const Scalar& factor) const {
  Poly result;
  if (sign(factor) == 0) return result;
  for (const auto& [exps, coeff] : terms_) result.terms_.emplace(exps, coeff * factor);
  return result;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(scalar_one());
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

bool Poly::is_zero() const { return terms_.empty(); }

std::optional<Scalar> Poly::constant_value() const {
  if (terms_.empty()) return scalar_zero();
  if (terms_.size() == 1 && terms_.begin()->first == kConstExps) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

int Poly::degree_in(int slot) const {
  int degree = 0;
  for (const auto& [exps, coeff] : terms_) {
    degree = std::max(degree, static_cast<int>(exps[static_cast<std::size_t>(slot)]));
  }
  return degree;
}

bool Poly::univariate_in(int slot) const {
  for (const auto& [exps, coeff] : terms_) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (i != slot && exps[static_cast<std::size_t>(i)] != 0) return false;
    }
  }
  return true;
}

bool Poly::uses_slot(int slot) const { return degree_in(slot) > 0; }

Scalar Poly::eval(std::span<const Scalar> args) const {
  Scalar total = 0;
  for (const auto& [exps, coeff] : terms_) {
    Scalar term = coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      assert(static_cast<std::size_t>(i) < args.size());
      Scalar base = args[static_cast<std::size_t>(i)];
      for (unsigned k = 0; k < e; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

Scalar Poly::eval1(const Scalar& arg) const {
  const Scalar args[1] = {arg};
  return eval(std::span<const Scalar>(args, 1));
}

Poly Poly::substitute(int slot, const Scalar& value) const {
  Poly result;
  for (const auto& [exps, coeff] : terms_) {
    Scalar factor = coeff;
    unsigned e = exps[static_cast<std::size_t>(slot)];
    for (unsigned k = 0; k < e; ++k) factor *= value;
    Exponents reduced = exps;
    reduced[static_cast<std::size_t>(slot)] = 0;
    result.add_term(reduced, factor);
  }
  return result;
}

Poly Poly::substitute(int slot, const Poly& replacement) const {
  Poly result;
  for (const auto& [exps, coeff] : terms_) {
    Exponents reduced = exps;
    reduced[static_cast<std::size_t>(slot)] = 0;
    Poly term;
    term.terms_.emplace(reduced, coeff);
    Poly factor = replacement.pow(exps[static_cast<std::size_t>(slot)]);
    result += term * factor;
  }
  return result;
}

Poly Poly::rename(int from, int to) const {
  if (from == to) return *this;
  Poly result;
  for (const auto& [exps, coeff] : terms_) {
    assert(exps[static_cast<std::size_t>(to)] == 0);
    Exponents renamed = exps;
    renamed[static_cast<std::size_t>(to)] = exps[static_cast<std::size_t>(from)];
    renamed[static_cast<std::size_t>(from)] = 0;
    result.add_term(renamed, coeff);
  }
  return result;
}

Poly Poly::derivative(int slot) const {
  Poly result;
  for (const auto& [exps, coeff] : terms_) {
    unsigned e = exps[static_cast<std::size_t>(slot)];
    if (e == 0) continue;
    Exponents lowered = exps;
    lowered[static_cast<std::size_t>(slot)] = e - 1;
    result.add_term(lowered, coeff * make_scalar(static_cast<long>(e)));
  }
  return result;
}

std::optional<std::vector<Scalar>> Poly::dense_coeffs(int slot) const {
  if (!univariate_in(slot)) return std::nullopt;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(degree_in(slot)) + 1, scalar_zero());
  for (const auto& [exps, coeff] : terms_) {
    coeffs[exps[static_cast<std::size_t>(slot)]] = coeff;
  }
  return coeffs;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    Scalar magnitude = abs(coeff);
    if (first) {
      if (sign(coeff) < 0) out << "-";
      first = false;
    } else {
      out << (sign(coeff) < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exps[static_cast<std::size_t>(i)] != 0) has_var = true;
    }
    if (!has_var || magnitude != 1) {
      out << geovex::to_string(magnitude);
      if (has_var) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << (static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                         : "v" + std::to_string(i));
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace geovex
