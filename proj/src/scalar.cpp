#include "geovex/scalar.hpp"

#include <cctype>

namespace geovex {

Scalar make_scalar(long num, long den) {
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::optional<Scalar> parse_scalar(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    return std::nullopt;
  }
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (pos >= text.size()) return std::nullopt;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size() || pos == den_start) return std::nullopt;
  }
  Scalar value;
  if (value.set_str(text, 10) != 0) return std::nullopt;
  if (value.get_den() == 0) return std::nullopt;
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

double to_double(const Scalar& value) { return value.get_d(); }

std::optional<Scalar> rational_sqrt(const Scalar& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  Scalar root(num_root, den_root);
  root.canonicalize();
  return root;
}

int sign(const Scalar& value) { return sgn(value); }

const Scalar& scalar_zero() {
  static const Scalar zero(0);
  return zero;
}

const Scalar& scalar_one() {
  static const Scalar one(1);
  return one;
}

}  // namespace geovex
