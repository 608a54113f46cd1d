#include "geovex/solve.hpp"

#include <algorithm>

namespace geovex {

namespace {

std::vector<Scalar> trimmed(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> result = coeffs;
  while (!result.empty() && sign(result.back()) == 0) result.pop_back();
  return result;
}

Scalar eval_dense(const std::vector<Scalar>& coeffs, const Scalar& at) {
  Scalar total = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) total = total * at + *it;
  return total;
}

}  // namespace

std::vector<Scalar> poly_roots(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = trimmed(coeffs);
  if (c.empty()) {
    throw InexactAnalysis("zero polynomial has no isolated roots");
  }
  if (c.size() == 1) return {};
  if (c.size() == 2) return {-c[0] / c[1]};
  if (c.size() == 3) {
    Scalar discriminant = c[1] * c[1] - 4 * c[2] * c[0];
    int dsign = sign(discriminant);
    if (dsign < 0) return {};
    if (dsign == 0) return {-c[1] / (2 * c[2])};
    auto root = rational_sqrt(discriminant);
    if (!root) {
      throw InexactAnalysis("irrational quadratic roots");
    }
    Scalar r1 = (-c[1] - *root) / (2 * c[2]);
    Scalar r2 = (-c[1] + *root) / (2 * c[2]);
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
  }
  throw InexactAnalysis("degree above two");
}

Region solve_relation(const Poly& p, int slot, RelOp op, const Interval& within) {
  if (within.empty()) return Region();
  auto coeffs = p.dense_coeffs(slot);
  if (!coeffs) {
    throw InexactAnalysis("relation polynomial is not univariate");
  }
  std::vector<Scalar> c = trimmed(*coeffs);
  if (c.empty() || c.size() == 1) {
    int s = c.empty() ? 0 : sign(c[0]);
    return relop_holds(op, s) ? Region::interval(within) : Region();
  }

  std::vector<Scalar> breakpoints{within.lo, within.hi};
  for (const Scalar& root : poly_roots(c)) {
    if (root > within.lo && root < within.hi) breakpoints.push_back(root);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<Interval> solution;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Scalar& b = breakpoints[i];
    if (within.contains(b) && relop_holds(op, sign(eval_dense(c, b)))) {
      solution.push_back(Interval::point(b));
    }
    if (i + 1 < breakpoints.size()) {
      const Scalar& next = breakpoints[i + 1];
      if (b == next) continue;
      Scalar mid = (b + next) / 2;
      if (relop_holds(op, sign(eval_dense(c, mid)))) {
        solution.push_back(Interval::open(b, next));
      }
    }
  }
  return Region(std::move(solution));
}

Region guard_region(const Guard& guard, int slot, const Interval& within) {
  if (within.empty()) return Region();
  if (guard.always) return Region::interval(within);
  Region result;
  for (const auto& conjunction : guard.anyof) {
    Region conj = Region::interval(within);
    for (const auto& atom : conjunction) {
      conj = conj.intersect(solve_relation(atom.lhs, slot, atom.op, within));
      if (conj.empty()) break;
    }
    result = result.unite(conj);
  }
  return result;
}

}  // namespace geovex
