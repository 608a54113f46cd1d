#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geovex/scalar.hpp"

namespace geovex {

/// Bounded real interval with independently open or closed endpoints.
/// Degenerate cases (empty by ordering, or open singleton) are detected by
/// `empty()` and dropped during normalization.
struct Interval {
  Scalar lo;
  Scalar hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool operator==(const Interval& other) const = default;

  bool empty() const;
  bool contains(const Scalar& point) const;
  bool is_singleton() const;
  static Interval point(const Scalar& value);
  static Interval closed(const Scalar& lo, const Scalar& hi);
  static Interval open(const Scalar& lo, const Scalar& hi);
};

/// Finite union of intervals, kept normalized: nonempty parts, sorted,
/// pairwise disjoint, and merged whenever they touch. The normal form makes
/// equality comparisons meaningful.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Interval> parts);
  static Region interval(Interval part);
  static Region point(const Scalar& value);
  static Region empty_region() { return Region(); }

  bool operator==(const Region& other) const = default;

  bool empty() const { return parts_.empty(); }
  bool contains(const Scalar& point) const;
  const std::vector<Interval>& parts() const { return parts_; }

  Region unite(const Region& other) const;
  Region intersect(const Region& other) const;
  Region subtract(const Region& other) const;

  /// True when `inner` lies inside this region.
  bool contains_interval(const Interval& inner) const;
  bool contains_region(const Region& inner) const;

  std::optional<Scalar> min_point() const;  // nullopt when empty or open at inf
  Scalar lower_bound() const;               // requires nonempty
  Scalar upper_bound() const;               // requires nonempty

  /// Endpoints of every part, ascending, deduplicated.
  std::vector<Scalar> endpoints() const;

  /// Smallest member >= probe... used for witness selection: the first
  /// point of the region at or after `from`, when one exists with a closed
  /// start; for open starts returns a point nudged inside by `nudge`.
  std::optional<Scalar> first_point_at_or_after(const Scalar& from, const Scalar& nudge) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Interval> parts_;
};

}  // namespace geovex
