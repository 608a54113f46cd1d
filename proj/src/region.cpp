#include "geovex/region.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace geovex {

bool Interval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

bool Interval::contains(const Scalar& point) const {
  if (point < lo || point > hi) return false;
  if (point == lo && !lo_closed) return false;
  if (point == hi && !hi_closed) return false;
  return true;
}

bool Interval::is_singleton() const { return lo == hi && lo_closed && hi_closed; }

Interval Interval::point(const Scalar& value) { return Interval{value, value, true, true}; }

Interval Interval::closed(const Scalar& lo, const Scalar& hi) {
  return Interval{lo, hi, true, true};
}

Interval Interval::open(const Scalar& lo, const Scalar& hi) {
  return Interval{lo, hi, false, false};
}

Region::Region(std::vector<Interval> parts) : parts_(std::move(parts)) { normalize(); }

Region Region::interval(Interval part) { return Region({std::move(part)}); }

Region Region::point(const Scalar& value) { return Region({Interval::point(value)}); }

void Region::normalize() {
  std::vector<Interval> kept;
  for (auto& part : parts_) {
    if (!part.empty()) kept.push_back(std::move(part));
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;
    if (a.hi != b.hi) return a.hi < b.hi;
    return b.hi_closed;
  });
  std::vector<Interval> merged;
  for (auto& part : kept) {
    if (merged.empty()) {
      merged.push_back(std::move(part));
      continue;
    }
    Interval& last = merged.back();
    bool joins = part.lo < last.hi ||
                 (part.lo == last.hi && (part.lo_closed || last.hi_closed));
    if (joins) {
      if (part.hi > last.hi) {
        last.hi = part.hi;
        last.hi_closed = part.hi_closed;
      } else if (part.hi == last.hi) {
        last.hi_closed = last.hi_closed || part.hi_closed;
      }
      if (part.lo == last.lo) last.lo_closed = last.lo_closed || part.lo_closed;
    } else {
      merged.push_back(std::move(part));
    }
  }
  parts_ = std::move(merged);
}

bool Region::contains(const Scalar& point) const {
  for (const auto& part : parts_) {
    if (part.contains(point)) return true;
    if (part.lo > point) break;
  }
  return false;
}

Region Region::unite(const Region& other) const {
  std::vector<Interval> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Region(std::move(parts));
}

namespace {

std::optional<Interval> intersect_parts(const Interval& a, const Interval& b) {
  Interval result;
  if (a.lo > b.lo) {
    result.lo = a.lo;
    result.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    result.lo = b.lo;
    result.lo_closed = b.lo_closed;
  } else {
    result.lo = a.lo;
    result.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    result.hi = a.hi;
    result.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    result.hi = b.hi;
    result.hi_closed = b.hi_closed;
  } else {
    result.hi = a.hi;
    result.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (result.empty()) return std::nullopt;
  return result;
}

}  // namespace

Region Region::intersect(const Region& other) const {
  std::vector<Interval> parts;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      if (auto piece = intersect_parts(a, b)) parts.push_back(*piece);
    }
  }
  return Region(std::move(parts));
}

Region Region::subtract(const Region& other) const {
  std::vector<Interval> current = parts_;
  for (const auto& cut : other.parts_) {
    std::vector<Interval> next;
    for (const auto& part : current) {
      if (cut.hi < part.lo || cut.lo > part.hi) {
        next.push_back(part);
        continue;
      }
      // Left remainder: points of `part` strictly before `cut` begins.
      Interval left{part.lo, cut.lo, part.lo_closed, !cut.lo_closed};
      if (!left.empty() && left.hi <= part.hi) {
        if (left.hi == part.hi) left.hi_closed = left.hi_closed && part.hi_closed;
        if (!left.empty()) next.push_back(left);
      }
      // Right remainder: points of `part` strictly after `cut` ends.
      Interval right{cut.hi, part.hi, !cut.hi_closed, part.hi_closed};
      if (!right.empty() && right.lo >= part.lo) {
        if (right.lo == part.lo) right.lo_closed = right.lo_closed && part.lo_closed;
        if (!right.empty()) next.push_back(right);
      }
    }
    current = std::move(next);
  }
  return Region(std::move(current));
}

bool Region::contains_interval(const Interval& inner) const {
  if (inner.empty()) return true;
  Region leftover = Region::interval(inner).subtract(*this);
  return leftover.empty();
}

bool Region::contains_region(const Region& inner) const {
  return inner.subtract(*this).empty();
}

std::optional<Scalar> Region::min_point() const {
  if (parts_.empty()) return std::nullopt;
  const Interval& first = parts_.front();
  if (first.lo_closed) return first.lo;
  return std::nullopt;
}

Scalar Region::lower_bound() const {
  assert(!parts_.empty());
  return parts_.front().lo;
}

Scalar Region::upper_bound() const {
  assert(!parts_.empty());
  return parts_.back().hi;
}

std::vector<Scalar> Region::endpoints() const {
  std::vector<Scalar> points;
  for (const auto& part : parts_) {
    points.push_back(part.lo);
    points.push_back(part.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::optional<Scalar> Region::first_point_at_or_after(const Scalar& from,
                                                      const Scalar& nudge) const {
  for (const auto& part : parts_) {
    if (part.hi < from || (part.hi == from && !part.hi_closed)) continue;
    if (part.contains(from)) return from;
    Scalar start = std::max(part.lo, from);
    if (part.contains(start)) return start;
    // Open start: step inside without crossing the part's end.
    Scalar candidate = start + std::min(nudge, Scalar((part.hi - start) / 2));
    if (part.contains(candidate)) return candidate;
  }
  return std::nullopt;
}

std::string Region::to_string() const {
  if (parts_.empty()) return "{}";
  std::ostringstream out;
  bool first = true;
  for (const auto& part : parts_) {
    if (!first) out << " u ";
    first = false;
    if (part.is_singleton()) {
      out << "{" << geovex::to_string(part.lo) << "}";
      continue;
    }
    out << (part.lo_closed ? "[" : "(") << geovex::to_string(part.lo) << ", "
        << geovex::to_string(part.hi) << (part.hi_closed ? "]" : ")");
  }
  return out.str();
}

}  // namespace geovex
