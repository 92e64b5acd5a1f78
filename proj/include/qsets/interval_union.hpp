#pragma once

#include <string>
#include <vector>

#include "qsets/rational.hpp"

namespace qsets {

/// Closed interval [lo, hi]; an infinite end denotes an unbounded ray.
struct Interval {
  Endpoint lo;
  Endpoint hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of disjoint closed intervals of the real line, together
/// with the scale δ > 0 of the relation u ≠ v ⇔ |u − v| ≥ δ.
///
/// Only finite unions are representable; that covers every set produced by
/// the operations below starting from finite input.
class IntervalUnion {
 public:
  /// Sorts and merges overlapping or touching intervals. Throws InputError
  /// for δ ≤ 0, lo > hi, or an interval starting at +∞ / ending at −∞.
  IntervalUnion(Rational delta, std::vector<Interval> intervals);

  static IntervalUnion empty(Rational delta) { return IntervalUnion(std::move(delta), {}); }
  static IntervalUnion real_line(Rational delta);
  static IntervalUnion points(Rational delta, const std::vector<Rational>& xs);

  const Rational& delta() const noexcept { return delta_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool is_empty() const noexcept { return intervals_.empty(); }
  bool is_real_line() const;
  bool contains(const Rational& x) const;
  bool is_subset_of(const IntervalUnion& other) const;
  /// Smallest and largest endpoints; PreconditionError when empty.
  Endpoint inf() const;
  Endpoint sup() const;

  IntervalUnion intersect(const IntervalUnion& other) const;
  IntervalUnion unite(const IntervalUnion& other) const;
  /// Image under x ↦ c·x (c > 0); δ scales too.
  IntervalUnion scaled(const Rational& c) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  void require_same_delta(const IntervalUnion& other) const;

  Rational delta_;
  std::vector<Interval> intervals_;
};

std::string to_string(const IntervalUnion& u);

/// {y : |y − z| ≥ δ for all z ∈ U}.
IntervalUnion qcomp_interval(const IntervalUnion& u);
IntervalUnion closure_interval(const IntervalUnion& u);
/// Consecutive intervals are at least 2δ apart.
bool is_Q1(const IntervalUnion& u);
/// (S^⊥ ∩ T)^⊥ ∩ T. Throws PreconditionError unless S ⊆ T.
IntervalUnion relative_closure_interval(const IntervalUnion& t, const IntervalUnion& s);

}  // namespace qsets
