#pragma once

#include <string>
#include <vector>

#include "qsets/rational.hpp"

namespace qsets {

/// Circumference of the [0, 3) chart of the real projective line.
inline const Rational kCircumference{3};

/// Reduces θ modulo 3 into [0, 3).
Rational kappa(const Rational& theta);

/// A point of the [0, 3) chart; θ-distance in [1, 2] means q-distinct.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(const Rational& theta) : theta_(kappa(theta)) {}

  const Rational& theta() const noexcept { return theta_; }
  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  Rational theta_{0};
};

/// Members of Q(ℝP¹, ≠_ht): ∅, the whole line, or a closed arc
/// κ([start, start + length]) with 0 ≤ length ≤ 1.
class ArcSet {
 public:
  enum class Kind { Empty, Arc, Full };

  static ArcSet empty() { return ArcSet(Kind::Empty, CirclePoint(), Rational(0)); }
  static ArcSet full() { return ArcSet(Kind::Full, CirclePoint(), Rational(0)); }
  /// Throws InputError unless 0 ≤ length ≤ 1.
  static ArcSet arc(const Rational& start, const Rational& length);
  static ArcSet point(const Rational& theta) { return arc(theta, Rational(0)); }

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  bool is_full() const noexcept { return kind_ == Kind::Full; }
  bool is_arc() const noexcept { return kind_ == Kind::Arc; }
  bool is_point() const noexcept { return is_arc() && length_ == 0; }
  const CirclePoint& start() const noexcept { return start_; }
  const Rational& length() const noexcept { return length_; }
  /// start + length reduced modulo 3.
  CirclePoint end() const { return CirclePoint(start_.theta() + length_); }

  bool contains(const CirclePoint& p) const;
  bool is_subset_of(const ArcSet& other) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  ArcSet(Kind k, CirclePoint s, Rational l) : kind_(k), start_(std::move(s)), length_(std::move(l)) {}

  Kind kind_ = Kind::Empty;
  CirclePoint start_;
  Rational length_{0};
};

std::string to_string(const ArcSet& a);

/// Points whose circular distance to every point of A lies in [1, 2].
ArcSet qcomp_arc(const ArcSet& a);
/// Double q-complement of a finite point set; Empty for an empty list.
ArcSet closure_points(const std::vector<CirclePoint>& points);

/// Set intersection (the lattice meet). Throws std::logic_error if the
/// intersection of two arcs ever has two components.
ArcSet arc_meet(const ArcSet& a, const ArcSet& b);
/// Closure of the union, computed as (A^⊥ ∩ B^⊥)^⊥.
ArcSet arc_join(const ArcSet& a, const ArcSet& b);

/// S = (S ∧ T) ∨ (S ∧ T′).
bool arc_commutes(const ArcSet& s, const ArcSet& t);
/// S ∩ (S∩T)^⊥ ⊆ (T ∩ (S∩T)^⊥)^⊥.
bool arc_qcommutes(const ArcSet& s, const ArcSet& t);

/// Closed-form case descriptions for proper arcs (neither ∅ nor the whole
/// line). Length < 1: S ⊆ T or S ⊆ T^⊥. Length 1: S = T, S = T^⊥, or both
/// S ∩ T and S ∩ T^⊥ are single points. Throws PreconditionError on ∅/full.
bool arc_commutes_by_cases(const ArcSet& s, const ArcSet& t);
/// S ∩ T ≠ ∅ or S ⊆ T^⊥, for proper arcs.
bool arc_qcommutes_by_cases(const ArcSet& s, const ArcSet& t);

}  // namespace qsets
