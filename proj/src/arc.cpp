#include "qsets/arc.hpp"

#include <stdexcept>

#include "qsets/error.hpp"

namespace qsets {

namespace {

boost::multiprecision::cpp_int floor_div(const Rational& x) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

void require_proper(const ArcSet& a) {
  if (!a.is_arc()) throw PreconditionError("case description applies to proper arcs only, got " + to_string(a));
}

}  // namespace

Rational kappa(const Rational& theta) {
  Rational turns = theta / kCircumference;
  return theta - kCircumference * Rational(floor_div(turns));
}

ArcSet ArcSet::arc(const Rational& start, const Rational& length) {
  if (length < 0 || length > 1) throw InputError("arc length " + to_string(length) + " outside [0, 1]");
  return ArcSet(Kind::Arc, CirclePoint(start), length);
}

bool ArcSet::contains(const CirclePoint& p) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Full: return true;
    case Kind::Arc: break;
  }
  return kappa(p.theta() - start_.theta()) <= length_;
}

bool ArcSet::is_subset_of(const ArcSet& other) const {
  if (is_empty() || other.is_full()) return true;
  if (is_full() || other.is_empty()) return false;
  return kappa(start_.theta() - other.start_.theta()) + length_ <= other.length_;
}

std::string to_string(const ArcSet& a) {
  switch (a.kind()) {
    case ArcSet::Kind::Empty: return "∅";
    case ArcSet::Kind::Full: return "RP1";
    case ArcSet::Kind::Arc: break;
  }
  return "arc(" + to_string(a.start().theta()) + ", " + to_string(a.length()) + ")";
}

ArcSet qcomp_arc(const ArcSet& a) {
  switch (a.kind()) {
    case ArcSet::Kind::Empty: return ArcSet::full();
    case ArcSet::Kind::Full: return ArcSet::empty();
    case ArcSet::Kind::Arc: break;
  }
  return ArcSet::arc(a.start().theta() + a.length() + 1, 1 - a.length());
}

ArcSet arc_meet(const ArcSet& a, const ArcSet& b) {
  if (a.is_empty() || b.is_empty()) return ArcSet::empty();
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  // Lay A out on the real line and intersect with the lifts of B.
  const Rational& lo_a = a.start().theta();
  Rational hi_a = lo_a + a.length();
  ArcSet result = ArcSet::empty();
  int pieces = 0;
  for (int k = -1; k <= 1; ++k) {
    Rational lo_b = b.start().theta() + kCircumference * k;
    Rational hi_b = lo_b + b.length();
    Rational lo = lo_a > lo_b ? lo_a : lo_b;
    Rational hi = hi_a < hi_b ? hi_a : hi_b;
    if (lo <= hi) {
      result = ArcSet::arc(lo, hi - lo);
      ++pieces;
    }
  }
  if (pieces > 1) throw std::logic_error("intersection of " + to_string(a) + " and " + to_string(b) + " is disconnected");
  return result;
}

ArcSet arc_join(const ArcSet& a, const ArcSet& b) { return qcomp_arc(arc_meet(qcomp_arc(a), qcomp_arc(b))); }

ArcSet closure_points(const std::vector<CirclePoint>& points) {
  if (points.empty()) return ArcSet::empty();
  ArcSet perp = ArcSet::full();
  for (const auto& p : points) perp = arc_meet(perp, qcomp_arc(ArcSet::point(p.theta())));
  return qcomp_arc(perp);
}

bool arc_commutes(const ArcSet& s, const ArcSet& t) {
  return s == arc_join(arc_meet(s, t), arc_meet(s, qcomp_arc(t)));
}

bool arc_qcommutes(const ArcSet& s, const ArcSet& t) {
  auto mc = qcomp_arc(arc_meet(s, t));
  return arc_meet(s, mc).is_subset_of(qcomp_arc(arc_meet(t, mc)));
}

bool arc_commutes_by_cases(const ArcSet& s, const ArcSet& t) {
  require_proper(s);
  require_proper(t);
  auto tc = qcomp_arc(t);
  if (s.length() < 1) return s.is_subset_of(t) || s.is_subset_of(tc);
  return s == t || s == tc || (arc_meet(s, t).is_point() && arc_meet(s, tc).is_point());
}

bool arc_qcommutes_by_cases(const ArcSet& s, const ArcSet& t) {
  require_proper(s);
  require_proper(t);
  return !arc_meet(s, t).is_empty() || s.is_subset_of(qcomp_arc(t));
}

}  // namespace qsets
