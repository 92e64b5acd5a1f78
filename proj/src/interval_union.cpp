#include "qsets/interval_union.hpp"

#include <algorithm>
#include <cctype>

#include "qsets/error.hpp"

namespace qsets {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  if (i == s.size()) throw InputError("malformed rational \"" + std::string(whole) + "\"");
  boost::multiprecision::cpp_int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("malformed rational \"" + std::string(whole) + "\"");
    v = v * 10 + (s[i] - '0');
  }
  return negative ? boost::multiprecision::cpp_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Endpoint Endpoint::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return Endpoint(parse_rational(text));
}

const Rational& Endpoint::value() const {
  if (!finite()) throw PreconditionError("infinite endpoint has no rational value");
  return value_;
}

Endpoint Endpoint::operator+(const Rational& d) const {
  if (!finite()) return *this;
  return Endpoint(Rational(value_ + d));
}

Endpoint Endpoint::scaled(const Rational& c) const {
  if (!finite()) return *this;
  return Endpoint(Rational(value_ * c));
}

bool operator==(const Endpoint& a, const Endpoint& b) {
  return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
}

bool operator<(const Endpoint& a, const Endpoint& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.finite() && a.value_ < b.value_;
}

std::string to_string(const Endpoint& e) {
  switch (e.kind()) {
    case Endpoint::Kind::NegInf: return "-inf";
    case Endpoint::Kind::PosInf: return "inf";
    case Endpoint::Kind::Finite: break;
  }
  return to_string(e.value());
}

IntervalUnion::IntervalUnion(Rational delta, std::vector<Interval> intervals) : delta_(std::move(delta)) {
  if (delta_ <= 0) throw InputError("delta must be positive, got " + to_string(delta_));
  for (const auto& iv : intervals) {
    if (iv.lo.kind() == Endpoint::Kind::PosInf || iv.hi.kind() == Endpoint::Kind::NegInf)
      throw InputError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] has a misplaced infinity");
    if (iv.hi < iv.lo)
      throw InputError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] has lo > hi");
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (intervals_.back().hi < iv.hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

IntervalUnion IntervalUnion::real_line(Rational delta) {
  return IntervalUnion(std::move(delta), {{Endpoint::neg_inf(), Endpoint::pos_inf()}});
}

IntervalUnion IntervalUnion::points(Rational delta, const std::vector<Rational>& xs) {
  std::vector<Interval> ivs;
  for (const auto& x : xs) ivs.push_back({x, x});
  return IntervalUnion(std::move(delta), std::move(ivs));
}

bool IntervalUnion::is_real_line() const {
  return intervals_.size() == 1 && intervals_[0].lo == Endpoint::neg_inf() && intervals_[0].hi == Endpoint::pos_inf();
}

bool IntervalUnion::contains(const Rational& x) const {
  Endpoint e(x);
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.lo <= e && e <= iv.hi; });
}

bool IntervalUnion::is_subset_of(const IntervalUnion& other) const {
  return std::all_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return std::any_of(other.intervals_.begin(), other.intervals_.end(),
                       [&](const Interval& ov) { return ov.lo <= iv.lo && iv.hi <= ov.hi; });
  });
}

Endpoint IntervalUnion::inf() const {
  if (is_empty()) throw PreconditionError("infimum of the empty set");
  return intervals_.front().lo;
}

Endpoint IntervalUnion::sup() const {
  if (is_empty()) throw PreconditionError("supremum of the empty set");
  return intervals_.back().hi;
}

void IntervalUnion::require_same_delta(const IntervalUnion& other) const {
  if (delta_ != other.delta_)
    throw InputError("interval unions at different scales: " + to_string(delta_) + " vs " + to_string(other.delta_));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  require_same_delta(other);
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const auto& a = intervals_[i];
    const auto& b = other.intervals_[j];
    auto lo = std::max(a.lo, b.lo);
    auto hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi)
      ++i;
    else
      ++j;
  }
  return IntervalUnion(delta_, std::move(out));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  require_same_delta(other);
  auto all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalUnion(delta_, std::move(all));
}

IntervalUnion IntervalUnion::scaled(const Rational& c) const {
  if (c <= 0) throw PreconditionError("scale factor must be positive");
  std::vector<Interval> out;
  for (const auto& iv : intervals_) out.push_back({iv.lo.scaled(c), iv.hi.scaled(c)});
  return IntervalUnion(delta_ * c, std::move(out));
}

std::string to_string(const IntervalUnion& u) {
  if (u.is_empty()) return "∅";
  std::string out;
  for (const auto& iv : u.intervals()) {
    if (!out.empty()) out += " ∪ ";
    if (iv.lo == iv.hi) {
      out += "{" + to_string(iv.lo) + "}";
    } else {
      out += (iv.lo.finite() ? "[" : "(") + to_string(iv.lo) + ", " + to_string(iv.hi) + (iv.hi.finite() ? "]" : ")");
    }
  }
  return out;
}

IntervalUnion qcomp_interval(const IntervalUnion& u) {
  const auto& d = u.delta();
  if (u.is_empty()) return IntervalUnion::real_line(d);
  // Complement of the union of the open δ-neighbourhoods (lo − δ, hi + δ).
  std::vector<Interval> out;
  const auto& ivs = u.intervals();
  if (ivs.front().lo.finite()) out.push_back({Endpoint::neg_inf(), ivs.front().lo - d});
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    auto lo = ivs[i].hi + d;
    auto hi = ivs[i + 1].lo - d;
    if (lo <= hi) out.push_back({lo, hi});
  }
  if (ivs.back().hi.finite()) out.push_back({ivs.back().hi + d, Endpoint::pos_inf()});
  return IntervalUnion(d, std::move(out));
}

IntervalUnion closure_interval(const IntervalUnion& u) { return qcomp_interval(qcomp_interval(u)); }

bool is_Q1(const IntervalUnion& u) {
  const auto& ivs = u.intervals();
  const Rational gap = 2 * u.delta();
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
    if (ivs[i + 1].lo.value() - ivs[i].hi.value() < gap) return false;
  return true;
}

IntervalUnion relative_closure_interval(const IntervalUnion& t, const IntervalUnion& s) {
  if (!s.is_subset_of(t)) throw PreconditionError("relative closure: " + to_string(s) + " ⊄ " + to_string(t));
  return qcomp_interval(qcomp_interval(s).intersect(t)).intersect(t);
}

}  // namespace qsets
