#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsets {

/// Exact rational in canonical reduced form (positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or an integer; throws InputError otherwise or when q = 0.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Interval endpoint: a rational or one of ±∞.
class Endpoint {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Endpoint() = default;
  Endpoint(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}
  Endpoint(int value) : Endpoint(Rational(value)) {}                       

  static Endpoint neg_inf() { return Endpoint(Kind::NegInf); }
  static Endpoint pos_inf() { return Endpoint(Kind::PosInf); }
  /// Accepts "-inf", "inf", "+inf" and everything parse_rational accepts.
  static Endpoint parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool finite() const noexcept { return kind_ == Kind::Finite; }
  /// Throws PreconditionError for infinite endpoints.
  const Rational& value() const;

  /// Translation; infinities absorb.
  Endpoint operator+(const Rational& d) const;
  Endpoint operator-(const Rational& d) const { return *this + Rational(-d); }
  /// Scaling by c > 0.
  Endpoint scaled(const Rational& c) const;

  friend bool operator==(const Endpoint& a, const Endpoint& b);
  friend bool operator<(const Endpoint& a, const Endpoint& b);
  friend bool operator<=(const Endpoint& a, const Endpoint& b) { return !(b < a); }
  friend bool operator>(const Endpoint& a, const Endpoint& b) { return b < a; }
  friend bool operator>=(const Endpoint& a, const Endpoint& b) { return !(a < b); }

 private:
  explicit Endpoint(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::string to_string(const Endpoint& e);

}  // namespace qsets
