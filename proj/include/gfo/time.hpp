#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfo {

using Rational = boost::multiprecision::cpp_rational;

/// Parses `p/q`, an integer, or a decimal (`0.25`) exactly.
/// Throws Error(BadRational) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise (lowest terms, q > 0).
std::string format_rational(const Rational& r);

std::strong_ordering compare(const Rational& a, const Rational& b);
bool equal(const Rational& a, const Rational& b);

/// A point of model time. Arithmetic and comparison are exact.
class TimeCoordinate {
 public:
  TimeCoordinate() = default;
  TimeCoordinate(Rational value) : value_(std::move(value)) {}  // NOLINT
  TimeCoordinate(long long value) : value_(value) {}            // NOLINT
  TimeCoordinate(long long num, long long den) : value_(num, den) {}

  static TimeCoordinate parse(std::string_view text) { return {parse_rational(text)}; }

  const Rational& value() const noexcept { return value_; }
  std::string str() const { return format_rational(value_); }

  friend bool operator==(const TimeCoordinate& a, const TimeCoordinate& b) {
    return equal(a.value_, b.value_);
  }
  friend std::strong_ordering operator<=>(const TimeCoordinate& a, const TimeCoordinate& b) {
    return compare(a.value_, b.value_);
  }

  friend TimeCoordinate operator+(const TimeCoordinate& a, const TimeCoordinate& b) {
    return {Rational(a.value_ + b.value_)};
  }
  friend TimeCoordinate operator-(const TimeCoordinate& a, const TimeCoordinate& b) {
    return {Rational(a.value_ - b.value_)};
  }

  TimeCoordinate midpoint(const TimeCoordinate& other) const {
    return {Rational((value_ + other.value_) / 2)};
  }

 private:
  Rational value_{0};
};

enum class BoundaryKind { Left, Right, Inner };

/// Connected interval of time with strictly positive duration.
struct Chronoid {
  std::string id;
  TimeCoordinate left;
  TimeCoordinate right;

  TimeCoordinate duration() const { return right - left; }
  bool contains(const TimeCoordinate& t) const { return left <= t && t <= right; }
  bool contains(const Chronoid& other) const {
    return left <= other.left && other.right <= right;
  }

  friend bool operator==(const Chronoid&, const Chronoid&) = default;
};

/// Boundary entity of a chronoid. Identity is the id; distinct boundaries
/// (of different chronoids) may share a coordinate.
struct TimeBoundary {
  std::string id;
  TimeCoordinate coordinate;
  std::string owner;
  BoundaryKind kind = BoundaryKind::Inner;

  friend bool operator==(const TimeBoundary&, const TimeBoundary&) = default;
};

/// Builds a chronoid. An empty id draws a fresh one (`chronoid-N`).
/// Throws Error(ZeroOrNegativeDuration) when left >= right.
Chronoid make_chronoid(TimeCoordinate left, TimeCoordinate right, std::string id = {});

TimeBoundary left_boundary(const Chronoid& ch);
TimeBoundary right_boundary(const Chronoid& ch);

/// Boundary entity of `ch` at `t`. Endpoints yield the left/right entities;
/// the same (ch, t) always yields the same entity.
/// Throws Error(OutOfExtent) when t is outside [left, right].
TimeBoundary inner_boundary(const Chronoid& ch, const TimeCoordinate& t);

bool coincides(const TimeBoundary& a, const TimeBoundary& b);

/// ch1.right == ch2.left
bool meets(const Chronoid& a, const Chronoid& b);

/// Subinterval [l, r] of ch. Throws ZeroOrNegativeDuration when l >= r and
/// NotASubinterval when [l, r] is not inside ch.
Chronoid temporal_part_chronoid(const Chronoid& ch, const TimeCoordinate& l,
                                const TimeCoordinate& r);

/// Id-safe rendering of a coordinate: `1/2` -> `1d2`, `-3` -> `n3`.
std::string coordinate_tag(const TimeCoordinate& t);

}  // namespace gfo
