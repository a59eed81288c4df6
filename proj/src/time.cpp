#include "gfo/time.hpp"

#include <atomic>
#include <cctype>

#include "gfo/error.hpp"

namespace gfo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroOrNegativeDuration: return "ZeroOrNegativeDuration";
    case ErrorKind::OutOfExtent: return "OutOfExtent";
    case ErrorKind::OutOfLifetime: return "OutOfLifetime";
    case ErrorKind::NotASubinterval: return "NotASubinterval";
    case ErrorKind::UnsampledTime: return "UnsampledTime";
    case ErrorKind::UnknownEntity: return "UnknownEntity";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::UnknownSituation: return "UnknownSituation";
    case ErrorKind::MalformedContinuant: return "MalformedContinuant";
    case ErrorKind::MalformedTriple: return "MalformedTriple";
    case ErrorKind::BadRational: return "BadRational";
  }
  return "?";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::BadRational,
              "bad rational '" + std::string(text) + "': " + std::string(why));
}

boost::multiprecision::cpp_int decimal_digits(std::string_view digits) {
  boost::multiprecision::cpp_int out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  using boost::multiprecision::cpp_int;
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text, "expected p/q");
    cpp_int d = decimal_digits(den);
    if (d == 0) bad_rational(text, "zero denominator");
    result = Rational(decimal_digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_rational(text, "expected decimal");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int digits = decimal_digits(std::string(whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad_rational(text, "expected integer, p/q or decimal");
    result = Rational(decimal_digits(body));
  }
  return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto& da = denominator(a);
  const auto& db = denominator(b);
  int c = da == db ? numerator(a).compare(numerator(b))
                   : boost::multiprecision::cpp_int(numerator(a) * db)
                         .compare(boost::multiprecision::cpp_int(numerator(b) * da));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool equal(const Rational& a, const Rational& b) {
  return boost::multiprecision::numerator(a) == boost::multiprecision::numerator(b) &&
         boost::multiprecision::denominator(a) == boost::multiprecision::denominator(b);
}

std::string coordinate_tag(const TimeCoordinate& t) {
  std::string out;
  for (char c : t.str()) {
    if (c == '-') {
      out += 'n';
    } else if (c == '/') {
      out += 'd';
    } else {
      out += c;
    }
  }
  return out;
}

Chronoid make_chronoid(TimeCoordinate left, TimeCoordinate right, std::string id) {
  static std::atomic<unsigned long> counter{0};
  if (left >= right) {
    throw Error(ErrorKind::ZeroOrNegativeDuration,
                "chronoid [" + left.str() + "," + right.str() + "] has no positive duration");
  }
  if (id.empty()) id = "chronoid-" + std::to_string(++counter);
  return Chronoid{std::move(id), std::move(left), std::move(right)};
}

TimeBoundary left_boundary(const Chronoid& ch) {
  return {ch.id + "@" + ch.left.str(), ch.left, ch.id, BoundaryKind::Left};
}

TimeBoundary right_boundary(const Chronoid& ch) {
  return {ch.id + "@" + ch.right.str(), ch.right, ch.id, BoundaryKind::Right};
}

TimeBoundary inner_boundary(const Chronoid& ch, const TimeCoordinate& t) {
  if (!ch.contains(t)) {
    throw Error(ErrorKind::OutOfExtent,
                t.str() + " is outside " + ch.id + " [" + ch.left.str() + "," + ch.right.str() + "]");
  }
  if (t == ch.left) return left_boundary(ch);
  if (t == ch.right) return right_boundary(ch);
  return {ch.id + "@" + t.str(), t, ch.id, BoundaryKind::Inner};
}

bool coincides(const TimeBoundary& a, const TimeBoundary& b) {
  return a.coordinate == b.coordinate;
}

bool meets(const Chronoid& a, const Chronoid& b) { return a.right == b.left; }

Chronoid temporal_part_chronoid(const Chronoid& ch, const TimeCoordinate& l,
                                const TimeCoordinate& r) {
  if (l >= r) {
    throw Error(ErrorKind::ZeroOrNegativeDuration,
                "[" + l.str() + "," + r.str() + "] has no positive duration");
  }
  if (l < ch.left || r > ch.right) {
    throw Error(ErrorKind::NotASubinterval,
                "[" + l.str() + "," + r.str() + "] is not inside " + ch.id);
  }
  if (l == ch.left && r == ch.right) return ch;
  return Chronoid{ch.id + "-" + coordinate_tag(l) + "-" + coordinate_tag(r), l, r};
}

}  // namespace gfo
