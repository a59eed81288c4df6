#include <gtest/gtest.h>

#include "generators.hpp"
#include "gfo/time.hpp"

using namespace gfo;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadRational;
}

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("+7/3"), Rational(7, 3));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("07/08"), Rational(7, 8));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
}

TEST(Rational, RejectsMalformedText) {
  for (auto text : {"1/0", "", "abc", "1/", "1.2.3", "/3"}) {
    EXPECT_EQ(kind_of([&] { parse_rational(text); }), ErrorKind::BadRational) << text;
  }
}

TEST(TimeCoordinate, OrderingAndEquality) {
  EXPECT_EQ(TimeCoordinate(2, 4), TimeCoordinate(1, 2));
  EXPECT_LT(TimeCoordinate(1, 3), TimeCoordinate(1, 2));
  EXPECT_LT(TimeCoordinate(-1, 2), TimeCoordinate(-1, 3));
  EXPECT_GT(TimeCoordinate(7, 2), TimeCoordinate(3));
  EXPECT_EQ(TimeCoordinate(1).midpoint(TimeCoordinate(2)), TimeCoordinate(3, 2));
}

TEST(Chronoid, RequiresPositiveDuration) {
  EXPECT_EQ(kind_of([] { make_chronoid(5, 5); }), ErrorKind::ZeroOrNegativeDuration);
  EXPECT_EQ(kind_of([] { make_chronoid(5, 3); }), ErrorKind::ZeroOrNegativeDuration);
  auto ch = make_chronoid(0, 10);
  EXPECT_EQ(ch.duration(), TimeCoordinate(10));
  EXPECT_NE(make_chronoid(0, 1).id, make_chronoid(0, 1).id);
}

TEST(Chronoid, EndpointBoundaries) {
  auto ch = make_chronoid(0, 10, "c");
  auto l = left_boundary(ch);
  auto r = right_boundary(ch);
  EXPECT_EQ(l.kind, BoundaryKind::Left);
  EXPECT_EQ(r.kind, BoundaryKind::Right);
  EXPECT_EQ(l.coordinate, TimeCoordinate(0));
  EXPECT_EQ(r.coordinate, TimeCoordinate(10));
  EXPECT_EQ(inner_boundary(ch, 0), l);
  EXPECT_EQ(inner_boundary(ch, 10), r);
  EXPECT_EQ(inner_boundary(ch, TimeCoordinate(1, 3)).kind, BoundaryKind::Inner);
  EXPECT_EQ(kind_of([&] { inner_boundary(ch, 11); }), ErrorKind::OutOfExtent);
  EXPECT_EQ(kind_of([&] { inner_boundary(ch, -1); }), ErrorKind::OutOfExtent);
}

TEST(Chronoid, BoundaryIdentityIsInterned) {
  auto ch = make_chronoid(0, 10, "c");
  EXPECT_EQ(inner_boundary(ch, TimeCoordinate(2, 4)), inner_boundary(ch, TimeCoordinate(1, 2)));
}

TEST(Chronoid, MeetingChronoidsHaveCoincidentBoundaries) {
  auto a = make_chronoid(0, 5, "a");
  auto b = make_chronoid(5, 8, "b");
  auto c = make_chronoid(6, 8, "c");
  EXPECT_TRUE(meets(a, b));
  EXPECT_TRUE(coincides(right_boundary(a), left_boundary(b)));
  EXPECT_NE(right_boundary(a), left_boundary(b));
  EXPECT_FALSE(meets(a, c));
  EXPECT_FALSE(meets(b, a));
}

TEST(Chronoid, TemporalPart) {
  auto ch = make_chronoid(0, 10, "life");
  auto part = temporal_part_chronoid(ch, 2, TimeCoordinate(9, 2));
  EXPECT_EQ(part.left, TimeCoordinate(2));
  EXPECT_EQ(part.right, TimeCoordinate(9, 2));
  EXPECT_TRUE(ch.contains(part));
  EXPECT_EQ(temporal_part_chronoid(ch, 0, 10), ch);
  EXPECT_EQ(kind_of([&] { temporal_part_chronoid(ch, 3, 3); }), ErrorKind::ZeroOrNegativeDuration);
  EXPECT_EQ(kind_of([&] { temporal_part_chronoid(ch, 4, 2); }), ErrorKind::ZeroOrNegativeDuration);
  EXPECT_EQ(kind_of([&] { temporal_part_chronoid(ch, -1, 2); }), ErrorKind::NotASubinterval);
  EXPECT_EQ(kind_of([&] { temporal_part_chronoid(ch, 5, 11); }), ErrorKind::NotASubinterval);
}

TEST(Chronoid, TemporalPartIdsAreDistinctPerInterval) {
  auto ch = make_chronoid(0, 10, "life");
  auto a = temporal_part_chronoid(ch, TimeCoordinate(1, 2), 1);
  auto b = temporal_part_chronoid(ch, TimeCoordinate(-1, 2) + TimeCoordinate(1), 1);
  auto c = temporal_part_chronoid(ch, 1, 2);
  EXPECT_EQ(a.id, b.id);
  EXPECT_NE(a.id, c.id);
}

TEST(Coincidence, IsAnEquivalenceOnRandomBoundaries) {
  gfo::testing::Rng rng(7);
  std::vector<TimeBoundary> bs;
  for (int i = 0; i < 30; ++i) {
    auto l = gfo::testing::random_rational(rng, 0, 3);
    auto ch = make_chronoid(l, l + gfo::testing::random_rational(rng, 1, 3));
    bs.push_back(left_boundary(ch));
    bs.push_back(right_boundary(ch));
  }
  for (const auto& a : bs) {
    EXPECT_TRUE(coincides(a, a));
    for (const auto& b : bs) {
      EXPECT_EQ(coincides(a, b), coincides(b, a));
      for (const auto& c : bs) {
        if (coincides(a, b) && coincides(b, c)) {
          EXPECT_TRUE(coincides(a, c));
        }
      }
    }
  }
}
