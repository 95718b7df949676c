#include <gtest/gtest.h>

#include "rainbow/drawing.hpp"
#include "rainbow/error.hpp"
#include "rainbow/geometry.hpp"

using namespace rainbow;

namespace {

Point pt(long long x, long long y)
{
    return {Rational(x), Rational(y)};
}

} // namespace

TEST(Geometry, Orientation)
{
    EXPECT_EQ(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
    EXPECT_EQ(orientation(pt(0, 0), pt(0, 1), pt(1, 0)), -1);
    EXPECT_EQ(orientation(pt(0, 0), pt(1, 1), pt(3, 3)), 0);
}

TEST(Geometry, ProperCrossingPointIsExact)
{
    const auto hit = intersect_segments(pt(0, 0), pt(3, 1), pt(0, 1), pt(3, 0));
    ASSERT_EQ(hit.relation, SegmentRelation::proper_crossing);
    EXPECT_EQ(hit.point.x, Rational(3, 2));
    EXPECT_EQ(hit.point.y, Rational(1, 2));
}

TEST(Geometry, TouchingAndDisjoint)
{
    EXPECT_EQ(intersect_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5)).relation, SegmentRelation::touching);
    EXPECT_EQ(intersect_segments(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 3)).relation, SegmentRelation::touching);
    EXPECT_EQ(intersect_segments(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)).relation, SegmentRelation::disjoint);
    EXPECT_EQ(intersect_segments(pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)).relation, SegmentRelation::disjoint);
}

TEST(Geometry, CollinearOverlap)
{
    EXPECT_EQ(intersect_segments(pt(0, 0), pt(2, 2), pt(1, 1), pt(3, 3)).relation,
              SegmentRelation::collinear_overlap);
}

TEST(Geometry, DistanceToSegment)
{
    EXPECT_EQ(squared_distance_to_segment(pt(1, 2), pt(0, 0), pt(2, 0)), Rational(4));
    EXPECT_EQ(squared_distance_to_segment(pt(5, 0), pt(0, 0), pt(2, 0)), Rational(9));
    EXPECT_EQ(squared_distance(pt(0, 0), pt(3, 4)), Rational(25));
}

TEST(Geometry, RationalText)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(format_rational(parse_rational("6/-4")), "-3/2");
    EXPECT_EQ(format_rational(Rational(5)), "5/1");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Drawing, RejectsCoincidentVertices)
{
    const Graph g(2, {{0, 1}});
    EXPECT_THROW(Drawing(g, {pt(0, 0), pt(0, 0)}), Error);
}

TEST(Drawing, RejectsVertexInsideEdge)
{
    const Graph g(3, {{0, 2}});
    try {
        Drawing(g, {pt(0, 0), pt(1, 0), pt(2, 0)});
        FAIL() << "accepted a vertex on an edge";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_drawing);
    }
}

TEST(Drawing, RejectsWrongCount)
{
    const Graph g(3, {{0, 1}});
    EXPECT_THROW(Drawing(g, {pt(0, 0), pt(1, 0)}), Error);
}
