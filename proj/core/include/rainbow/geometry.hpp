#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// True iff p lies on segment ab strictly between a and b.
bool on_segment_interior(const Point& p, const Point& a, const Point& b);

enum class SegmentRelation {
    disjoint,
    proper_crossing,   // single point interior to both segments
    touching,          // share a point that is an endpoint of at least one segment
    collinear_overlap, // collinear with a common sub-segment
};

struct SegmentIntersection {
    SegmentRelation relation = SegmentRelation::disjoint;
    Point point; // set for proper_crossing and touching
};

SegmentIntersection intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d);

// Axis-aligned bounding box of a segment; disjoint boxes rule out any contact.
struct Box {
    Rational x_lo, x_hi, y_lo, y_hi;
};
Box bounding_box(const Point& a, const Point& b);
bool boxes_meet(const Box& a, const Box& b);

Rational squared_distance(const Point& a, const Point& b);
Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b);

// "p/q" or "p"; throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
// Always "p/q" with q > 0 and gcd(p,q) = 1.
std::string format_rational(const Rational& r);

} // namespace rainbow
