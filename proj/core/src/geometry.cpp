#include "rainbow/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rainbow {

namespace {

// Assumes p collinear with ab.
bool within_box(const Point& p, const Point& a, const Point& b)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

boost::multiprecision::cpp_int parse_integer(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw std::invalid_argument("missing digits");
    boost::multiprecision::cpp_int value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? boost::multiprecision::cpp_int(-value) : value;
}

} // namespace

int orientation(const Point& a, const Point& b, const Point& c)
{
    const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

bool on_segment_interior(const Point& p, const Point& a, const Point& b)
{
    return p != a && p != b && orientation(a, b, p) == 0 && within_box(p, a, b);
}

SegmentIntersection intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: project on the dominant axis and compare intervals.
        const bool use_x = a.x != b.x;
        auto key = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
        const Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        const Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        const Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi)
            return {};
        if (lo < hi)
            return {SegmentRelation::collinear_overlap, {}};
        for (const Point* p : {&a, &b, &c, &d})
            if (key(*p) == lo)
                return {SegmentRelation::touching, *p};
        return {};
    }

    if (o1 * o2 > 0 || o3 * o4 > 0)
        return {};

    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        // a + t (b - a) with t = cross(c - a, d - c) / cross(b - a, d - c)
        const Rational rx = b.x - a.x, ry = b.y - a.y;
        const Rational sx = d.x - c.x, sy = d.y - c.y;
        const Rational denom = rx * sy - ry * sx;
        const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
        return {SegmentRelation::proper_crossing, Point{a.x + t * rx, a.y + t * ry}};
    }

    // Exactly one endpoint lies on the other segment's line, inside its box.
    if (o1 == 0 && within_box(c, a, b))
        return {SegmentRelation::touching, c};
    if (o2 == 0 && within_box(d, a, b))
        return {SegmentRelation::touching, d};
    if (o3 == 0 && within_box(a, c, d))
        return {SegmentRelation::touching, a};
    if (o4 == 0 && within_box(b, c, d))
        return {SegmentRelation::touching, b};
    return {};
}

Rational squared_distance(const Point& a, const Point& b)
{
    const Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b)
{
    const Rational len2 = squared_distance(a, b);
    if (len2 == 0)
        return squared_distance(p, a);
    Rational t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / len2;
    if (t < 0)
        t = 0;
    if (t > 1)
        t = 1;
    const Point foot{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    return squared_distance(p, foot);
}

Box bounding_box(const Point& a, const Point& b)
{
    return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

bool boxes_meet(const Box& a, const Box& b)
{
    return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const auto num = parse_integer(text.substr(0, slash));
    const auto den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    // boost rejects negative denominators in the two-argument constructor
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

std::string format_rational(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

} // namespace rainbow
