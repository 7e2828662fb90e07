#include "udgcut/geometry.hpp"

#include <algorithm>
#include <limits>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

using detail::int128;

int128 cross(Point o, Point a, Point b) {
    return static_cast<int128>(a.x - o.x) * (b.y - o.y) - static_cast<int128>(a.y - o.y) * (b.x - o.x);
}

int sign(int128 v) { return (v > 0) - (v < 0); }

std::int64_t checked_narrow(int128 v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw OverflowError("geometry value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Projection of a collinear segment onto its dominant axis.
std::pair<std::int64_t, std::int64_t> span_on(const Segment& s, bool use_x) {
    std::int64_t lo = use_x ? s.a.x : s.a.y;
    std::int64_t hi = use_x ? s.b.x : s.b.y;
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

}  // namespace

Point Point::from_rational(const Rational& mx, const Rational& my) {
    Rational sx = mx * Rational(kScale);
    Rational sy = my * Rational(kScale);
    if (sx.den() != 1 || sy.den() != 1)
        throw InputError("coordinate (" + mx.str() + ", " + my.str() + ") is not a multiple of 1/20");
    return {sx.num(), sy.num()};
}

std::string Point::str() const { return "(" + mesh_x().str() + ", " + mesh_y().str() + ")"; }

std::int64_t dist2_scaled(Point p, Point q) {
    int128 dx = static_cast<int128>(p.x) - q.x;
    int128 dy = static_cast<int128>(p.y) - q.y;
    return checked_narrow(dx * dx + dy * dy);
}

Rational dist2(Point p, Point q) { return Rational(dist2_scaled(p, q), kUnitDist2); }

Segment::Segment(Point a_, Point b_) : a(a_), b(b_) {
    if (a == b) throw InputError("degenerate segment at " + a.str());
}

std::optional<Point> CrossingPoint::to_point() const {
    Rational sx = x * Rational(kScale);
    Rational sy = y * Rational(kScale);
    if (sx.den() != 1 || sy.den() != 1) return std::nullopt;
    return Point{sx.num(), sy.num()};
}

bool on_segment(const Segment& s, Point p) {
    if (cross(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

Intersection classify_intersection(const Segment& s, const Segment& t) {
    const int o1 = sign(cross(s.a, s.b, t.a));
    const int o2 = sign(cross(s.a, s.b, t.b));
    const int o3 = sign(cross(t.a, t.b, s.a));
    const int o4 = sign(cross(t.a, t.b, s.b));

    if (o1 == 0 && o2 == 0) {
        // Collinear: compare projections on an axis the line is not perpendicular to.
        const bool use_x = s.a.x != s.b.x;
        auto [slo, shi] = span_on(s, use_x);
        auto [tlo, thi] = span_on(t, use_x);
        const std::int64_t lo = std::max(slo, tlo);
        const std::int64_t hi = std::min(shi, thi);
        if (lo < hi) return {IntersectionKind::overlap, std::nullopt};
        if (lo == hi) return {IntersectionKind::touch, std::nullopt};
        return {};
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // s.a + l (s.b - s.a) = t.a + m (t.b - t.a)
        const Point d1 = s.b - s.a;
        const Point d2 = t.b - t.a;
        const Point w = t.a - s.a;
        const int128 denom = static_cast<int128>(d1.x) * d2.y - static_cast<int128>(d1.y) * d2.x;
        const int128 lnum = static_cast<int128>(w.x) * d2.y - static_cast<int128>(w.y) * d2.x;
        const int128 mnum = static_cast<int128>(w.x) * d1.y - static_cast<int128>(w.y) * d1.x;
        const Rational l(checked_narrow(lnum), checked_narrow(denom));
        const Rational m(checked_narrow(mnum), checked_narrow(denom));
        CrossingPoint cp{
            (Rational(s.a.x) + l * Rational(d1.x)) / Rational(kScale),
            (Rational(s.a.y) + l * Rational(d1.y)) / Rational(kScale),
            l,
            m,
        };
        return {IntersectionKind::proper, cp};
    }

    if ((o1 == 0 && on_segment(s, t.a)) || (o2 == 0 && on_segment(s, t.b)) ||
        (o3 == 0 && on_segment(t, s.a)) || (o4 == 0 && on_segment(t, s.b)))
        return {IntersectionKind::touch, std::nullopt};
    return {};
}

std::optional<CrossingPoint> segments_properly_cross(const Segment& s, const Segment& t) {
    Intersection in = classify_intersection(s, t);
    if (in.kind == IntersectionKind::overlap)
        throw DegenerateOverlapError("collinear overlap between " + s.a.str() + "-" + s.b.str() + " and " +
                                     t.a.str() + "-" + t.b.str());
    if (in.kind == IntersectionKind::proper) return in.point;
    return std::nullopt;
}

}  // namespace udgcut
