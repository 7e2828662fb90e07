#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "udgcut/rational.hpp"

namespace udgcut {

/// Internal units per mesh unit. lcm(2, 4, 5): every coordinate the
/// construction produces (halves, quarters, fifths) is an integer here.
inline constexpr std::int64_t kScale = 20;

/// Squared unit distance in internal units (kScale^2).
inline constexpr std::int64_t kUnitDist2 = kScale * kScale;

/// Exact plane point stored in 1/kScale mesh units.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    /// Point at integer mesh coordinates (mx, my).
    static constexpr Point mesh(std::int64_t mx, std::int64_t my) { return {mx * kScale, my * kScale}; }

    /// Point at (xn/xd, yn/yd) mesh units; throws InputError when the value
    /// is not a multiple of 1/kScale.
    static Point from_rational(const Rational& mx, const Rational& my);

    bool is_mesh_cross() const { return x % kScale == 0 && y % kScale == 0; }
    Rational mesh_x() const { return Rational(x, kScale); }
    Rational mesh_y() const { return Rational(y, kScale); }

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

    std::string str() const;
};

/// Squared distance in internal units (1/kScale^2 of a squared mesh unit).
/// Overflow-checked.
std::int64_t dist2_scaled(Point p, Point q);

/// Exact squared distance in squared mesh units.
Rational dist2(Point p, Point q);

/// Unit-disk adjacency test: dist2 <= 1.
inline bool within_unit(Point p, Point q) { return dist2_scaled(p, q) <= kUnitDist2; }

struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_);

    bool is_horizontal() const { return a.y == b.y; }
    bool is_vertical() const { return a.x == b.x; }
};

/// Exact location of a proper crossing. Coordinates are in mesh units;
/// s_param / t_param are the positions along each segment (strictly in (0,1)).
struct CrossingPoint {
    Rational x;
    Rational y;
    Rational s_param;
    Rational t_param;

    /// Representable as a Point (multiple of 1/kScale)?
    std::optional<Point> to_point() const;
};

enum class IntersectionKind {
    none,
    proper,   ///< open segments cross transversally at one interior point
    touch,    ///< share a point that is an endpoint of at least one segment
    overlap,  ///< collinear with a common sub-segment of positive length
};

struct Intersection {
    IntersectionKind kind = IntersectionKind::none;
    std::optional<CrossingPoint> point;  ///< set for proper crossings only
};

/// Full classification of how two closed segments meet.
Intersection classify_intersection(const Segment& s, const Segment& t);

/// Interior crossing point, or nullopt for disjoint and endpoint-touching
/// segments. Collinear overlap throws DegenerateOverlapError.
std::optional<CrossingPoint> segments_properly_cross(const Segment& s, const Segment& t);

/// Is p on the closed segment s?
bool on_segment(const Segment& s, Point p);

}  // namespace udgcut
