#include <doctest.h>

#include <random>

#include "udgcut/errors.hpp"
#include "udgcut/geometry.hpp"
#include "udgcut/rational.hpp"

using namespace udgcut;

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 4).str() == "7/4");
    CHECK(Rational(3).str() == "3");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("dist2 on gadget coordinates") {
    const Point v0 = Point::from_rational(Rational(1, 2), Rational(0));
    const Point v1 = Point::from_rational(Rational(0), Rational(1, 2));
    const Point v2 = Point::from_rational(Rational(-1, 2), Rational(0));
    const Point w0 = Point::from_rational(Rational(4, 5), Rational(4, 5));
    CHECK(dist2(v0, v1) == Rational(1, 2));
    CHECK(dist2(v0, v2) == Rational(1));
    CHECK(dist2(v0, w0) == Rational(73, 100));
    CHECK(dist2(w0, v2) == Rational(233, 100));
    CHECK(within_unit(v0, v2));
    CHECK_FALSE(within_unit(w0, v2));
    CHECK_THROWS_AS(Point::from_rational(Rational(1, 3), Rational(0)), InputError);
}

TEST_CASE("dist2 symmetric and zero only on equal points") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> c(-500, 500);
    for (int i = 0; i < 500; ++i) {
        const Point p{c(rng), c(rng)};
        const Point q{c(rng), c(rng)};
        CHECK(dist2(p, q) == dist2(q, p));
        CHECK((dist2(p, q) == Rational(0)) == (p == q));
    }
}

TEST_CASE("segments_properly_cross") {
    const Segment v(Point::mesh(0, -1), Point::mesh(0, 1));
    const Segment h(Point::mesh(-1, 0), Point::mesh(1, 0));
    const auto x = segments_properly_cross(v, h);
    REQUIRE(x);
    CHECK(x->x == Rational(0));
    CHECK(x->y == Rational(0));
    CHECK(x->s_param == Rational(1, 2));

    const Segment a(Point::mesh(0, 0), Point::mesh(1, 0));
    const Segment b(Point::mesh(0, 10), Point::mesh(1, 10));
    CHECK_FALSE(segments_properly_cross(a, b));

    const Segment c(Point::mesh(1, 0), Point::mesh(1, 5));
    CHECK_FALSE(segments_properly_cross(a, c));
    CHECK(classify_intersection(a, c).kind == IntersectionKind::touch);

    const Segment d(Point::mesh(0, 0), Point::mesh(3, 0));
    const Segment e(Point::mesh(2, 0), Point::mesh(5, 0));
    CHECK(classify_intersection(d, e).kind == IntersectionKind::overlap);
    CHECK_THROWS_AS(segments_properly_cross(d, e), DegenerateOverlapError);

    const Segment f(Point::mesh(3, 0), Point::mesh(5, 0));
    CHECK(classify_intersection(d, f).kind == IntersectionKind::touch);
    CHECK_THROWS(Segment(Point::mesh(1, 1), Point::mesh(1, 1)));
}

TEST_CASE("proper crossing is symmetric and strictly interior") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int64_t> c(-40, 40);
    int found = 0;
    for (int i = 0; i < 4000; ++i) {
        const Point p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)}, s{c(rng), c(rng)};
        if (p == q || r == s) continue;
        const Segment st(p, q), tu(r, s);
        const Intersection i1 = classify_intersection(st, tu);
        const Intersection i2 = classify_intersection(tu, st);
        CHECK(i1.kind == i2.kind);
        if (i1.kind != IntersectionKind::proper) continue;
        ++found;
        CHECK(i1.point->x == i2.point->x);
        CHECK(i1.point->y == i2.point->y);
        CHECK(Rational(0) < i1.point->s_param);
        CHECK(i1.point->s_param < Rational(1));
        CHECK(Rational(0) < i1.point->t_param);
        CHECK(i1.point->t_param < Rational(1));
    }
    CHECK(found > 100);
}

TEST_CASE("on_segment") {
    const Segment s(Point::mesh(0, 0), Point::mesh(4, 0));
    CHECK(on_segment(s, Point::mesh(2, 0)));
    CHECK(on_segment(s, Point::mesh(4, 0)));
    CHECK_FALSE(on_segment(s, Point::mesh(5, 0)));
    CHECK_FALSE(on_segment(s, Point{40, 1}));
}
