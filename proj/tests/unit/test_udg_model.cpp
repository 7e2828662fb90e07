#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "udgcut/errors.hpp"
#include "udgcut/gadget.hpp"
#include "udgcut/udg_model.hpp"

using namespace udgcut;

namespace {

// Points in a box of `side` internal units, rejected until pairwise
// dist2_scaled >= min_d2; edges by the distance rule.
ProximityModel random_model(std::mt19937_64& rng, std::size_t n, std::int64_t side, std::int64_t min_d2) {
    std::uniform_int_distribution<std::int64_t> c(0, side);
    ProximityModel m{Graph(n), {}};
    while (m.points.size() < n) {
        const Point p{c(rng), c(rng)};
        bool ok = true;
        for (Point q : m.points) ok = ok && dist2_scaled(p, q) >= min_d2;
        if (ok) m.points.push_back(p);
    }
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (within_unit(m.points[i], m.points[j])) m.graph.add_edge(i, j);
    return m;
}

}  // namespace

TEST_CASE("validate_model on the gadget") {
    const ProximityModel h = h_model();
    CHECK(validate_model(h).ok);
    CHECK(oracle::model_ok(h));

    ProximityModel extra = h;
    extra.graph.add_edge(4, 5);
    const ModelReport rep = validate_model(extra);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].kind == AdjacencyWitness::Kind::edge_too_long);
    CHECK(rep.failures[0].dist2 == Rational(64, 25));

    ProximityModel missing = h;
    missing.graph.remove_edge(0, 4);
    const ModelReport rep2 = validate_model(missing);
    REQUIRE(rep2.failures.size() == 1);
    CHECK(rep2.failures[0].kind == AdjacencyWitness::Kind::missing_edge);
    CHECK(rep2.failures[0].dist2 == Rational(73, 100));
}

TEST_CASE("tangent disks are adjacent") {
    ProximityModel m{Graph(2), {Point::mesh(0, 0), Point::mesh(1, 0)}};
    m.graph.add_edge(0, 1);
    CHECK(validate_model(m).ok);
    ProximityModel apart{Graph(2), {Point::mesh(0, 0), Point{21, 0}}};
    CHECK(validate_model(apart).ok);
}

TEST_CASE("validate_model errors") {
    ProximityModel same{Graph(2), {Point{3, 4}, Point{3, 4}}};
    CHECK_THROWS_AS(validate_model(same), InvalidModelError);
    ProximityModel short_pts{Graph(3), {Point{0, 0}}};
    CHECK_THROWS_AS(validate_model(short_pts), InvalidModelError);
}

TEST_CASE("validate_model agrees with the all-pairs oracle") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        ProximityModel m = random_model(rng, 30, 120, 1);
        CHECK(validate_model(m).ok);
        // Perturb one pair and compare verdicts.
        const VertexId a = static_cast<VertexId>(rng() % 30);
        const VertexId b = static_cast<VertexId>((a + 1 + rng() % 29) % 30);
        if (m.graph.has_edge(a, b))
            m.graph.remove_edge(a, b);
        else
            m.graph.add_edge(a, b);
        CHECK(validate_model(m).ok == oracle::model_ok(m));
        CHECK_FALSE(validate_model(m).ok);
    }
}

TEST_CASE("precision2") {
    CHECK(precision2(h_model()) == Rational(1, 2));
    ProximityModel two{Graph(2), {Point::mesh(0, 0), Point::mesh(10, 0)}};
    CHECK(precision2(two) == Rational(100));
    ProximityModel one{Graph(1), {Point{0, 0}}};
    CHECK_THROWS_AS(precision2(one), InputError);

    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        const ProximityModel m = random_model(rng, 25, 200, 1);
        CHECK(precision2(m) == Rational(oracle::min_dist2_scaled(m), kUnitDist2));
    }
}

TEST_CASE("straight_line_crossings") {
    const auto w = straight_line_crossings(h_model());
    bool diagonals = false;
    for (const auto& s : w)
        if ((s.e == Edge{0, 2} && s.f == Edge{1, 3}) || (s.e == Edge{1, 3} && s.f == Edge{0, 2})) diagonals = true;
    CHECK(diagonals);

    ProximityModel single{Graph(2), {Point{0, 0}, Point{20, 0}}};
    single.graph.add_edge(0, 1);
    CHECK(straight_line_crossings(single).empty());
}

TEST_CASE("models with precision above one half draw without crossings") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 100; ++it) {
        const ProximityModel m = random_model(rng, 16, 80, 201);
        REQUIRE(Rational(1, 2) < precision2(m));
        CHECK(straight_line_crossings(m).empty());
        CHECK(planarity_verdict(m) == PlanarityVerdict::planar_by_theorem);
    }
}

TEST_CASE("planarity_verdict") {
    CHECK(planarity_verdict(h_model()) == PlanarityVerdict::not_planar_drawing);
    ProximityModel one{Graph(1), {Point{0, 0}}};
    CHECK(planarity_verdict(one) == PlanarityVerdict::planar_by_theorem);

    // Grid of spacing 3/4: minimum dist2 9/16, no diagonal edges.
    ProximityModel grid{Graph(9), {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) grid.points.push_back({i * 15, j * 15});
    for (VertexId a = 0; a < 9; ++a)
        for (VertexId b = a + 1; b < 9; ++b)
            if (within_unit(grid.points[a], grid.points[b])) grid.graph.add_edge(a, b);
    CHECK(precision2(grid) == Rational(9, 16));
    CHECK(planarity_verdict(grid) == PlanarityVerdict::planar_by_theorem);

    // K4 on a small square: precision below 1/2 and the diagonals cross.
    ProximityModel sq{Graph(4), {Point{0, 0}, Point{14, 0}, Point{14, 14}, Point{0, 14}}};
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b) sq.graph.add_edge(a, b);
    CHECK(validate_model(sq).ok);
    CHECK(planarity_verdict(sq) == PlanarityVerdict::not_planar_drawing);

    ProximityModel path{Graph(3), {Point{0, 0}, Point{10, 0}, Point{20, 0}}};
    path.graph.add_edge(0, 1);
    path.graph.add_edge(1, 2);
    path.graph.add_edge(0, 2);
    // Collinear edges overlap.
    CHECK(planarity_verdict(path) != PlanarityVerdict::planar_by_theorem);
}

TEST_CASE("conflict_gap2") {
    CHECK(conflict_gap2(Rational(1)) == Rational(1));
    CHECK(conflict_gap2(Rational(1, 2)) == Rational(7, 4));
    CHECK(conflict_gap2(Rational(1, 20)) == Rational(799, 400));
    for (int k = 1; k <= 20; ++k) CHECK(Rational(1) <= conflict_gap2(Rational(k, 20)));
    for (int k = 1; k < 20; ++k) CHECK(Rational(1) < conflict_gap2(Rational(k, 20)));
    CHECK_THROWS_AS(conflict_gap2(Rational(0)), InputError);
    CHECK_THROWS_AS(conflict_gap2(Rational(21, 20)), InputError);
}
