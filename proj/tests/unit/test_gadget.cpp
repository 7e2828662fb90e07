#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "udgcut/errors.hpp"
#include "udgcut/gadget.hpp"
#include "udgcut/generators.hpp"

using namespace udgcut;

TEST_CASE("build_H shape") {
    const Graph h = build_H();
    CHECK(h.vertex_count() == 8);
    CHECK(h.edge_count() == 14);
    for (VertexId v = 0; v < 4; ++v) CHECK(h.degree(v) == 5);
    for (VertexId w = 4; w < 8; ++w) CHECK(h.degree(w) == 2);
    CHECK(oracle::max_cut(h) == 10);
}

TEST_CASE("h_model coordinates") {
    const ProximityModel m = h_model();
    const auto& p = m.points;
    CHECK(dist2(p[0], p[4]) == Rational(73, 100));
    CHECK(dist2(p[4], p[2]) == Rational(233, 100));
    CHECK(precision2(m) == Rational(1, 2));
    CHECK(dist2(p[0], p[1]) == Rational(1, 2));

    // All 28 pairs: adjacency by distance equals the H edge set.
    const Graph h = build_H();
    for (VertexId a = 0; a < 8; ++a)
        for (VertexId b = a + 1; b < 8; ++b) CHECK(within_unit(p[a], p[b]) == h.has_edge(a, b));
    for (VertexId a = 0; a < 8; ++a)
        for (VertexId b = a + 1; b < 8; ++b) CHECK(Rational(1, 2) <= dist2(p[a], p[b]));

    const Point c = Point::mesh(3, -7);
    const ProximityModel moved = h_model(c);
    CHECK(validate_model(moved).ok);
    CHECK(moved.points[0] == c + Point{10, 0});
}

TEST_CASE("construct_H_on two disjoint edges gives H") {
    const Graph g = oracle::graph(4, {{0, 2}, {1, 3}});
    const GadgetResult r = construct_H_on(g, {0, 2}, {1, 3});
    CHECK(r.graph == build_H());
    CHECK(oracle::max_cut(g) == 2);
    CHECK(oracle::max_cut(r.graph) == 10);
    CHECK(r.instance.v_ids == std::array<VertexId, 4>{0, 1, 2, 3});
    CHECK(r.instance.w_ids == std::array<VertexId, 4>{4, 5, 6, 7});
    CHECK(r.instance.added_edges.size() == 12);
}

TEST_CASE("construct_H_on preconditions") {
    const Graph path = oracle::graph(4, {{0, 2}, {2, 1}, {1, 3}});
    CHECK_THROWS_AS(construct_H_on(path, {0, 2}, {2, 1}), PreconditionError);
    CHECK_THROWS_AS(construct_H_on(path, {0, 2}, {0, 3}), PreconditionError);

    const Graph k4 = gen::complete(4);
    CHECK_THROWS_AS(construct_H_on(k4, {0, 2}, {1, 3}), PreconditionError);
    const GadgetResult relaxed = construct_H_on(k4, {0, 2}, {1, 3}, GadgetPrecondition::relax);
    CHECK(oracle::max_cut(k4) == 4);
    CHECK(oracle::max_cut(relaxed.graph) == 10);

    const Graph c6 = gen::cycle(6);
    CHECK_THROWS_AS(construct_H_on(c6, {0, 3}, {1, 4}), PreconditionError);
}

TEST_CASE("gadget raises mc by exactly eight") {
    std::mt19937_64 rng(19);
    int done = 0;
    while (done < 40) {
        const Graph g = gen::random_bounded_degree(rng, 4 + rng() % 5, 4, 0.5);
        const auto edges = g.edges();
        bool planted = false;
        for (std::size_t i = 0; i < edges.size() && !planted; ++i)
            for (std::size_t j = i + 1; j < edges.size() && !planted; ++j) {
                const Edge a = edges[i], b = edges[j];
                if (a.has(b.u) || a.has(b.v)) continue;
                if (g.has_edge(a.u, b.u) || g.has_edge(b.u, a.v) || g.has_edge(a.v, b.v) || g.has_edge(b.v, a.u))
                    continue;
                const Graph h = construct_H_on(g, {a.u, a.v}, {b.u, b.v}).graph;
                CHECK(oracle::max_cut(h) == oracle::max_cut(g) + 8);

                // Each triangle {w_i, v_i, v_(i+1)} contributes 2 in every maximum cut.
                const std::size_t best = oracle::max_cut(h);
                const std::array<VertexId, 4> v{a.u, b.u, a.v, b.v};
                const std::size_t n = h.vertex_count();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    Side s(n);
                    for (std::size_t k = 0; k < n; ++k) s[k] = static_cast<std::uint8_t>(mask >> k & 1);
                    if (cut_size(h, s) != best) continue;
                    for (std::size_t k = 0; k < 4; ++k) {
                        const VertexId w = static_cast<VertexId>(g.vertex_count() + k);
                        const VertexId x = v[k], y = v[(k + 1) % 4];
                        CHECK((s[w] != s[x]) + (s[w] != s[y]) + (s[x] != s[y]) == 2);
                    }
                }
                planted = true;
                ++done;
            }
    }
}
