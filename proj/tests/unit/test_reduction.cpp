#include <doctest.h>

#include <cstdlib>
#include <queue>
#include <random>
#include <set>

#include "oracle.hpp"
#include "udgcut/errors.hpp"
#include "udgcut/generators.hpp"
#include "udgcut/reduction.hpp"
#include "udgcut/solvers.hpp"

using namespace udgcut;

namespace {

// mc of a bipartite graph is its edge count; nullopt if an odd cycle exists.
std::optional<std::size_t> bipartite_mc(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return g.edge_count();
}

std::size_t dp_mc(const Graph& g) { return max_cut_treewidth_dp(g, greedy_tree_decomposition(g)); }

std::vector<Graph> instance_set() {
    std::vector<Graph> out{gen::complete(4), gen::complete(5), gen::cycle(5), gen::petersen()};
    std::mt19937_64 rng(101);
    for (int i = 0; i < 12; ++i) out.push_back(gen::random_bounded_degree(rng, 2 + rng() % 7, 4, 0.6));
    return out;
}

}  // namespace

TEST_CASE("reduce a single edge") {
    const ReductionOutput r = reduce(gen::path(2));
    CHECK(r.k == 0);
    CHECK(r.t % 2 == 0);
    const Graph& u = r.result();
    CHECK(u.vertex_count() == 2 + r.t);
    CHECK(u.edge_count() == 1 + r.t);
    CHECK(max_degree(u) == 2);
    CHECK(bipartite_mc(u) == 1 + r.t);
    CHECK(recover_mc(dp_mc(u), r.k, r.t) == 1);
}

TEST_CASE("reduce K4 and K5") {
    const ReductionOutput k4 = reduce(gen::complete(4));
    CHECK(recover_mc(dp_mc(k4.result()), k4.k, k4.t) == oracle::max_cut(gen::complete(4)));

    const ReductionOutput k5 = reduce(gen::complete(5));
    CHECK(k5.k >= 1);
    CHECK(recover_mc(dp_mc(k5.result()), k5.k, k5.t) == 6);
    // Frozen from the deterministic construction.
    CHECK(k5.k == 14);
    CHECK(k5.t == 2076);
    CHECK(k5.result().vertex_count() == 2137);
    CHECK(greedy_tree_decomposition(k5.result()).width() <= 12);
}

TEST_CASE("reduce rejects degree five") {
    CHECK_THROWS_AS(reduce(gen::star(5)), UnsupportedInputError);
    CHECK_NOTHROW(reduce(gen::star(4)));
    CHECK_NOTHROW(reduce(gen::edgeless(3)));
    CHECK_NOTHROW(reduce(gen::edgeless(0)));
}

TEST_CASE("bookkeeping invariants") {
    for (const Graph& g : instance_set()) {
        const ReductionOutput r = reduce(g);
        std::size_t sum = 0;
        for (const auto& [e, count] : r.per_edge_subdivisions) {
            CHECK(count % 2 == 0);
            CHECK(g.has_edge(e));
            sum += count;
        }
        CHECK(r.per_edge_subdivisions.size() == g.edge_count());
        CHECK(sum == r.t);
        CHECK(r.t % 2 == 0);
        CHECK(r.gadgets.size() == r.k);
        CHECK(r.crossings.size() == r.k);
        CHECK(r.result().vertex_count() == g.vertex_count() + r.t + 4 * r.k);
        CHECK(r.provenance.size() == r.result().vertex_count());

        std::size_t originals = 0, ws = 0, path_vertices = 0;
        for (const VertexInfo& v : r.provenance) {
            if (v.role == Role::original) ++originals;
            if (v.role == Role::gadget_w) ++ws;
            if (v.role == Role::subdivision || v.role == Role::detour_apex) ++path_vertices;
        }
        CHECK(originals == g.vertex_count());
        CHECK(ws == 4 * r.k);
        CHECK(path_vertices == r.t);

        for (std::size_t c = 0; c < r.k; ++c) {
            const GadgetInstance& gi = r.gadgets[c];
            REQUIRE(gi.center);
            CHECK(*gi.center == r.crossings[c].point + Point{0, kScale / 2});
            CHECK(r.model.points[gi.w_ids[0]] == *gi.center + Point{16, 16});
            CHECK(r.model.points[gi.v_ids[1]] == r.crossings[c].point + Point{0, kScale});
            CHECK(r.model.points[gi.v_ids[3]] == r.crossings[c].point);
        }
    }
}

TEST_CASE("reduced models are valid with precision at least one half") {
    for (const Graph& g : instance_set()) {
        const ReductionOutput r = reduce(g);
        CHECK(validate_model(r.model).ok);
        CHECK(oracle::model_ok(r.model));
        if (r.model.points.size() < 2) continue;
        const Rational p2 = precision2(r.model);
        CHECK(Rational(1, 2) <= p2);
        if (r.k >= 1) CHECK(p2 == Rational(1, 2));
        CHECK(oracle::min_dist2_scaled(r.model) * 2 >= kUnitDist2);
    }
}

TEST_CASE("cut identity end to end") {
    for (const Graph& g : instance_set()) {
        const ReductionOutput r = reduce(g);
        const TreeDecomposition td = greedy_tree_decomposition(r.result());
        CHECK(td.width() <= 12);
        CHECK(recover_mc(max_cut_treewidth_dp(r.result(), td), r.k, r.t) == oracle::max_cut(g));
    }
}

TEST_CASE("intermediate edges have unit length") {
    for (const Graph& g : instance_set()) {
        ReductionTrace trace;
        const ReductionOutput r = reduce(g, &trace);
        std::set<Point> crossing_points;
        for (const CrossingSite& c : r.crossings) crossing_points.insert(c.point);
        const ProximityModel& m = trace.after_subdivision;
        for (const Edge& e : m.graph.edges()) {
            const Point a = m.points[e.u], b = m.points[e.v];
            if (dist2(a, b) == Rational(1)) continue;
            // Only the two edges spanning an empty crossing point are longer.
            CHECK(dist2(a, b) == Rational(4));
            CHECK(crossing_points.count(Point{(a.x + b.x) / 2, (a.y + b.y) / 2}) == 1);
        }
    }
}

TEST_CASE("non-adjacent close pairs sit inside one crossing site") {
    for (const Graph& g : instance_set()) {
        const ReductionOutput r = reduce(g);
        const ProximityModel& m = r.model;
        const std::size_t n = m.points.size();
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b) {
                if (m.graph.has_edge(a, b)) continue;
                if (dist2_scaled(m.points[a], m.points[b]) >= 2 * kUnitDist2) continue;
                bool inside = false;
                for (const CrossingSite& c : r.crossings) {
                    auto near = [&](Point p) {
                        return std::abs(p.x - c.point.x) <= 2 * kScale && std::abs(p.y - c.point.y) <= 2 * kScale;
                    };
                    inside = inside || (near(m.points[a]) && near(m.points[b]));
                }
                CHECK_MESSAGE(inside, "pair " << a << "-" << b);
            }
    }
}

TEST_CASE("recover_mc") {
    CHECK(recover_mc(10, 1, 0) == 2);
    CHECK(recover_mc(17, 0, 0) == 17);
    CHECK(recover_mc(7, 0, 6) == 1);
    CHECK_THROWS_AS(recover_mc(5, 1, 0), InconsistencyError);
}

TEST_CASE("bisection_double") {
    ProximityModel one{Graph(1), {Point{0, 0}}};
    const ProximityModel d1 = bisection_double(one);
    CHECK(d1.points.size() == 2);
    CHECK(d1.graph.edge_count() == 0);
    CHECK(dist2_scaled(d1.points[0], d1.points[1]) > 4 * kUnitDist2);

    ProximityModel k2{gen::path(2), {Point{0, 0}, Point{20, 0}}};
    const ProximityModel d2 = bisection_double(k2);
    CHECK(validate_model(d2).ok);
    CHECK(oracle::max_bisection(d2.graph) == 2);

    const ProximityModel dh = bisection_double(h_model());
    CHECK(validate_model(dh).ok);
    CHECK(oracle::max_bisection(dh.graph) == 20);
    CHECK(max_bisection_bruteforce(dh.graph).size == 2 * oracle::max_cut(build_H()));

    const ReductionOutput r = reduce(gen::path(2));
    CHECK(validate_model(bisection_double(r)).ok);
}
