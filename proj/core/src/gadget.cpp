#include "udgcut/gadget.hpp"

#include <set>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

// 1/2 and 4/5 mesh units in internal units.
constexpr std::int64_t kHalf = kScale / 2;
constexpr std::int64_t kFourFifths = kScale * 4 / 5;

}  // namespace

Graph build_H() {
    Graph h(8);
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b) h.add_edge(a, b);
    for (VertexId i = 0; i < 4; ++i) {
        h.add_edge(4 + i, i);
        h.add_edge(4 + i, (i + 1) % 4);
    }
    return h;
}

std::array<Point, 8> h_offsets() {
    return {{
        {kHalf, 0},
        {0, kHalf},
        {-kHalf, 0},
        {0, -kHalf},
        {kFourFifths, kFourFifths},
        {-kFourFifths, kFourFifths},
        {-kFourFifths, -kFourFifths},
        {kFourFifths, -kFourFifths},
    }};
}

ProximityModel h_model(Point center) {
    ProximityModel m{build_H(), {}};
    for (Point off : h_offsets()) m.points.push_back(center + off);
    return m;
}

GadgetResult construct_H_on(const Graph& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2,
                            GadgetPrecondition mode) {
    const std::array<VertexId, 4> v{e1.first, e2.first, e1.second, e2.second};
    auto name = [](VertexId a, VertexId b) { return std::to_string(a) + "-" + std::to_string(b); };

    if (!g.has_edge(v[0], v[2])) throw PreconditionError("gadget edge " + name(v[0], v[2]) + " not in host graph");
    if (!g.has_edge(v[1], v[3])) throw PreconditionError("gadget edge " + name(v[1], v[3]) + " not in host graph");
    if (std::set<VertexId>(v.begin(), v.end()).size() != 4)
        throw PreconditionError("gadget edges " + name(v[0], v[2]) + " and " + name(v[1], v[3]) +
                                " share an endpoint");
    if (mode == GadgetPrecondition::enforce)
        for (std::size_t i = 0; i < 4; ++i)
            if (g.has_edge(v[i], v[(i + 1) % 4]))
                throw PreconditionError("host already contains cycle edge " + name(v[i], v[(i + 1) % 4]));

    GadgetResult res{g, {}};
    res.instance.v_ids = v;
    auto add = [&](VertexId a, VertexId b) {
        if (res.graph.has_edge(a, b)) return;
        res.graph.add_edge(a, b);
        res.instance.added_edges.push_back(make_edge(a, b));
    };
    for (std::size_t i = 0; i < 4; ++i) add(v[i], v[(i + 1) % 4]);
    for (std::size_t i = 0; i < 4; ++i) {
        const VertexId w = res.graph.add_vertex();
        res.instance.w_ids[i] = w;
        add(w, v[i]);
        add(w, v[(i + 1) % 4]);
    }
    return res;
}

}  // namespace udgcut
