#include "udgcut/reduction.hpp"

#include <algorithm>
#include <map>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

constexpr std::int64_t kHalf = kScale / 2;
constexpr std::int64_t kQuarter = kScale / 4;

struct PathNode {
    Point p;
    std::optional<std::size_t> crossing;
};

enum class Stage { subdivided, rewired };

// Unit-spaced walk along a route, endpoints included.
std::vector<Point> unit_walk(const Route& r) {
    std::vector<Point> out{r.path.front()};
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
        const Point a = r.path[i];
        const Point b = r.path[i + 1];
        const Point step{(b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)};
        Point p = a;
        while (p != b) {
            p = p + Point{step.x * kScale, step.y * kScale};
            out.push_back(p);
        }
    }
    return out;
}

// Interior nodes of one route after Step 2 (and Step 3 when rewired).
std::vector<PathNode> interior_nodes(const std::vector<Point>& walk, std::size_t route,
                                     const std::map<Point, std::size_t>& cross_at,
                                     const std::vector<std::size_t>& vertical_route, Stage stage) {
    std::vector<PathNode> out;
    for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
        const Point p = walk[i];
        auto it = cross_at.find(p);
        if (it == cross_at.end()) {
            out.push_back({p, std::nullopt});
            continue;
        }
        if (stage == Stage::subdivided) continue;
        const std::size_t c = it->second;
        if (vertical_route[c] == route) {
            // The vertical crossing edge is subdivided at the crossing point.
            if (walk[i - 1].x != p.x || walk[i + 1].x != p.x)
                throw ConstructionError("vertical edge bends at crossing " + p.str());
            out.push_back({p, c});
            continue;
        }
        // Horizontal edge: drop the unit neighbours, detour above the crossing.
        if (i < 2 || i + 2 >= walk.size())
            throw ConstructionError("crossing " + p.str() + " too close to a route end");
        const std::int64_t dir = walk[i + 1].x > p.x ? 1 : -1;
        for (std::size_t k : {i - 2, i - 1, i + 1, i + 2}) {
            const auto off = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i);
            if (walk[k] != Point{p.x + dir * off * kScale, p.y})
                throw ConstructionError("horizontal edge not straight around crossing " + p.str());
        }
        if (out.empty() || out.back().p != walk[i - 1])
            throw ConstructionError("unexpected path shape before crossing " + p.str());
        out.pop_back();
        for (std::int64_t off : {-3, -1, 1, 3})
            out.push_back({{p.x + dir * off * kHalf, p.y + kHalf}, c});
        ++i;  // skip the far unit neighbour
    }
    return out;
}

struct Assembly {
    ProximityModel model;
    std::vector<VertexInfo> info;
    std::vector<std::vector<VertexId>> paths;  // per source edge, endpoints included
    std::map<Point, VertexId> id_at;
};

Assembly assemble(const Graph& g, const MeshDrawing& d, const std::vector<CrossingSite>& sites,
                  const std::vector<std::size_t>& vertical_route, Stage stage) {
    std::map<Point, std::size_t> cross_at;
    for (std::size_t c = 0; c < sites.size(); ++c) cross_at[sites[c].point] = c;

    Assembly a;
    a.model.graph = Graph(g.vertex_count());
    a.model.points = d.placement;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        a.info.push_back({Role::original, v, std::nullopt});
        a.id_at[d.placement[v]] = v;
    }
    for (std::size_t r = 0; r < d.routes.size(); ++r) {
        const Route& route = d.routes[r];
        const auto nodes = interior_nodes(unit_walk(route), r, cross_at, vertical_route, stage);
        std::vector<VertexId> ids{route.edge.u};
        for (const PathNode& n : nodes) {
            const VertexId id = a.model.graph.add_vertex();
            a.model.points.push_back(n.p);
            a.info.push_back({Role::subdivision, r, n.crossing});
            if (!a.id_at.emplace(n.p, id).second)
                throw ConstructionError("two path vertices at " + n.p.str());
            ids.push_back(id);
        }
        ids.push_back(route.edge.v);
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) a.model.graph.add_edge(ids[i], ids[i + 1]);
        a.paths.push_back(std::move(ids));
    }
    return a;
}

VertexId id_at(const Assembly& a, Point p) {
    auto it = a.id_at.find(p);
    if (it == a.id_at.end()) throw ConstructionError("no vertex at " + p.str());
    return it->second;
}

// First unit horizontal edge p[i]-p[i+1] inside a straight run of six
// integer-placed degree-2 path vertices p[i-2..i+3].
std::optional<std::size_t> find_detour_site(const Graph& graph, const std::vector<Point>& pts,
                                            const std::vector<VertexId>& path) {
    for (std::size_t i = 3; i + 4 < path.size(); ++i) {
        bool ok = true;
        const Point base = pts[path[i]];
        const std::int64_t dir = pts[path[i + 1]].x > base.x ? 1 : -1;
        for (std::size_t k = i - 2; k <= i + 3 && ok; ++k) {
            const Point p = pts[path[k]];
            const auto off = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i);
            ok = p.is_mesh_cross() && p == Point{base.x + dir * off * kScale, base.y} &&
                 graph.degree(path[k]) == 2;
        }
        if (ok) return i;
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(Role r) {
    switch (r) {
        case Role::original: return "original";
        case Role::subdivision: return "subdivision";
        case Role::gadget_w: return "gadget_w";
        case Role::detour_apex: return "detour_apex";
    }
    return "?";
}

ReductionOutput reduce(const Graph& g, ReductionTrace* trace) {
    const std::size_t delta = max_degree(g);
    if (delta > 4) throw UnsupportedInputError("reduction needs maximum degree <= 4, got " + std::to_string(delta));

    ReductionOutput out;
    out.source = g;

    // Step 1: standard mesh drawing.
    out.drawing = standardize(mesh_draw(g));
    const CrossingReport report = crossings(out.drawing);
    std::vector<std::size_t> vertical_route;
    for (const CrossingEntry& c : report) {
        out.crossings.push_back({c.point, c.horizontal, c.vertical});
        vertical_route.push_back(c.vertical_route);
    }
    out.k = out.crossings.size();

    if (trace) {
        Assembly s2 = assemble(g, out.drawing, out.crossings, vertical_route, Stage::subdivided);
        trace->after_subdivision = std::move(s2.model);
    }

    // Steps 2 and 3: unit subdivision, crossing edges re-routed.
    Assembly a = assemble(g, out.drawing, out.crossings, vertical_route, Stage::rewired);
    if (trace) trace->after_rewiring = a.model;

    // Step 4: a copy of H on each crossing, centered half a unit above it.
    const auto offsets = h_offsets();
    for (std::size_t c = 0; c < out.crossings.size(); ++c) {
        const Point x = out.crossings[c].point;
        const Point center{x.x, x.y + kHalf};
        const VertexId v0 = id_at(a, center + offsets[0]);
        const VertexId v1 = id_at(a, center + offsets[1]);
        const VertexId v2 = id_at(a, center + offsets[2]);
        const VertexId v3 = id_at(a, center + offsets[3]);
        GadgetResult gr = construct_H_on(a.model.graph, {v0, v2}, {v1, v3});
        a.model.graph = std::move(gr.graph);
        gr.instance.center = center;
        for (std::size_t i = 0; i < 4; ++i) {
            a.model.points.push_back(center + offsets[4 + i]);
            a.info.push_back({Role::gadget_w, 0, c});
        }
        out.gadgets.push_back(std::move(gr.instance));
    }

    // Step 5: one more subdivision on every path with an odd interior count.
    for (std::size_t e = 0; e < a.paths.size(); ++e) {
        auto& path = a.paths[e];
        if ((path.size() - 2) % 2 == 0) continue;
        const auto site = find_detour_site(a.model.graph, a.model.points, path);
        if (!site) throw ConstructionError("no detour site on edge " + std::to_string(e));
        const VertexId p = path[*site];
        const VertexId q = path[*site + 1];
        const VertexId left = a.model.points[p].x < a.model.points[q].x ? p : q;
        const VertexId right = left == p ? q : p;
        const Point anchor = a.model.points[left];
        a.model.points[left] = {anchor.x - kQuarter, anchor.y};
        a.model.points[right] = {anchor.x + kScale + kQuarter, anchor.y};
        a.model.graph.remove_edge(p, q);
        const VertexId apex = a.model.graph.add_vertex();
        a.model.points.push_back({anchor.x + kHalf, anchor.y + kHalf});
        a.info.push_back({Role::detour_apex, e, std::nullopt});
        a.model.graph.add_edge(p, apex);
        a.model.graph.add_edge(apex, q);
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(*site) + 1, apex);
    }

    const auto edges = g.edges();
    for (std::size_t e = 0; e < a.paths.size(); ++e) {
        const std::size_t count = a.paths[e].size() - 2;
        if (count % 2 != 0) throw ConstructionError("odd subdivision count left on edge " + std::to_string(e));
        out.per_edge_subdivisions.emplace_back(edges[e], count);
        out.t += count;
    }
    out.model = std::move(a.model);
    out.provenance = std::move(a.info);

    if (out.model.graph.vertex_count() != g.vertex_count() + out.t + 4 * out.k)
        throw ConstructionError("vertex count does not match n + t + 4k");
    const ModelReport rep = validate_model(out.model);
    if (!rep.ok) {
        const auto& w = rep.failures.front();
        throw ConstructionError("proximity model invalid at pair " + std::to_string(w.u) + "-" + std::to_string(w.v) +
                                " (dist2 " + w.dist2.str() + ")");
    }
    return out;
}

std::size_t recover_mc(std::size_t mc_u, std::size_t k, std::size_t t) {
    const std::size_t offset = 8 * k + t;
    if (mc_u < offset)
        throw InconsistencyError("mc(U) = " + std::to_string(mc_u) + " is below 8k + t = " + std::to_string(offset));
    return mc_u - offset;
}

ProximityModel bisection_double(const ProximityModel& m) {
    if (m.points.size() != m.graph.vertex_count()) throw InvalidModelError("model size mismatch");
    ProximityModel out{disjoint_union(m.graph, m.graph), m.points};
    if (m.points.empty()) return out;
    const auto [lo, hi] = std::minmax_element(m.points.begin(), m.points.end(),
                                              [](Point a, Point b) { return a.x < b.x; });
    const std::int64_t shift = (hi->x - lo->x) + 3 * kScale;
    for (Point p : m.points) out.points.push_back({p.x + shift, p.y});
    return out;
}

ProximityModel bisection_double(const ReductionOutput& r) { return bisection_double(r.model); }

}  // namespace udgcut
