#include "udgcut/drawing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

constexpr std::int64_t kPlacementSpacing = 6;
constexpr std::int64_t kGapScaled = kStandardGap * kScale;
constexpr std::int64_t kGapDist2 = kGapScaled * kGapScaled;

struct CorridorShape {
    std::int64_t stub_dx, stub_dy;  // stub end relative to the vertex
    bool natural_horizontal;        // line reached directly from the stub
    std::int64_t v_line;            // x offset of the corridor's vertical line
    std::int64_t h_line;            // y offset of the corridor's horizontal line
};

constexpr std::array<CorridorShape, 4> kCorridors{{
    {0, 2, true, -1, 2},    // A: stub up, x = a-1 | y = b+2
    {-2, 0, false, -2, 1},  // B: stub left, x = a-2 | y = b+1
    {0, -2, true, 1, -2},   // C: stub down, x = a+1 | y = b-2
    {2, 0, false, 2, -1},   // D: stub right, x = a+2 | y = b-1
}};

const CorridorShape& shape(Corridor c) { return kCorridors[static_cast<std::size_t>(c)]; }

std::string edge_str(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Route through the corridors of both endpoints; see mesh_draw.
std::vector<Point> route_between(Point pu, Corridor cu, Point pv, Corridor cv) {
    const auto m = [](std::int64_t v) { return v * kScale; };
    const CorridorShape& su = shape(cu);
    const CorridorShape& sv = shape(cv);
    const Point stub_u{pu.x + m(su.stub_dx), pu.y + m(su.stub_dy)};
    const Point stub_v{pv.x + m(sv.stub_dx), pv.y + m(sv.stub_dy)};
    const std::int64_t u_vline = pu.x + m(su.v_line);
    const std::int64_t u_hline = pu.y + m(su.h_line);
    const std::int64_t v_vline = pv.x + m(sv.v_line);
    const std::int64_t v_hline = pv.y + m(sv.h_line);
    const Point bend_u{u_vline, u_hline};

    if (su.natural_horizontal && !sv.natural_horizontal) return {pu, stub_u, {v_vline, u_hline}, stub_v, pv};
    if (!su.natural_horizontal && sv.natural_horizontal) return {pu, stub_u, {u_vline, v_hline}, stub_v, pv};
    if (su.natural_horizontal) return {pu, stub_u, bend_u, {u_vline, v_hline}, stub_v, pv};
    return {pu, stub_u, bend_u, {v_vline, u_hline}, stub_v, pv};
}

struct Seg {
    Segment s;
    std::size_t route;
    std::size_t index;  // position within the route
};

std::vector<Seg> collect_segments(const MeshDrawing& d) {
    std::vector<Seg> segs;
    for (std::size_t r = 0; r < d.routes.size(); ++r) {
        const auto& path = d.routes[r].path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) segs.push_back({Segment(path[i], path[i + 1]), r, i});
    }
    return segs;
}

void check_structure(const MeshDrawing& d) {
    std::set<Point> seen;
    for (std::size_t v = 0; v < d.placement.size(); ++v) {
        const Point p = d.placement[v];
        if (!p.is_mesh_cross()) throw InvalidDrawingError("vertex " + std::to_string(v) + " is not on a mesh cross");
        if (!seen.insert(p).second) throw InvalidDrawingError("two vertices placed at " + p.str());
    }
    for (std::size_t r = 0; r < d.routes.size(); ++r) {
        const Route& route = d.routes[r];
        const Edge e = route.edge;
        if (e.u >= e.v || e.v >= d.placement.size())
            throw InvalidDrawingError("route " + std::to_string(r) + " has a malformed edge");
        if (r > 0 && !(d.routes[r - 1].edge < e)) throw InvalidDrawingError("routes not sorted by edge");
        const auto& path = route.path;
        if (path.size() < 2 || path.front() != d.placement[e.u] || path.back() != d.placement[e.v])
            throw InvalidDrawingError("route " + edge_str(e) + " does not join its endpoints");
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (!path[i].is_mesh_cross())
                throw InvalidDrawingError("route " + edge_str(e) + " has a corner off the mesh");
            if (i + 1 < path.size()) {
                const Point a = path[i];
                const Point b = path[i + 1];
                if (a == b) throw InvalidDrawingError("route " + edge_str(e) + " repeats a corner");
                if (a.x != b.x && a.y != b.y)
                    throw InvalidDrawingError("route " + edge_str(e) + " has a non-axis-parallel segment");
            }
            if (i > 0 && i + 1 < path.size()) {
                const bool in_h = path[i - 1].y == path[i].y;
                const bool out_h = path[i].y == path[i + 1].y;
                if (in_h == out_h) throw InvalidDrawingError("route " + edge_str(e) + " has a corner without a turn");
            }
        }
    }
}

// Validates pairwise segment relations and returns the crossing report.
CrossingReport analyze(const MeshDrawing& d) {
    check_structure(d);
    const std::vector<Seg> segs = collect_segments(d);

    // No route may pass through a vertex other than at its own ends.
    for (const Seg& sg : segs) {
        const Route& route = d.routes[sg.route];
        const std::size_t last = route.path.size() - 2;
        for (VertexId w = 0; w < d.placement.size(); ++w) {
            const Point p = d.placement[w];
            if (!on_segment(sg.s, p)) continue;
            const bool start_ok = sg.index == 0 && w == route.edge.u && p == sg.s.a;
            const bool end_ok = sg.index == last && w == route.edge.v && p == sg.s.b;
            if (!start_ok && !end_ok)
                throw InvalidDrawingError("route " + edge_str(route.edge) + " passes through vertex " +
                                          std::to_string(w));
        }
    }

    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (classify_intersection(segs[i].s, segs[j].s).kind == IntersectionKind::overlap)
                throw DegenerateOverlapError("routes " + edge_str(d.routes[segs[i].route].edge) + " and " +
                                             edge_str(d.routes[segs[j].route].edge) + " overlap along a mesh line");

    CrossingReport report;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& a = segs[i];
            const Seg& b = segs[j];
            const bool same_route = a.route == b.route;
            if (same_route && b.index == a.index + 1) continue;  // consecutive, share a corner
            const Intersection in = classify_intersection(a.s, b.s);
            if (in.kind == IntersectionKind::none) continue;
            const Edge ea = d.routes[a.route].edge;
            const Edge eb = d.routes[b.route].edge;
            if (same_route) throw InvalidDrawingError("route " + edge_str(ea) + " intersects itself");
            if (in.kind == IntersectionKind::touch) {
                // Only legal when both routes end at a common vertex.
                bool shared_end = false;
                for (VertexId w : {ea.u, ea.v})
                    if (eb.has(w) && on_segment(a.s, d.placement[w]) && on_segment(b.s, d.placement[w]))
                        shared_end = true;
                if (!shared_end)
                    throw InvalidDrawingError("routes " + edge_str(ea) + " and " + edge_str(eb) +
                                              " touch without crossing");
                continue;
            }
            const auto p = in.point->to_point();
            if (!p || !p->is_mesh_cross())
                throw InvalidDrawingError("crossing off a mesh cross between " + edge_str(ea) + " and " + edge_str(eb));
            const bool a_horizontal = a.s.is_horizontal();
            const Seg& h = a_horizontal ? a : b;
            const Seg& v = a_horizontal ? b : a;
            report.push_back({*p, h.route, v.route, d.routes[h.route].edge, d.routes[v.route].edge});
        }
    }
    std::sort(report.begin(), report.end(), [](const CrossingEntry& a, const CrossingEntry& b) {
        return std::tie(a.point, a.horizontal, a.vertical) < std::tie(b.point, b.horizontal, b.vertical);
    });
    for (std::size_t i = 1; i < report.size(); ++i)
        if (report[i].point == report[i - 1].point)
            throw InvalidDrawingError("three or more routes meet at " + report[i].point.str());
    return report;
}

template <class Pts>
ConditionResult pairwise_apart(const Pts& a, const Pts& b, bool same_set) {
    ConditionResult res;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = same_set ? i + 1 : 0; j < b.size(); ++j) {
            if (dist2_scaled(a[i], b[j]) >= kGapDist2) continue;
            if (res.pass) res.witness = std::make_pair(a[i], b[j]);
            res.pass = false;
            ++res.violations;
        }
    return res;
}

// Distinct coordinate values of vertices and corners along one axis.
std::vector<std::int64_t> feature_coords(const MeshDrawing& d, Axis axis) {
    std::vector<std::int64_t> vals;
    auto take = [&](Point p) { vals.push_back(axis == Axis::x ? p.x : p.y); };
    for (Point p : d.placement) take(p);
    for (const Route& r : d.routes)
        for (Point p : r.path) take(p);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

}  // namespace

Graph graph_of(const MeshDrawing& d) {
    Graph g(d.placement.size());
    for (const Route& r : d.routes) g.add_edge(r.edge.u, r.edge.v);
    return g;
}

Corridor corridor_of(const Graph& g, VertexId v, VertexId neighbor) {
    const auto& nb = g.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), neighbor);
    if (it == nb.end() || *it != neighbor)
        throw InputError("no edge " + std::to_string(v) + "-" + std::to_string(neighbor));
    const auto idx = static_cast<std::size_t>(it - nb.begin());
    if (idx >= 4) throw UnsupportedInputError("vertex " + std::to_string(v) + " has degree > 4");
    return static_cast<Corridor>(idx);
}

bool on_corridor(Point vertex, Corridor c, Point p) {
    const CorridorShape& s = shape(c);
    return p.x == vertex.x + s.v_line * kScale || p.y == vertex.y + s.h_line * kScale;
}

MeshDrawing mesh_draw(const Graph& g) {
    const std::size_t delta = max_degree(g);
    if (delta > 4)
        throw UnsupportedInputError("mesh drawings need maximum degree <= 4, got " + std::to_string(delta));
    MeshDrawing d;
    d.placement.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto c = static_cast<std::int64_t>(i) * kPlacementSpacing;
        d.placement.push_back(Point::mesh(c, c));
    }
    for (const Edge& e : g.edges())
        d.routes.push_back({e, route_between(d.placement[e.u], corridor_of(g, e.u, e.v), d.placement[e.v],
                                             corridor_of(g, e.v, e.u))});
    return d;
}

void check_drawing(const MeshDrawing& d) { (void)analyze(d); }

CrossingReport crossings(const MeshDrawing& d) { return analyze(d); }

MeshDrawing shift_half_plane(const MeshDrawing& d, Axis axis, std::int64_t line, std::int64_t amount) {
    const std::int64_t line_s = line * kScale;
    const std::int64_t amount_s = amount * kScale;
    auto move = [&](Point& p) {
        std::int64_t& c = axis == Axis::x ? p.x : p.y;
        if (c <= line_s) c -= amount_s;
    };
    MeshDrawing out = d;
    for (Point& p : out.placement) move(p);
    for (Route& r : out.routes)
        for (Point& p : r.path) move(p);
    return out;
}

StandardReport validate_standard(const MeshDrawing& d) {
    const CrossingReport cr = analyze(d);
    std::vector<Point> cross_pts;
    for (const auto& c : cr) cross_pts.push_back(c.point);

    StandardReport rep;
    rep.crossings_apart = pairwise_apart(cross_pts, cross_pts, true);
    rep.vertices_apart = pairwise_apart(d.placement, d.placement, true);
    rep.vertex_crossing_apart = pairwise_apart(d.placement, cross_pts, false);

    // (iv): carrier lines of two different edges, on distinct parallel lines.
    struct Carrier {
        bool vertical;
        std::int64_t coord;
        std::size_t route;
        Point sample;
    };
    std::vector<Carrier> carriers;
    for (std::size_t r = 0; r < d.routes.size(); ++r) {
        const auto& path = d.routes[r].path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const bool vertical = path[i].x == path[i + 1].x;
            carriers.push_back({vertical, vertical ? path[i].x : path[i].y, r, path[i]});
        }
    }
    for (std::size_t i = 0; i < carriers.size(); ++i)
        for (std::size_t j = i + 1; j < carriers.size(); ++j) {
            const Carrier& a = carriers[i];
            const Carrier& b = carriers[j];
            if (a.vertical != b.vertical || a.route == b.route || a.coord == b.coord) continue;
            const std::int64_t gap = a.coord > b.coord ? a.coord - b.coord : b.coord - a.coord;
            if (gap >= kGapScaled) continue;
            if (rep.carriers_apart.pass) rep.carriers_apart.witness = std::make_pair(a.sample, b.sample);
            rep.carriers_apart.pass = false;
            ++rep.carriers_apart.violations;
        }

    for (Axis axis : {Axis::x, Axis::y}) {
        const auto vals = feature_coords(d, axis);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size() && vals[j] - vals[i] < kGapScaled; ++j) {
                if (rep.features_apart.pass) {
                    const Point a = axis == Axis::x ? Point{vals[i], 0} : Point{0, vals[i]};
                    const Point b = axis == Axis::x ? Point{vals[j], 0} : Point{0, vals[j]};
                    rep.features_apart.witness = std::make_pair(a, b);
                }
                rep.features_apart.pass = false;
                ++rep.features_apart.violations;
            }
    }
    return rep;
}

StandardizeResult standardize_traced(const MeshDrawing& d) {
    check_drawing(d);
    StandardizeResult res{d, {}};
    for (;;) {
        bool shifted = false;
        for (Axis axis : {Axis::x, Axis::y}) {
            const auto vals = feature_coords(res.drawing, axis);
            for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
                if (vals[i + 1] - vals[i] >= kGapScaled) continue;
                const Shift s{axis, vals[i] / kScale, kStandardGap};
                res.drawing = shift_half_plane(res.drawing, s.axis, s.line, s.amount);
                res.shifts.push_back(s);
                shifted = true;
                break;
            }
            if (shifted) break;
        }
        if (!shifted) break;
    }
    if (!validate_standard(res.drawing).fully_separated())
        throw ConstructionError("standardization left a violated condition");
    return res;
}

MeshDrawing standardize(const MeshDrawing& d) { return standardize_traced(d).drawing; }

}  // namespace udgcut
