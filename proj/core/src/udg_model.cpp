#include "udgcut/udg_model.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Smallest r >= 0 with r*r >= v.
std::int64_t isqrt_ceil(std::int64_t v) {
    std::int64_t lo = 0;
    std::int64_t hi = 3'037'000'500;  // > sqrt(INT64_MAX)
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (static_cast<detail::int128>(mid) * mid >= v)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

/// Uniform bucketing of plane points, cell side `cell` internal units.
class Grid {
public:
    explicit Grid(std::int64_t cell) : cell_(cell) {}

    void insert(Point p, std::size_t item) { cells_[key(cx(p), cy(p))].push_back(item); }

    template <class F>
    void for_each_near(Point p, std::int64_t radius_cells, F&& f) const {
        const std::int64_t x0 = cx(p);
        const std::int64_t y0 = cy(p);
        for (std::int64_t dx = -radius_cells; dx <= radius_cells; ++dx)
            for (std::int64_t dy = -radius_cells; dy <= radius_cells; ++dy) {
                auto it = cells_.find(key(x0 + dx, y0 + dy));
                if (it == cells_.end()) continue;
                for (std::size_t item : it->second) f(item);
            }
    }

private:
    std::int64_t cx(Point p) const { return floor_div(p.x, cell_); }
    std::int64_t cy(Point p) const { return floor_div(p.y, cell_); }
    static std::uint64_t key(std::int64_t x, std::int64_t y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
               static_cast<std::uint32_t>(y);
    }

    std::int64_t cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

void check_shape(const ProximityModel& m) {
    if (m.points.size() != m.graph.vertex_count())
        throw InvalidModelError("model has " + std::to_string(m.points.size()) + " points for " +
                                std::to_string(m.graph.vertex_count()) + " vertices");
}

[[noreturn]] void coincident(const ProximityModel& m, std::size_t u, std::size_t v) {
    throw InvalidModelError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " share the point " + m.points[u].str());
}

}  // namespace

ModelReport validate_model(const ProximityModel& m) {
    check_shape(m);
    ModelReport report;
    Grid grid(kScale);
    for (std::size_t v = 0; v < m.points.size(); ++v) grid.insert(m.points[v], v);

    for (std::size_t u = 0; u < m.points.size(); ++u) {
        std::vector<std::size_t> near;
        grid.for_each_near(m.points[u], 1, [&](std::size_t w) {
            if (w > u) near.push_back(w);
        });
        std::sort(near.begin(), near.end());
        for (std::size_t w : near) {
            const std::int64_t d = dist2_scaled(m.points[u], m.points[w]);
            if (d == 0) coincident(m, u, w);
            if (d <= kUnitDist2 && !m.graph.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(w)))
                report.failures.push_back({AdjacencyWitness::Kind::missing_edge, static_cast<VertexId>(u),
                                           static_cast<VertexId>(w), Rational(d, kUnitDist2)});
        }
    }
    for (const Edge& e : m.graph.edges()) {
        const std::int64_t d = dist2_scaled(m.points[e.u], m.points[e.v]);
        if (d > kUnitDist2)
            report.failures.push_back({AdjacencyWitness::Kind::edge_too_long, e.u, e.v, Rational(d, kUnitDist2)});
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    report.ok = report.failures.empty();
    return report;
}

Rational precision2(const ProximityModel& m) {
    check_shape(m);
    const auto& pts = m.points;
    if (pts.size() < 2) throw InputError("precision is undefined for fewer than two points");

    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });

    // Plane sweep by x; the active set holds points within sqrt(best) in x.
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::set<std::pair<std::int64_t, std::size_t>> active;
    std::size_t left = 0;
    for (std::size_t i : order) {
        const Point p = pts[i];
        while (left < order.size()) {
            const Point q = pts[order[left]];
            const auto dx = static_cast<detail::int128>(p.x) - q.x;
            if (dx * dx <= best) break;
            active.erase({q.y, order[left]});
            ++left;
        }
        const std::int64_t r = isqrt_ceil(best);
        auto it = active.lower_bound({p.y > std::numeric_limits<std::int64_t>::min() + r ? p.y - r : p.y, 0});
        for (; it != active.end() && it->first <= p.y + r; ++it) {
            const std::int64_t d = dist2_scaled(p, pts[it->second]);
            if (d == 0) coincident(m, std::min(i, it->second), std::max(i, it->second));
            best = std::min(best, d);
        }
        active.insert({p.y, i});
    }
    return Rational(best, kUnitDist2);
}

std::vector<SegmentWitness> straight_line_crossings(const ProximityModel& m) {
    check_shape(m);
    const std::vector<Edge> edges = m.graph.edges();

    std::int64_t longest = 0;
    for (const Edge& e : edges) longest = std::max(longest, dist2_scaled(m.points[e.u], m.points[e.v]));
    // Two meeting segments have first endpoints within 2 * longest of each other.
    const std::int64_t radius = 2 * isqrt_ceil(longest) / kScale + 1;

    Grid grid(kScale);
    for (std::size_t i = 0; i < edges.size(); ++i) grid.insert(m.points[edges[i].u], i);

    std::vector<SegmentWitness> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        const Segment s(m.points[e.u], m.points[e.v]);
        std::vector<std::size_t> near;
        grid.for_each_near(s.a, radius, [&](std::size_t j) {
            if (j > i) near.push_back(j);
        });
        std::sort(near.begin(), near.end());
        for (std::size_t j : near) {
            const Edge f = edges[j];
            const Intersection in = classify_intersection(s, Segment(m.points[f.u], m.points[f.v]));
            if (in.kind == IntersectionKind::none) continue;
            const bool shared = e.has(f.u) || e.has(f.v);
            if (shared && in.kind == IntersectionKind::touch) continue;
            out.push_back({e, f, in.kind, in.point});
        }
    }
    return out;
}

const char* to_string(PlanarityVerdict v) {
    switch (v) {
        case PlanarityVerdict::planar_by_theorem: return "planar_by_theorem";
        case PlanarityVerdict::planar_by_check: return "planar_by_check";
        case PlanarityVerdict::not_planar_drawing: return "not_planar_drawing";
    }
    return "?";
}

PlanarityVerdict planarity_verdict(const ProximityModel& m) {
    check_shape(m);
    if (m.points.size() < 2) return PlanarityVerdict::planar_by_theorem;
    const Rational p2 = precision2(m);
    const auto witnesses = straight_line_crossings(m);
    if (p2 > Rational(1, 2)) {
        if (!witnesses.empty())
            throw TheoremViolationError("crossing between edges " + std::to_string(witnesses[0].e.u) + "-" +
                                        std::to_string(witnesses[0].e.v) + " and " +
                                        std::to_string(witnesses[0].f.u) + "-" + std::to_string(witnesses[0].f.v) +
                                        " in a model with precision^2 " + p2.str());
        return PlanarityVerdict::planar_by_theorem;
    }
    return witnesses.empty() ? PlanarityVerdict::planar_by_check : PlanarityVerdict::not_planar_drawing;
}

Rational conflict_gap2(const Rational& x) {
    if (x <= Rational(0) || x > Rational(1)) throw InputError("edge length " + x.str() + " outside (0, 1]");
    return Rational(2) - x * x;
}

}  // namespace udgcut
