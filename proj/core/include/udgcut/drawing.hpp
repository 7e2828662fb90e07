#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udgcut/geometry.hpp"
#include "udgcut/graph.hpp"

namespace udgcut {

/// Axis-aligned polyline for one edge, listed from placement[edge.u] to
/// placement[edge.v]. Every listed point is a mesh cross.
struct Route {
    Edge edge;
    std::vector<Point> path;
};

/// Vertices on mesh crosses, edges as orthogonal polylines on the mesh.
/// `routes` is sorted by edge, one route per edge of the drawn graph.
struct MeshDrawing {
    std::vector<Point> placement;
    std::vector<Route> routes;
};

/// The abstract graph a drawing depicts.
Graph graph_of(const MeshDrawing& d);

struct CrossingEntry {
    Point point;
    std::size_t horizontal_route;  ///< index into MeshDrawing::routes
    std::size_t vertical_route;
    Edge horizontal;
    Edge vertical;
};

/// Sorted by point.
using CrossingReport = std::vector<CrossingEntry>;

/// The four per-vertex corridors of a vertex at (a, b):
///   A: x = a-1 or y = b+2     B: x = a-2 or y = b+1
///   C: x = a+1 or y = b-2     D: x = a+2 or y = b-1
enum class Corridor { A, B, C, D };

/// Corridor assigned to the edge {v, neighbor}: v's incident edges sorted
/// by neighbor id take A, B, C, D in order.
Corridor corridor_of(const Graph& g, VertexId v, VertexId neighbor);

/// Is p on one of the two lines of corridor c of a vertex placed at `vertex`?
bool on_corridor(Point vertex, Corridor c, Point p);

/// Orthogonal drawing of a max-degree-4 graph. Vertex i sits at mesh cross
/// (6i, 6i). Each edge leaves its endpoint through a short stub into its
/// corridor and then follows corridor lines of its two endpoints.
/// Throws UnsupportedInputError for degree > 4.
MeshDrawing mesh_draw(const Graph& g);

/// Throws InvalidDrawingError (DegenerateOverlapError for collinear
/// overlaps) naming the first broken drawing invariant.
void check_drawing(const MeshDrawing& d);

/// Every crossing point with its horizontal and vertical edge. Validates
/// the drawing on the way.
CrossingReport crossings(const MeshDrawing& d);

enum class Axis { x, y };

/// Separating-line shift: every point with coordinate <= line on `axis`
/// moves by -amount (mesh units). Segments cut by the line are stretched,
/// so the drawing stays orthogonal and its topology is unchanged.
MeshDrawing shift_half_plane(const MeshDrawing& d, Axis axis, std::int64_t line, std::int64_t amount);

struct Shift {
    Axis axis;
    std::int64_t line;    ///< mesh units
    std::int64_t amount;  ///< mesh units
};

/// Minimum separation (mesh units) a standard drawing keeps.
inline constexpr std::int64_t kStandardGap = 10;

struct ConditionResult {
    bool pass = true;
    std::optional<std::pair<Point, Point>> witness;  ///< first violating pair
    std::size_t violations = 0;
};

struct StandardReport {
    ConditionResult crossings_apart;         ///< (i)   crossing-crossing >= 10
    ConditionResult vertices_apart;          ///< (ii)  vertex-vertex >= 10
    ConditionResult vertex_crossing_apart;   ///< (iii) vertex-crossing >= 10
    ConditionResult carriers_apart;          ///< (iv)  parallel carrier lines >= 10
    /// Distinct coordinates of vertices and route corners are >= 10 apart
    /// on each axis. Stronger than (i)-(iv) together; it also keeps every
    /// vertex and corner clear of foreign routes, which the unit disk
    /// construction relies on.
    ConditionResult features_apart;

    bool standard() const {
        return crossings_apart.pass && vertices_apart.pass && vertex_crossing_apart.pass && carriers_apart.pass;
    }
    bool fully_separated() const { return standard() && features_apart.pass; }
    std::size_t violating_pairs() const {
        return crossings_apart.violations + vertices_apart.violations + vertex_crossing_apart.violations +
               carriers_apart.violations + features_apart.violations;
    }
};

StandardReport validate_standard(const MeshDrawing& d);

struct StandardizeResult {
    MeshDrawing drawing;
    std::vector<Shift> shifts;  ///< in application order
};

/// Repeated separating-line shifts (c = 10) until every condition of
/// StandardReport holds. A drawing that already satisfies them is returned
/// unchanged.
StandardizeResult standardize_traced(const MeshDrawing& d);
MeshDrawing standardize(const MeshDrawing& d);

}  // namespace udgcut
