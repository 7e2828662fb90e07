#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "udgcut/geometry.hpp"
#include "udgcut/graph.hpp"
#include "udgcut/rational.hpp"

namespace udgcut {

/// One plane point per vertex; the model is valid when two vertices are
/// adjacent exactly if their points are at distance <= 1.
struct ProximityModel {
    Graph graph;
    std::vector<Point> points;
};

struct AdjacencyWitness {
    enum class Kind {
        edge_too_long,   ///< edge present but dist2 > 1
        missing_edge,    ///< dist2 <= 1 but no edge
    };
    Kind kind;
    VertexId u;
    VertexId v;
    Rational dist2;
};

struct ModelReport {
    bool ok = true;
    std::vector<AdjacencyWitness> failures;
};

/// Checks (uv in E) <=> dist2(u, v) <= 1 over every pair. Uses a unit grid,
/// so it runs in near-linear time on sparse models. Throws InvalidModelError
/// on a size mismatch or coincident points.
ModelReport validate_model(const ProximityModel& m);

/// Minimum pairwise squared distance (lambda^2). Throws InputError with
/// fewer than two points and InvalidModelError on coincident points.
Rational precision2(const ProximityModel& m);

struct SegmentWitness {
    Edge e;
    Edge f;
    IntersectionKind kind;               ///< proper, touch or overlap
    std::optional<CrossingPoint> point;  ///< for proper crossings
};

/// Pairs of straight-line edge segments of the model's drawing that meet
/// somewhere other than a shared endpoint. Empty means the straight-line
/// drawing is a plane embedding.
std::vector<SegmentWitness> straight_line_crossings(const ProximityModel& m);

enum class PlanarityVerdict {
    planar_by_theorem,   ///< precision2 > 1/2 and no crossing found
    planar_by_check,     ///< precision2 <= 1/2 but the drawing has no crossing
    not_planar_drawing,  ///< straight-line drawing has a crossing
};

const char* to_string(PlanarityVerdict v);

/// Throws TheoremViolationError if a crossing turns up in a model whose
/// precision2 exceeds 1/2.
PlanarityVerdict planarity_verdict(const ProximityModel& m);

/// 2 - x^2: squared separation between the two regions lying farther than
/// 1/sqrt(2) from both endpoints of an edge of length x. Requires 0 < x <= 1.
Rational conflict_gap2(const Rational& x);

}  // namespace udgcut
