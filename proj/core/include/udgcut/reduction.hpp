#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "udgcut/drawing.hpp"
#include "udgcut/gadget.hpp"
#include "udgcut/graph.hpp"
#include "udgcut/udg_model.hpp"

namespace udgcut {

enum class Role {
    original,     ///< a vertex of the source graph
    subdivision,  ///< interior vertex of an original edge's path
    gadget_w,     ///< apex w_i of a crossing gadget
    detour_apex,  ///< extra vertex fixing an odd path length
};

const char* to_string(Role r);

struct VertexInfo {
    Role role = Role::original;
    /// Source vertex id for originals, otherwise index of the source edge
    /// (in Graph::edges() order). For gadget_w: unused, see `crossing`.
    std::size_t origin = 0;
    /// Index of the crossing site this vertex belongs to, if any.
    std::optional<std::size_t> crossing;
};

struct CrossingSite {
    Point point;  ///< crossing point of the standard drawing
    Edge horizontal;
    Edge vertical;
};

struct ReductionOutput {
    Graph source;
    /// U(G) together with its exact coordinates; model.graph is U(G).
    ProximityModel model;
    std::size_t k = 0;  ///< crossing count = gadget count
    std::size_t t = 0;  ///< subdivision vertices on original-edge paths
    std::vector<VertexInfo> provenance;
    /// Interior vertex count of each source edge's path, in edges() order.
    std::vector<std::pair<Edge, std::size_t>> per_edge_subdivisions;
    std::vector<CrossingSite> crossings;
    std::vector<GadgetInstance> gadgets;
    MeshDrawing drawing;  ///< the standard drawing the model was built from

    const Graph& result() const { return model.graph; }
};

/// Intermediate models for inspection and testing.
struct ReductionTrace {
    ProximityModel after_subdivision;  ///< unit-spaced vertices, crossing points left empty
    ProximityModel after_rewiring;     ///< crossing edges re-routed, before gadgets
};

/// Compile a max-degree-4 graph into a (1/sqrt 2)-precision unit disk graph
/// U(G) with mc(U(G)) = mc(G) + 8k + t. Throws UnsupportedInputError for
/// degree > 4 and ConstructionError if an internal check fails.
ReductionOutput reduce(const Graph& g, ReductionTrace* trace = nullptr);

/// mc(G) = mc(U(G)) - 8k - t. Throws InconsistencyError if negative.
std::size_t recover_mc(std::size_t mc_u, std::size_t k, std::size_t t);

/// Two far-apart copies of a model: the second translated right by more than
/// the model's x-extent plus 2, so no cross-copy pair is within unit distance.
ProximityModel bisection_double(const ProximityModel& m);
ProximityModel bisection_double(const ReductionOutput& r);

}  // namespace udgcut
