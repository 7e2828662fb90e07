#pragma once

#include <array>
#include <optional>
#include <vector>

#include "udgcut/geometry.hpp"
#include "udgcut/graph.hpp"
#include "udgcut/udg_model.hpp"

namespace udgcut {

/// The crossing gadget H on v0..v3 (ids 0..3) and w0..w3 (ids 4..7):
/// a K4 on the v's plus triangles {w_i, v_i, v_(i+1 mod 4)}. 14 edges.
Graph build_H();

/// Exact (1/sqrt 2)-precision proximity model of H centered at `center`:
/// v's at center + (1/2,0), (0,1/2), (-1/2,0), (0,-1/2) and
/// w's at center + (4/5,4/5), (-4/5,4/5), (-4/5,-4/5), (4/5,-4/5).
ProximityModel h_model(Point center = {});

/// Offsets of the eight H vertices, in build_H id order.
std::array<Point, 8> h_offsets();

struct GadgetInstance {
    std::array<VertexId, 4> v_ids;
    std::array<VertexId, 4> w_ids;
    std::optional<Point> center;  ///< set when the gadget is placed geometrically
    std::vector<Edge> added_edges;
};

enum class GadgetPrecondition {
    enforce,  ///< reject hosts that already hold a cycle edge v_i v_(i+1)
    relax,    ///< allow them (the +8 identity then fails; used as a negative control)
};

struct GadgetResult {
    Graph graph;
    GadgetInstance instance;
};

/// Plant H on the host edges e1 = (v0, v2) and e2 = (v1, v3); the order of
/// each pair fixes the labelling. Appends w0..w3 as fresh vertices and adds
/// the edges that make the induced subgraph on the eight vertices H.
/// Throws PreconditionError when an edge is missing, the two edges share an
/// endpoint, or (under `enforce`) a cycle edge is already present.
GadgetResult construct_H_on(const Graph& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2,
                            GadgetPrecondition mode = GadgetPrecondition::enforce);

}  // namespace udgcut
