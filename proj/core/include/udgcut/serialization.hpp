#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udgcut/drawing.hpp"
#include "udgcut/reduction.hpp"
#include "udgcut/udg_model.hpp"

namespace udgcut {

/// Every coordinate in the JSON documents below is an integer in 1/20 mesh
/// units (the "scale" field). Output is deterministic: the same value
/// always serializes to the same bytes.

std::string reduction_to_json(const ReductionOutput& r);

/// Model document without reduction bookkeeping.
std::string model_to_json(const ProximityModel& m);

/// Placements and polylines in integer mesh coordinates.
std::string drawing_to_json(const MeshDrawing& d);

struct ModelDocument {
    ProximityModel model;
    std::vector<std::optional<Role>> roles;  ///< one per vertex; nullopt when absent
    std::optional<std::size_t> k;
    std::optional<std::size_t> t;
};

/// Reads a document written by reduction_to_json or model_to_json. Vertex
/// ids must be 0..n-1 in order. Throws InputError on malformed input.
ModelDocument parse_model_json(std::string_view text);

}  // namespace udgcut
