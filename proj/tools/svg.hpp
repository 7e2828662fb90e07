#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udgcut/reduction.hpp"
#include "udgcut/udg_model.hpp"

namespace udgcut::cli {

/// One disk of diameter 1 per vertex plus a segment per edge, y axis up.
/// Coordinates stay in 1/20 mesh units. `roles` may be empty.
std::string render_svg(const ProximityModel& m, const std::vector<std::optional<Role>>& roles);

}  // namespace udgcut::cli
