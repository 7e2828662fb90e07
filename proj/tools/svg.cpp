#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace udgcut::cli {

namespace {

constexpr std::int64_t kRadius = kScale / 2;
constexpr std::int64_t kMargin = kScale;

const char* fill_of(const Role* r) {
    if (r == nullptr) return "#9aa5b1";
    switch (*r) {
        case Role::original: return "#1f77b4";
        case Role::subdivision: return "#c7c7c7";
        case Role::gadget_w: return "#d62728";
        case Role::detour_apex: return "#2ca02c";
    }
    return "#9aa5b1";
}

}  // namespace

std::string render_svg(const ProximityModel& m, const std::vector<std::optional<Role>>& roles) {
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    if (!m.points.empty()) {
        min_x = max_x = m.points.front().x;
        min_y = max_y = m.points.front().y;
        for (Point p : m.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const std::int64_t left = min_x - kRadius - kMargin;
    const std::int64_t width = max_x - min_x + 2 * (kRadius + kMargin);
    const std::int64_t height = max_y - min_y + 2 * (kRadius + kMargin);
    // Flip y so larger coordinates sit higher on the page.
    const std::int64_t top = max_y + kRadius + kMargin;
    auto sx = [&](Point p) { return p.x - left; };
    auto sy = [&](Point p) { return top - p.y; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
    for (const Edge& e : m.graph.edges()) {
        const Point a = m.points[e.u];
        const Point b = m.points[e.v];
        os << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
           << "\"/>\n";
    }
    os << "</g>\n<g fill-opacity=\"0.35\" stroke=\"#333333\" stroke-width=\"0.5\">\n";
    for (std::size_t i = 0; i < m.points.size(); ++i) {
        const Point p = m.points[i];
        const Role* role = i < roles.size() && roles[i] ? &*roles[i] : nullptr;
        os << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << kRadius << "\" fill=\"" << fill_of(role)
           << "\"><title>" << i;
        if (role) os << ' ' << to_string(*role);
        os << "</title></circle>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace udgcut::cli
