#include "udgcut/serialization.hpp"

#include <json.hpp>

#include "udgcut/errors.hpp"

namespace udgcut {

namespace {

using Json = nlohmann::ordered_json;

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json vertices_json(const ProximityModel& m, const std::vector<VertexInfo>* info) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.points.size(); ++i) {
        Json v;
        v["id"] = i;
        v["x"] = m.points[i].x;
        v["y"] = m.points[i].y;
        if (info) {
            const VertexInfo& vi = (*info)[i];
            v["role"] = to_string(vi.role);
            if (vi.role == Role::gadget_w)
                v["origin"] = nullptr;
            else
                v["origin"] = vi.origin;
            if (vi.crossing) v["crossing"] = *vi.crossing;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (const Edge& e : g.edges()) out.push_back(edge_json(e));
    return out;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

std::optional<Role> role_from(std::string_view s) {
    for (Role r : {Role::original, Role::subdivision, Role::gadget_w, Role::detour_apex})
        if (s == to_string(r)) return r;
    return std::nullopt;
}

std::int64_t integer_field(const Json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string("missing field \"") + key + "\"");
    if (!it->is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return it->get<std::int64_t>();
}

std::size_t count_field(const Json& obj, const char* key) {
    const std::int64_t v = integer_field(obj, key);
    if (v < 0) throw InputError(std::string("field \"") + key + "\" must be non-negative");
    return static_cast<std::size_t>(v);
}

}  // namespace

std::string reduction_to_json(const ReductionOutput& r) {
    Json j;
    j["scale"] = kScale;
    j["vertices"] = vertices_json(r.model, &r.provenance);
    j["edges"] = edges_json(r.model.graph);
    j["k"] = r.k;
    j["t"] = r.t;
    Json per_edge = Json::array();
    for (const auto& [e, count] : r.per_edge_subdivisions)
        per_edge.push_back({{"edge", edge_json(e)}, {"count", count}});
    j["per_edge_subdivisions"] = std::move(per_edge);
    Json sites = Json::array();
    for (std::size_t c = 0; c < r.crossings.size(); ++c) {
        const CrossingSite& s = r.crossings[c];
        Json site;
        site["point"] = point_json(s.point);
        site["horizontal"] = edge_json(s.horizontal);
        site["vertical"] = edge_json(s.vertical);
        if (c < r.gadgets.size()) {
            site["v"] = r.gadgets[c].v_ids;
            site["w"] = r.gadgets[c].w_ids;
        }
        sites.push_back(std::move(site));
    }
    j["crossings"] = std::move(sites);
    j["source"] = {{"n", r.source.vertex_count()}, {"edges", edges_json(r.source)}};
    return finish(j);
}

std::string model_to_json(const ProximityModel& m) {
    if (m.points.size() != m.graph.vertex_count()) throw InvalidModelError("model size mismatch");
    Json j;
    j["scale"] = kScale;
    j["vertices"] = vertices_json(m, nullptr);
    j["edges"] = edges_json(m.graph);
    return finish(j);
}

std::string drawing_to_json(const MeshDrawing& d) {
    auto mesh = [](Point p) { return Json::array({p.x / kScale, p.y / kScale}); };
    Json j;
    Json placement = Json::array();
    for (Point p : d.placement) placement.push_back(mesh(p));
    j["placement"] = std::move(placement);
    Json routes = Json::array();
    for (const Route& r : d.routes) {
        Json path = Json::array();
        for (Point p : r.path) path.push_back(mesh(p));
        routes.push_back({{"edge", edge_json(r.edge)}, {"path", std::move(path)}});
    }
    j["routes"] = std::move(routes);
    return finish(j);
}

ModelDocument parse_model_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("model document must be a JSON object");
    if (j.contains("scale") && integer_field(j, "scale") != kScale)
        throw InputError("unsupported scale " + j["scale"].dump() + " (expected " + std::to_string(kScale) + ")");

    const auto vit = j.find("vertices");
    if (vit == j.end() || !vit->is_array()) throw InputError("missing \"vertices\" array");
    ModelDocument doc;
    doc.model.graph = Graph(vit->size());
    bool any_role = false;
    for (std::size_t i = 0; i < vit->size(); ++i) {
        const Json& v = (*vit)[i];
        if (!v.is_object()) throw InputError("vertex " + std::to_string(i) + " is not an object");
        if (count_field(v, "id") != i) throw InputError("vertex ids must be 0..n-1 in order");
        doc.model.points.push_back({integer_field(v, "x"), integer_field(v, "y")});
        std::optional<Role> role;
        if (const auto r = v.find("role"); r != v.end()) {
            if (!r->is_string()) throw InputError("vertex " + std::to_string(i) + " role must be a string");
            role = role_from(r->get<std::string>());
            if (!role) throw InputError("vertex " + std::to_string(i) + " has unknown role " + r->dump());
            any_role = true;
        }
        doc.roles.push_back(role);
    }
    if (!any_role) doc.roles.clear();

    const auto eit = j.find("edges");
    if (eit == j.end() || !eit->is_array()) throw InputError("missing \"edges\" array");
    for (const Json& e : *eit) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw InputError("edge " + e.dump() + " is not a pair of vertex ids");
        const auto u = e[0].get<std::uint64_t>();
        const auto w = e[1].get<std::uint64_t>();
        if (u >= doc.model.graph.vertex_count() || w >= doc.model.graph.vertex_count())
            throw InputError("edge " + e.dump() + " out of range");
        if (u == w) throw InputError("edge " + e.dump() + " is a loop");
        if (doc.model.graph.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(w)))
            throw InputError("duplicate edge " + e.dump());
        doc.model.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(w));
    }
    if (j.contains("k")) doc.k = count_field(j, "k");
    if (j.contains("t")) doc.t = count_field(j, "t");
    return doc;
}

}  // namespace udgcut
