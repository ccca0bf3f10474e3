#include "rosette/service.hpp"

#include <algorithm>
#include <limits>

#include <httplib.h>

#include "rosette/error.hpp"
#include "rosette/presets.hpp"
#include "rosette/svg.hpp"
#include "rosette/tiling.hpp"

namespace rosette {

namespace {

using nlohmann::json;

const json& at(const json& body, const char* key) { return body.at(key); }

int json_int(const json& body, const char* key) {
    const json& v = at(body, key);
    if (!v.is_number_integer()) throw ValidationError(key, "expected an integer");
    const auto i = v.get<long long>();
    if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
        throw ValidationError(key, "integer out of range");
    return static_cast<int>(i);
}

double json_real(const json& body, const char* key) {
    const json& v = at(body, key);
    if (!v.is_number()) throw ValidationError(key, "expected a number");
    return v.get<double>();
}

std::vector<std::string> collect_warnings(const ConfigDoc& doc, std::size_t emitted) {
    std::vector<std::string> warnings;
    const PatternSpec& p = doc.pattern;
    if (p.special && p.green_radius() > p.max_radius())
        warnings.push_back("special points lie outside the outermost circle");
    if (doc.mode == Mode::star) {
        if (emitted < expected_segment_count(p))
            warnings.push_back(std::to_string(expected_segment_count(p) - emitted) +
                               " zero-length segments dropped");
        if (doc.tiling) warnings.push_back("tiling keys are ignored in star mode");
    }
    return warnings;
}

json error_body(const std::string& field, const std::string& reason) {
    return {{"field", field}, {"reason", reason}};
}

}  // namespace

RenderResponse render_config(const ConfigDoc& doc) {
    doc.validate();
    const SegmentSet segments =
        doc.mode == Mode::star ? generate(doc.pattern) : tile_plane(doc.tiling_spec());
    RenderResponse out;
    out.svg = render_svg(segments, doc.render);
    out.segment_count = segments.size();
    out.warnings = collect_warnings(doc, segments.size());
    return out;
}

RenderResponse serve_render(const ConfigDoc& request) { return render_config(request); }

ConfigDoc config_from_json(const json& body) {
    if (!body.is_object()) throw ValidationError("", "request body must be a JSON object");
    static const std::vector<std::string> known{
        "mode", "N",    "S",     "radii",       "alpha",          "spr",          "special", "base_rotation", "R",
        "rows", "cols", "gap_N", "inner_ratio", "fill_down_gaps", "stroke_width", "size",    "margin_ratio"};
    for (const auto& [key, _] : body.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ValidationError(key, "unknown key");
    for (const char* key : {"mode", "N", "S", "radii"})
        if (!body.contains(key)) throw ValidationError(key, "required");

    ConfigDoc doc;
    const json& mode = body["mode"];
    if (mode == "star") {
        doc.mode = Mode::star;
    } else if (mode == "tiling") {
        doc.mode = Mode::tiling;
    } else {
        throw ValidationError("mode", "must be \"star\" or \"tiling\"");
    }

    doc.pattern.n = json_int(body, "N");
    doc.pattern.s = json_int(body, "S");
    const json& radii = body["radii"];
    if (!radii.is_array()) throw ValidationError("radii", "expected an array of numbers");
    doc.pattern.radii.clear();
    for (const json& r : radii) {
        if (!r.is_number()) throw ValidationError("radii", "expected an array of numbers");
        doc.pattern.radii.push_back(r.get<double>());
    }
    if (body.contains("alpha")) doc.pattern.alpha = json_real(body, "alpha");
    if (body.contains("spr")) doc.pattern.spr = json_real(body, "spr");
    if (body.contains("base_rotation")) doc.pattern.base_rotation = json_real(body, "base_rotation");
    if (body.contains("special")) {
        const json& sp = body["special"];
        if (!(sp.is_null() || sp == "none")) doc.pattern.special = json_int(body, "special");
    }

    bool any_tiling = doc.mode == Mode::tiling;
    for (const char* key : {"R", "rows", "cols", "gap_N", "inner_ratio", "fill_down_gaps"})
        any_tiling = any_tiling || body.contains(key);
    if (any_tiling) {
        TilingFields t;
        if (body.contains("R")) t.radius = json_real(body, "R");
        if (body.contains("rows")) t.rows = json_int(body, "rows");
        if (body.contains("cols")) t.cols = json_int(body, "cols");
        if (body.contains("gap_N")) t.gap_n = json_int(body, "gap_N");
        if (body.contains("inner_ratio")) t.inner_ratio = json_real(body, "inner_ratio");
        if (body.contains("fill_down_gaps")) {
            if (!body["fill_down_gaps"].is_boolean()) throw ValidationError("fill_down_gaps", "expected a boolean");
            t.fill_down_gaps = body["fill_down_gaps"].get<bool>();
        }
        doc.tiling = t;
    }

    if (body.contains("stroke_width")) doc.render.stroke_width = json_real(body, "stroke_width");
    if (body.contains("size")) doc.render.size = json_int(body, "size");
    if (body.contains("margin_ratio")) doc.render.margin_ratio = json_real(body, "margin_ratio");

    doc.validate();
    return doc;
}

json config_to_json(const ConfigDoc& doc) {
    const PatternSpec& p = doc.pattern;
    json j{{"mode", std::string(to_string(doc.mode))},
           {"N", p.n},
           {"S", p.s},
           {"radii", p.radii},
           {"alpha", p.alpha},
           {"spr", p.spr},
           {"special", p.special ? json(*p.special) : json("none")},
           {"base_rotation", p.base_rotation},
           {"stroke_width", doc.render.stroke_width},
           {"size", doc.render.size},
           {"margin_ratio", doc.render.margin_ratio}};
    if (doc.tiling) {
        j["R"] = doc.tiling->radius;
        j["rows"] = doc.tiling->rows;
        j["cols"] = doc.tiling->cols;
        j["gap_N"] = doc.tiling->gap_n;
        j["inner_ratio"] = doc.tiling->inner_ratio;
        j["fill_down_gaps"] = doc.tiling->fill_down_gaps;
    }
    return j;
}

json presets_json() {
    json list = json::array();
    for (const Preset& p : list_presets())
        list.push_back({{"name", p.name},
                        {"provenance", p.provenance},
                        {"notes", p.notes},
                        {"config", config_to_json(p.config)}});
    return list;
}

struct RenderService::Impl {
    httplib::Server server;
};

RenderService::RenderService() : impl_(std::make_unique<Impl>()) {
    auto& server = impl_->server;

    server.Post("/render", [](const httplib::Request& req, httplib::Response& res) {
        json body;
        try {
            body = json::parse(req.body);
        } catch (const json::parse_error& e) {
            res.status = 400;
            res.set_content(error_body("", std::string("invalid JSON: ") + e.what()).dump(), "application/json");
            return;
        }
        try {
            const RenderResponse out = serve_render(config_from_json(body));
            json reply{{"svg", out.svg}, {"segment_count", out.segment_count}, {"warnings", out.warnings}};
            res.set_content(reply.dump(), "application/json");
        } catch (const InvalidParameter& e) {
            res.status = 400;
            res.set_content(error_body(e.field(), e.reason()).dump(), "application/json");
        } catch (const Error& e) {
            res.status = 400;
            res.set_content(error_body("", e.what()).dump(), "application/json");
        }
    });

    server.Get("/presets", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(presets_json().dump(), "application/json");
    });
}

RenderService::~RenderService() { stop(); }

bool RenderService::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int RenderService::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool RenderService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void RenderService::stop() {
    if (impl_->server.is_running()) impl_->server.stop();
}

void RenderService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace rosette
