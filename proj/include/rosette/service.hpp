#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "rosette/config.hpp"

namespace rosette {

struct RenderResponse {
    std::string svg;
    std::size_t segment_count = 0;
    std::vector<std::string> warnings;
};

// The one render path shared by the CLI and the HTTP service: star mode
// generates the pattern, tiling mode tiles the plane, then renders SVG.
// Validates first; throws ValidationError.
RenderResponse render_config(const ConfigDoc& doc);

// Stateless service entry point; same result as render_config.
RenderResponse serve_render(const ConfigDoc& request);

// JSON bodies mirror the config keys. Unknown keys and wrong types throw
// ValidationError naming the key.
ConfigDoc config_from_json(const nlohmann::json& body);
nlohmann::json config_to_json(const ConfigDoc& doc);
nlohmann::json presets_json();

// HTTP front end:
//   POST /render   config JSON -> {svg, segment_count, warnings}; 400 {field, reason}
//   GET  /presets  [{name, provenance, notes, config}]
class RenderService {
public:
    RenderService();
    ~RenderService();
    RenderService(const RenderService&) = delete;
    RenderService& operator=(const RenderService&) = delete;

    // Blocks until stop(). Returns false if the socket could not be bound.
    bool listen(const std::string& host, int port);

    // Binds an ephemeral port and returns it (or -1); serve with listen_after_bind().
    int bind_to_any_port(const std::string& host);
    bool listen_after_bind();

    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace rosette
