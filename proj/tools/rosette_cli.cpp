// rosette: render star/rosette patterns and tilings to SVG.
//
//   rosette render --config <file> --out <file.svg>
//   rosette render --preset <name> --out <file.svg>
//   rosette presets
//   rosette validate --config <file>
//   rosette serve --port <n>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rosette/config.hpp"
#include "rosette/error.hpp"
#include "rosette/presets.hpp"
#include "rosette/service.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

rosette::ConfigDoc load_config(const std::string& path) { return rosette::parse_config(read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star, rosette and tiling pattern renderer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset_name;
    std::string out_path;
    auto* render = app.add_subcommand("render", "Render a config or preset to SVG");
    auto* config_opt = render->add_option("--config", config_path, "Config file")->check(CLI::ExistingFile);
    render->add_option("--preset", preset_name, "Built-in preset name")->excludes(config_opt);
    render->add_option("--out", out_path, "Output SVG path")->required();

    auto* presets = app.add_subcommand("presets", "List built-in presets");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a config file (exit 0 if valid)");
    validate->add_option("--config", validate_path, "Config file")->required();

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "Start the HTTP render service");
    serve->add_option("--port", port, "TCP port")->required()->check(CLI::Range(1, 65535));
    serve->add_option("--host", host, "Bind address");

    CLI11_PARSE(app, argc, argv);

    try {
        if (render->parsed()) {
            if (config_path.empty() == preset_name.empty()) {
                std::cerr << "render: give exactly one of --config or --preset\n";
                return 2;
            }
            const rosette::ConfigDoc doc =
                preset_name.empty() ? load_config(config_path) : rosette::find_preset(preset_name).config;
            const rosette::RenderResponse out = rosette::render_config(doc);
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot write " + out_path);
            file << out.svg;
            for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
            std::cout << out.segment_count << " segments -> " << out_path << '\n';
        } else if (presets->parsed()) {
            for (const auto& p : rosette::list_presets()) {
                std::cout << p.name << '\t' << p.provenance;
                if (!p.notes.empty()) std::cout << " [" << p.notes << ']';
                std::cout << '\n';
            }
        } else if (validate->parsed()) {
            try {
                load_config(validate_path);
            } catch (const rosette::Error& e) {
                std::cerr << validate_path << ": " << e.what() << '\n';
                return 1;
            }
            std::cout << validate_path << ": ok\n";
        } else if (serve->parsed()) {
            rosette::RenderService service;
            std::cout << "listening on http://" << host << ':' << port << '\n' << std::flush;
            if (!service.listen(host, port)) {
                std::cerr << "cannot bind " << host << ':' << port << '\n';
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
