#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rosette/pattern.hpp"
#include "rosette/tiling.hpp"

namespace rosette {

enum class Mode { star, tiling };

struct TilingFields {
    double radius = 100.0;
    int rows = 3;
    int cols = 3;
    int gap_n = 6;
    double inner_ratio = 0.5;
    bool fill_down_gaps = true;

    friend bool operator==(const TilingFields&, const TilingFields&) = default;
};

struct RenderOptions {
    double stroke_width = 1.0;  // output pixels
    int size = 800;             // pixels along the longer side
    double margin_ratio = 0.05;

    friend bool operator==(const RenderOptions&, const RenderOptions&) = default;
};

// Everything a render needs. `tiling` is always present in tiling mode;
// in star mode it is present only if tiling keys were given.
struct ConfigDoc {
    Mode mode = Mode::star;
    PatternSpec pattern;
    std::optional<TilingFields> tiling;
    RenderOptions render;

    // Throws ValidationError with the offending key as field.
    void validate() const;

    TilingSpec tiling_spec() const;

    friend bool operator==(const ConfigDoc&, const ConfigDoc&) = default;
};

std::string_view to_string(Mode mode);

// Parses `key = value` lines. `#` starts a comment; blank lines are
// ignored; keys are case-sensitive. mode, N, S and radii are required.
// Throws SyntaxError for malformed lines, unknown or repeated keys, and
// missing required keys; ValidationError when the values violate a
// pattern or tiling invariant.
ConfigDoc parse_config(std::string_view text);

// Inverse of parse_config: parse_config(serialize_config(c)) == c.
// Reals are written in shortest round-trip form.
std::string serialize_config(const ConfigDoc& doc);

}  // namespace rosette
